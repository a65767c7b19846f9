#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "odlin/rat.hpp"

namespace odlin {

// Fixed-length vector of exact rationals.
class RatVec {
public:
    RatVec() = default;
    explicit RatVec(std::size_t n) : e_(n) {}
    RatVec(std::initializer_list<Rat> init) : e_(init) {}
    explicit RatVec(std::vector<Rat> entries) : e_(std::move(entries)) {}

    std::size_t size() const { return e_.size(); }
    Rat& operator[](std::size_t i) { return e_[i]; }
    const Rat& operator[](std::size_t i) const { return e_[i]; }

    bool is_zero() const;
    bool is_integral() const;
    bool is_nonnegative() const;

    RatVec& operator+=(const RatVec& o);
    RatVec& operator-=(const RatVec& o);
    friend RatVec operator+(RatVec a, const RatVec& b) { a += b; return a; }
    friend RatVec operator-(RatVec a, const RatVec& b) { a -= b; return a; }
    RatVec operator-() const;
    friend RatVec operator*(const Rat& c, const RatVec& v);

    friend bool operator==(const RatVec& a, const RatVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const RatVec& a, const RatVec& b) { return !(a == b); }
    friend bool operator<(const RatVec& a, const RatVec& b);  // lexicographic

    std::string str() const;

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

private:
    std::vector<Rat> e_;
};

// Dense rectangular matrix of exact rationals. Row and column counts are
// fixed at construction.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    RatMat(std::initializer_list<std::initializer_list<Rat>> init);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatVec row(std::size_t i) const;
    RatVec col(std::size_t j) const;
    void set_col(std::size_t j, const RatVec& v);

    bool is_integral() const;
    bool is_nonnegative() const;

    RatMat& operator+=(const RatMat& o);
    friend RatMat operator+(RatMat a, const RatMat& b) { a += b; return a; }
    RatMat operator-(const RatMat& o) const;
    friend RatMat operator*(const Rat& c, const RatMat& m);

    RatMat mul(const RatMat& o) const;
    RatVec mul(const RatVec& v) const;

    // Horizontal concatenation [this | o]; row counts must match.
    RatMat hcat(const RatMat& o) const;

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }
    friend bool operator<(const RatMat& a, const RatMat& b);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

RatVec zero_vec(std::size_t n);
RatMat zero_mat(std::size_t rows, std::size_t cols);

}  // namespace odlin
