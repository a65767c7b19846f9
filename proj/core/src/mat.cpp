#include "odlin/mat.hpp"

#include <cassert>
#include <sstream>

namespace odlin {

bool RatVec::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool RatVec::is_integral() const {
    for (const auto& x : e_)
        if (!x.is_integer()) return false;
    return true;
}

bool RatVec::is_nonnegative() const {
    for (const auto& x : e_)
        if (x.is_negative()) return false;
    return true;
}

RatVec& RatVec::operator+=(const RatVec& o) {
    assert(size() == o.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

RatVec& RatVec::operator-=(const RatVec& o) {
    assert(size() == o.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

RatVec RatVec::operator-() const {
    RatVec r(size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = -e_[i];
    return r;
}

RatVec operator*(const Rat& c, const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool operator<(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

std::string RatVec::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ", ";
        os << e_[i].str();
    }
    os << ")";
    return os.str();
}

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        assert(r.size() == cols_);
        for (const auto& x : r) e_.push_back(x);
    }
}

RatVec RatMat::row(std::size_t i) const {
    RatVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RatVec RatMat::col(std::size_t j) const {
    RatVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

void RatMat::set_col(std::size_t j, const RatVec& v) {
    assert(v.size() == rows_);
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool RatMat::is_integral() const {
    for (const auto& x : e_)
        if (!x.is_integer()) return false;
    return true;
}

bool RatMat::is_nonnegative() const {
    for (const auto& x : e_)
        if (x.is_negative()) return false;
    return true;
}

RatMat& RatMat::operator+=(const RatMat& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

RatMat RatMat::operator-(const RatMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    RatMat r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

RatMat operator*(const Rat& c, const RatMat& m) {
    RatMat r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) r.e_[i] = c * m.e_[i];
    return r;
}

RatMat RatMat::mul(const RatMat& o) const {
    assert(cols_ == o.rows_);
    RatMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

RatVec RatMat::mul(const RatVec& v) const {
    assert(cols_ == v.size());
    RatVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

RatMat RatMat::hcat(const RatMat& o) const {
    assert(rows_ == o.rows_);
    RatMat r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

bool operator<(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
        if (a.e_[i] < b.e_[i]) return true;
        if (b.e_[i] < a.e_[i]) return false;
    }
    return false;
}

std::string RatMat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

RatVec zero_vec(std::size_t n) { return RatVec(n); }
RatMat zero_mat(std::size_t rows, std::size_t cols) { return RatMat(rows, cols); }

}  // namespace odlin
