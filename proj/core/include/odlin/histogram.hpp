#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odlin/mat.hpp"

namespace odlin {

enum class HistMode { Integer, Rational };

struct HistogramCheck {
    bool ok = false;
    Rat degree;          // common row sum when ok
    long row = -1;       // first violated position when not ok (0-based)
    long col = -1;
    std::string reason;
};

// A histogram is a nonnegative matrix with equal row sums (the degree) and
// row-prefix dominance: sum H(i, 1..j) >= sum H(i+1, 1..j+1) for consecutive
// rows. Integer mode additionally requires integral entries. Degree 0
// (all-zero) matrices are admitted; that relaxation gives unused generator
// blocks a representation inside multihistograms.
HistogramCheck is_histogram(const RatMat& m, HistMode mode);

// Prefix-difference matrix over the zero-padded input, one row per pair of
// consecutive input rows. Column j (0-based, j = 0..c) holds
//   sum H(i, first j) - sum H_0(i+1, first j+1),
// so both boundary columns are present: column 0 captures the forced-zero
// condition and column c the row-sum differences.
RatMat profile(const RatMat& m);

// Histogram test via the profile characterization: input nonnegative,
// profile entrywise nonnegative, last profile column zero. Agrees with
// is_histogram on every input.
bool is_histogram_via_profile(const RatMat& m);

// Degree-1 histogram, equivalently a strictly increasing column-placement
// map {0..rows-1} -> {0..cols-1}.
struct SimpleHistogram {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> place;

    SimpleHistogram() = default;
    SimpleHistogram(std::size_t r, std::size_t c, std::vector<std::size_t> p);
    static SimpleHistogram identity(std::size_t n);

    RatMat to_matrix() const;

    friend bool operator==(const SimpleHistogram& a, const SimpleHistogram& b) {
        return a.rows == b.rows && a.cols == b.cols && a.place == b.place;
    }
};

// Writes an integer histogram of degree s as a sum of s simple histograms by
// repeatedly extracting the map i -> least column with a positive entry.
// Every intermediate remainder is re-validated as a histogram.
std::vector<SimpleHistogram> decompose(const RatMat& h);

// 0-extension of m placing column i at column place[i]; equals the matrix
// product m * S.
RatMat mul_simple(const RatMat& m, const SimpleHistogram& s);

// Converse of mul_simple: the lexicographically least simple histogram S
// with n = mul_simple(m, S), or nothing when n is not a 0-extension of m.
std::optional<SimpleHistogram> recover_simple(const RatMat& n, const RatMat& m);

// Replaces column j by the two given columns (which must be nonnegative and
// sum to it), yielding a matrix with one more column.
RatMat smear(const RatMat& h, std::size_t col, const RatVec& left, const RatVec& right);

// Family of histograms sharing a column dimension; the stacked columns form
// the word checked against the target-column language.
struct Multihistogram {
    std::vector<RatMat> family;
};

// Decides whether fam is a (D, M)-multihistogram: every member passes
// is_histogram in the given mode, and the word of stacked columns matches
//   C_0* C_{D(_,1)} C_0* ... C_{D(_,n)} C_0*
// where a column lies in C_a iff [M_1 | ... | M_k] column = a over the
// mode's nonnegative domain. The target assignment is found by left-to-right
// backtracking.
bool is_multihistogram(const Multihistogram& fam, const RatMat& d,
                       const std::vector<RatMat>& ms, HistMode mode);

}  // namespace odlin
