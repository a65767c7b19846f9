#include "odlin/histogram.hpp"

#include <cassert>

namespace odlin {

HistogramCheck is_histogram(const RatMat& m, HistMode mode) {
    HistogramCheck out;
    const std::size_t r = m.rows(), c = m.cols();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (m.at(i, j).is_negative()) {
                out.row = static_cast<long>(i);
                out.col = static_cast<long>(j);
                out.reason = "negative entry";
                return out;
            }
            if (mode == HistMode::Integer && !m.at(i, j).is_integer()) {
                out.row = static_cast<long>(i);
                out.col = static_cast<long>(j);
                out.reason = "non-integral entry in integer mode";
                return out;
            }
        }
    Rat degree;
    for (std::size_t i = 0; i < r; ++i) {
        Rat s;
        for (std::size_t j = 0; j < c; ++j) s += m.at(i, j);
        if (i == 0) {
            degree = s;
        } else if (s != degree) {
            out.row = static_cast<long>(i);
            out.reason = "row sums differ";
            return out;
        }
    }
    // Dominance: sum of the first j entries of row i must cover the first
    // j+1 entries of row i+1, for j = 0..c-1.
    for (std::size_t i = 0; c > 0 && i + 1 < r; ++i) {
        Rat upper, lower = m.at(i + 1, 0);
        for (std::size_t j = 0; j < c; ++j) {
            if (upper < lower) {
                out.row = static_cast<long>(i);
                out.col = static_cast<long>(j);
                out.reason = "prefix dominance fails";
                return out;
            }
            upper += m.at(i, j);
            if (j + 1 < c) lower += m.at(i + 1, j + 1);
        }
    }
    out.ok = true;
    out.degree = degree;
    return out;
}

RatMat profile(const RatMat& m) {
    const std::size_t r = m.rows(), c = m.cols();
    if (r == 0) return RatMat(0, c + 1);
    RatMat p(r - 1, c + 1);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        Rat upper, lower = c > 0 ? m.at(i + 1, 0) : Rat(0);
        for (std::size_t j = 0; j <= c; ++j) {
            p.at(i, j) = upper - lower;
            if (j < c) {
                upper += m.at(i, j);
                lower += (j + 1 < c) ? m.at(i + 1, j + 1) : Rat(0);
            }
        }
    }
    return p;
}

bool is_histogram_via_profile(const RatMat& m) {
    if (!m.is_nonnegative()) return false;
    RatMat p = profile(m);
    if (!p.is_nonnegative()) return false;
    const std::size_t pc = p.cols();
    for (std::size_t i = 0; i < p.rows(); ++i)
        if (!p.at(i, pc - 1).is_zero()) return false;
    // Equal row sums between consecutive rows is all the last column gives;
    // with one row there is nothing to compare and the test is vacuous,
    // matching the direct definition.
    return true;
}

SimpleHistogram::SimpleHistogram(std::size_t r, std::size_t c, std::vector<std::size_t> p)
    : rows(r), cols(c), place(std::move(p)) {
    if (place.size() != rows) throw input_error("simple histogram placement arity mismatch");
    for (std::size_t i = 0; i < place.size(); ++i) {
        if (place[i] >= cols) throw input_error("simple histogram placement out of range");
        if (i > 0 && place[i - 1] >= place[i])
            throw input_error("simple histogram placement must be strictly increasing");
    }
}

SimpleHistogram SimpleHistogram::identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return SimpleHistogram(n, n, std::move(p));
}

RatMat SimpleHistogram::to_matrix() const {
    RatMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m.at(i, place[i]) = Rat(1);
    return m;
}

std::vector<SimpleHistogram> decompose(const RatMat& h) {
    HistogramCheck chk = is_histogram(h, HistMode::Integer);
    if (!chk.ok) throw input_error("decompose: not an integer histogram: " + chk.reason);
    long s = chk.degree.to_long();

    std::vector<SimpleHistogram> out;
    RatMat rest = h;
    for (long step = 0; step < s; ++step) {
        std::vector<std::size_t> f(rest.rows());
        for (std::size_t i = 0; i < rest.rows(); ++i) {
            std::size_t j = 0;
            while (j < rest.cols() && !rest.at(i, j).is_positive()) ++j;
            assert(j < rest.cols());
            f[i] = j;
        }
        SimpleHistogram simple(rest.rows(), rest.cols(), std::move(f));
        rest = rest - simple.to_matrix();
        assert(is_histogram(rest, HistMode::Integer).ok);
        out.push_back(std::move(simple));
    }
    assert(rest == zero_mat(h.rows(), h.cols()));
    return out;
}

RatMat mul_simple(const RatMat& m, const SimpleHistogram& s) {
    if (m.cols() != s.rows) throw input_error("mul_simple: dimension mismatch");
    RatMat out(m.rows(), s.cols);
    for (std::size_t j = 0; j < m.cols(); ++j) out.set_col(s.place[j], m.col(j));
    assert(out == m.mul(s.to_matrix()));
    return out;
}

std::optional<SimpleHistogram> recover_simple(const RatMat& n, const RatMat& m) {
    if (n.rows() != m.rows()) throw input_error("recover_simple: row dimension mismatch");
    std::vector<std::size_t> f;
    std::size_t i = 0;
    for (std::size_t j = 0; j < n.cols(); ++j) {
        RatVec col = n.col(j);
        if (i < m.cols() && col == m.col(i)) {
            f.push_back(j);
            ++i;
        } else if (!col.is_zero()) {
            return std::nullopt;
        }
    }
    if (i < m.cols()) return std::nullopt;
    return SimpleHistogram(m.cols(), n.cols(), std::move(f));
}

RatMat smear(const RatMat& h, std::size_t col, const RatVec& left, const RatVec& right) {
    if (col >= h.cols()) throw input_error("smear: column out of range");
    if (left.size() != h.rows() || right.size() != h.rows())
        throw input_error("smear: split has wrong length");
    if (!left.is_nonnegative() || !right.is_nonnegative())
        throw input_error("smear: split must be nonnegative");
    if (left + right != h.col(col)) throw input_error("smear: split does not sum to the column");

    RatMat out(h.rows(), h.cols() + 1);
    for (std::size_t j = 0; j < col; ++j) out.set_col(j, h.col(j));
    out.set_col(col, left);
    out.set_col(col + 1, right);
    for (std::size_t j = col + 1; j < h.cols(); ++j) out.set_col(j + 1, h.col(j));
    if (is_histogram(h, HistMode::Rational).ok)
        assert(is_histogram(out, HistMode::Rational).ok);
    return out;
}

bool is_multihistogram(const Multihistogram& fam, const RatMat& d,
                       const std::vector<RatMat>& ms, HistMode mode) {
    if (fam.family.size() != ms.size()) return false;
    std::size_t c = fam.family.empty() ? 0 : fam.family[0].cols();
    for (std::size_t j = 0; j < fam.family.size(); ++j) {
        if (fam.family[j].cols() != c) return false;
        if (fam.family[j].rows() != ms[j].cols()) return false;
        if (!is_histogram(fam.family[j], mode).ok) return false;
    }
    const std::size_t n = d.cols();
    if (fam.family.empty()) return n == 0;

    // homog[j]: stacked column j solves the homogeneous system;
    // matches[j] bit i: it solves the system for target column i.
    if (n > 62) throw input_error("is_multihistogram: too many target columns");
    std::vector<bool> homog(c, false);
    std::vector<std::uint64_t> matches(c, 0);
    for (std::size_t j = 0; j < c; ++j) {
        RatVec prod(d.rows());
        for (std::size_t g = 0; g < ms.size(); ++g) prod += ms[g].mul(fam.family[g].col(j));
        homog[j] = prod.is_zero();
        for (std::size_t i = 0; i < n; ++i)
            if (prod == d.col(i)) matches[j] |= (1ULL << i);
        if (!homog[j] && matches[j] == 0) return false;
    }
    // Monotone assignment of targets to columns, every unassigned column
    // homogeneous: reachable[t] = targets matched after scanning a prefix.
    std::vector<bool> reach(n + 1, false), next(n + 1, false);
    reach[0] = true;
    for (std::size_t j = 0; j < c; ++j) {
        std::fill(next.begin(), next.end(), false);
        for (std::size_t t = 0; t <= n; ++t) {
            if (!reach[t]) continue;
            if (homog[j]) next[t] = true;
            if (t < n && ((matches[j] >> t) & 1U)) next[t + 1] = true;
        }
        reach.swap(next);
    }
    return reach[n];
}

}  // namespace odlin
