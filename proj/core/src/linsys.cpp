#include "odlin/linsys.hpp"

#include <algorithm>
#include <cassert>

namespace odlin {

LinSys::LinSys(RatMat coeff, RatVec rhs) : a(std::move(coeff)), b(std::move(rhs)) {
    if (b.size() != a.rows()) throw input_error("rhs length does not match equation count");
}

std::pair<RatVec, RatVec> split_pos_neg(const RatVec& v) {
    if (!v.is_integral()) throw input_error("split_pos_neg: non-integral entry");
    RatVec pos(v.size()), neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_positive())
            pos[i] = v[i];
        else
            neg[i] = -v[i];
    }
    return {pos, neg};
}

std::optional<RationalSolution> solve_rational(const LinSys& sys) {
    const std::size_t m = sys.equations(), n = sys.variables();
    RatMat w = sys.a;
    RatVec rhs = sys.b;

    std::vector<int> pivot_col_of_row(m, -1);
    std::vector<int> pivot_row_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && w.at(piv, col).is_zero()) ++piv;
        if (piv == m) continue;
        if (piv != rank) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(rank, j));
            std::swap(rhs[piv], rhs[rank]);
        }
        Rat inv = Rat(1) / w.at(rank, col);
        for (std::size_t j = col; j < n; ++j) w.at(rank, j) *= inv;
        rhs[rank] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || w.at(i, col).is_zero()) continue;
            Rat f = w.at(i, col);
            for (std::size_t j = col; j < n; ++j) w.at(i, j) -= f * w.at(rank, j);
            rhs[i] -= f * rhs[rank];
        }
        pivot_col_of_row[rank] = static_cast<int>(col);
        pivot_row_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    for (std::size_t i = rank; i < m; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;

    RationalSolution out;
    out.particular = RatVec(n);
    for (std::size_t r = 0; r < rank; ++r)
        out.particular[static_cast<std::size_t>(pivot_col_of_row[r])] = rhs[r];

    for (std::size_t free = 0; free < n; ++free) {
        if (pivot_row_of_col[free] >= 0) continue;
        RatVec k(n);
        k[free] = Rat(1);
        for (std::size_t r = 0; r < rank; ++r)
            k[static_cast<std::size_t>(pivot_col_of_row[r])] = -w.at(r, free);
        out.kernel.push_back(std::move(k));
    }
    assert(sys.check(out.particular));
    return out;
}

namespace {

// Column echelon form over Z by unimodular column operations, tracking the
// transform U with A * U = H.
struct ColumnEchelon {
    RatMat h;
    RatMat u;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col of H)
};

ColumnEchelon integer_column_echelon(const RatMat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    ColumnEchelon ce;
    ce.h = a;
    ce.u = RatMat(n, n);
    for (std::size_t i = 0; i < n; ++i) ce.u.at(i, i) = Rat(1);

    auto col_axpy = [&](RatMat& mat, std::size_t dst, std::size_t src, const mpz_class& f) {
        if (f == 0) return;
        Rat rf{mpq_class(f)};
        for (std::size_t i = 0; i < mat.rows(); ++i) mat.at(i, dst) += rf * mat.at(i, src);
    };
    auto col_swap = [&](RatMat& mat, std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < mat.rows(); ++i) std::swap(mat.at(i, x), mat.at(i, y));
    };
    auto col_combine = [&](std::size_t x, std::size_t y, const mpz_class& p, const mpz_class& q,
                           const mpz_class& r, const mpz_class& s) {
        // (col_x, col_y) <- (p*col_x + q*col_y, r*col_x + s*col_y), det = ps - qr = +-1
        for (RatMat* mat : {&ce.h, &ce.u}) {
            for (std::size_t i = 0; i < mat->rows(); ++i) {
                mpq_class cx = mat->at(i, x).raw(), cy = mat->at(i, y).raw();
                mat->at(i, x) = Rat(mpq_class(p * cx + q * cy));
                mat->at(i, y) = Rat(mpq_class(r * cx + s * cy));
            }
        }
    };

    std::size_t lead = 0;
    for (std::size_t row = 0; row < m && lead < n; ++row) {
        std::size_t nz = lead;
        while (nz < n && ce.h.at(row, nz).is_zero()) ++nz;
        if (nz == n) continue;
        if (nz != lead) {
            col_swap(ce.h, lead, nz);
            col_swap(ce.u, lead, nz);
        }
        for (std::size_t j = lead + 1; j < n; ++j) {
            if (ce.h.at(row, j).is_zero()) continue;
            mpz_class x = ce.h.at(row, lead).num(), y = ce.h.at(row, j).num();
            mpz_class g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            // (lead, j) <- (p*lead + q*j, -(y/g)*lead + (x/g)*j); new lead entry g, new j entry 0
            col_combine(lead, j, p, q, -(y / g), x / g);
        }
        if (ce.h.at(row, lead).is_negative()) {
            col_axpy(ce.h, lead, lead, -2);  // negate via dst += -2*src
            col_axpy(ce.u, lead, lead, -2);
        }
        ce.pivots.emplace_back(row, lead);
        ++lead;
    }
    return ce;
}

}  // namespace

std::optional<RatVec> solve_integer(const LinSys& sys) {
    if (!sys.a.is_integral() || !sys.b.is_integral())
        throw input_error("solve_integer: non-integral system");
    const std::size_t m = sys.equations(), n = sys.variables();
    ColumnEchelon ce = integer_column_echelon(sys.a);

    RatVec y(n);
    std::size_t next_pivot = 0;
    for (std::size_t row = 0; row < m; ++row) {
        Rat residual = sys.b[row];
        for (std::size_t j = 0; j < n; ++j)
            if (!ce.h.at(row, j).is_zero() && !y[j].is_zero()) residual -= ce.h.at(row, j) * y[j];
        if (next_pivot < ce.pivots.size() && ce.pivots[next_pivot].first == row) {
            std::size_t pc = ce.pivots[next_pivot].second;
            ++next_pivot;
            mpz_class num = residual.num(), den = ce.h.at(row, pc).num();
            if (num % den != 0) return std::nullopt;
            y[pc] = Rat(mpz_class(num / den));
        } else if (!residual.is_zero()) {
            return std::nullopt;
        }
    }
    RatVec x = ce.u.mul(y);
    assert(x.is_integral() && sys.check(x));
    return x;
}

namespace {

struct BoxDfs {
    const LinSys& sys;
    long bound;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool complete = true;
    std::vector<RatVec> out;
    RatVec partial;      // row residuals b - A x_prefix
    RatVec x;
    // per-variable suffix bounds on the achievable remaining contribution
    std::vector<RatVec> lo_rest, hi_rest;

    explicit BoxDfs(const LinSys& s, long eb, std::uint64_t nb)
        : sys(s), bound(eb), budget(nb), partial(s.b), x(s.variables()) {
        const std::size_t m = sys.equations(), n = sys.variables();
        lo_rest.assign(n + 1, RatVec(m));
        hi_rest.assign(n + 1, RatVec(m));
        for (std::size_t j = n; j-- > 0;) {
            for (std::size_t i = 0; i < m; ++i) {
                Rat c = sys.a.at(i, j);
                Rat clo = c.is_negative() ? Rat(bound) * c : Rat(0);
                Rat chi = c.is_positive() ? Rat(bound) * c : Rat(0);
                lo_rest[j][i] = lo_rest[j + 1][i] + clo;
                hi_rest[j][i] = hi_rest[j + 1][i] + chi;
            }
        }
    }

    void run(std::size_t j) {
        if (++nodes > budget) {
            complete = false;
            return;
        }
        const std::size_t m = sys.equations(), n = sys.variables();
        for (std::size_t i = 0; i < m; ++i)
            if (partial[i] < lo_rest[j][i] || partial[i] > hi_rest[j][i]) return;
        if (j == n) {
            out.push_back(x);
            return;
        }
        for (long v = 0; v <= bound && complete; ++v) {
            x[j] = Rat(v);
            if (v > 0)
                for (std::size_t i = 0; i < m; ++i) partial[i] -= sys.a.at(i, j);
            run(j + 1);
        }
        for (std::size_t i = 0; i < m; ++i) partial[i] += Rat(bound) * sys.a.at(i, j);
        x[j] = Rat(0);
    }
};

}  // namespace

BoxEnumeration enumerate_n_solutions_bounded(const LinSys& sys, long entry_bound,
                                             std::uint64_t node_budget) {
    if (entry_bound < 0) throw input_error("enumerate_n_solutions_bounded: negative bound");
    BoxDfs dfs(sys, entry_bound, node_budget);
    dfs.run(0);
    std::sort(dfs.out.begin(), dfs.out.end());
    dfs.out.erase(std::unique(dfs.out.begin(), dfs.out.end()), dfs.out.end());
    return {std::move(dfs.out), dfs.complete};
}

bool HybridLinearSet::validate(const LinSys& sys) const {
    LinSys hom = sys.homogeneous();
    for (const auto& v : base)
        if (!v.is_nonnegative() || !v.is_integral() || !sys.check(v)) return false;
    for (const auto& p : periods)
        if (!p.is_nonnegative() || !p.is_integral() || !hom.check(p) || p.is_zero()) return false;
    return true;
}

HybridLinearSet hybrid_from_bounded(const LinSys& sys, long entry_bound,
                                    std::uint64_t node_budget) {
    HybridLinearSet hs;
    BoxEnumeration base = enumerate_n_solutions_bounded(sys, entry_bound, node_budget);
    BoxEnumeration per = enumerate_n_solutions_bounded(sys.homogeneous(), entry_bound, node_budget);
    hs.base = std::move(base.solutions);
    for (auto& p : per.solutions)
        if (!p.is_zero()) hs.periods.push_back(std::move(p));
    hs.complete = base.complete && per.complete;
    return hs;
}

}  // namespace odlin
