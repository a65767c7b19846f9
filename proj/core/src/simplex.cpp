#include "odlin/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace odlin {

namespace {

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 1;
    if (k > n - k) k = n - k;
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 2;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > cap / (n - k + i)) return cap;
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

// Rows are kept sparse (sorted by column) with a column-to-rows index so a
// pivot touches only the rows that actually carry the entering column; the
// reduced-cost row is dense.

const Rat* SimplexTableau::row_entry(const SparseRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

void SimplexTableau::index_insert(std::size_t row, const SparseRow& entries) {
    for (const auto& [c, v] : entries) col_rows_[c].insert(row);
}

void SimplexTableau::index_erase(std::size_t row, const SparseRow& entries) {
    for (const auto& [c, v] : entries) col_rows_[c].erase(row);
}

// t_[i] := t_[i] - f * src, keeping the column index exact.
void SimplexTableau::axpy_row(std::size_t i, const Rat& f, const SparseRow& src) {
    SparseRow& dst = t_[i];
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t a = 0, b = 0;
    while (a < dst.size() || b < src.size()) {
        if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
            out.push_back(std::move(dst[a++]));
        } else if (a == dst.size() || src[b].first < dst[a].first) {
            out.emplace_back(src[b].first, -(f * src[b].second));
            col_rows_[src[b].first].insert(i);
            ++b;
        } else {
            Rat v = dst[a].second - f * src[b].second;
            if (v.is_zero())
                col_rows_[dst[a].first].erase(i);
            else
                out.emplace_back(dst[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    dst = std::move(out);
}

void SimplexTableau::bump_pivot_budget() {
    if (++pivots_ > pivot_budget_)
        throw std::logic_error("simplex exceeded its combinatorial pivot bound");
}

void SimplexTableau::apply_pivot(std::size_t row, std::size_t col) {
    bump_pivot_budget();
    const Rat* piv = row_entry(t_[row], col);
    assert(piv && !piv->is_zero());
    if (*piv != Rat(1)) {
        Rat inv = Rat(1) / *piv;
        for (auto& [c, v] : t_[row]) v *= inv;
        rhs_[row] *= inv;
    }
    // snapshot: the column's holder set mutates during elimination
    std::vector<std::size_t> holders(col_rows_[col].begin(), col_rows_[col].end());
    for (std::size_t i : holders) {
        if (i == row) continue;
        const Rat* f = row_entry(t_[i], col);
        if (!f) continue;
        Rat factor = *f;
        axpy_row(i, factor, t_[row]);
        rhs_[i] -= factor * rhs_[row];
    }
    if (!z_[col].is_zero()) {
        Rat f = z_[col];
        for (const auto& [c, v] : t_[row]) z_[c] -= f * v;
        zval_ += f * rhs_[row];
    }
    basis_[row] = col;
}

void SimplexTableau::recompute_reduced_costs() {
    z_.assign(cols_, Rat(0));
    zval_ = Rat(0);
    for (std::size_t j = 0; j < cols_; ++j) z_[j] = obj_[j];
    for (std::size_t i = 0; i < rows_; ++i) {
        const Rat& cb = obj_[basis_[i]];
        if (cb.is_zero()) continue;
        for (const auto& [c, v] : t_[i]) z_[c] -= cb * v;
        zval_ += cb * rhs_[i];
    }
}

// Lexicographic tie-break over the artificial block, which starts as the
// identity and plays the role of the epsilon perturbation: ties cannot
// recur, so phase 1 never cycles or stalls on a plateau.
bool SimplexTableau::lex_row_less(std::size_t i, std::size_t j, std::size_t enter) const {
    const Rat* ei = row_entry(t_[i], enter);
    const Rat* ej = row_entry(t_[j], enter);
    for (std::size_t c = lex_cols_begin_; c < cols_; ++c) {
        const Rat* a = row_entry(t_[i], c);
        const Rat* b = row_entry(t_[j], c);
        Rat va = a ? *a / *ei : Rat(0);
        Rat vb = b ? *b / *ej : Rat(0);
        if (va != vb) return va < vb;
    }
    return basis_[i] < basis_[j];
}

bool SimplexTableau::pivot_step(std::size_t var_count, const std::optional<Rat>& stop_above,
                                LpResult& out) {
    // Steepest reduced cost while progress is made; a degeneracy streak
    // switches to least-index (Bland), which cannot cycle, until the next
    // improving pivot, so every optimization terminates.
    std::size_t enter = var_count;
    if (bland_) {
        for (std::size_t j = 0; j < var_count; ++j)
            if (z_[j].is_positive()) {
                enter = j;
                break;
            }
    } else {
        for (std::size_t j = 0; j < var_count; ++j)
            if (z_[j].is_positive() && (enter == var_count || z_[enter] < z_[j])) enter = j;
    }
    if (enter == var_count) {
        out.status = LpStatus::Optimal;
        return false;
    }
    std::size_t leave = rows_;
    Rat best;
    for (std::size_t i : col_rows_[enter]) {
        const Rat* e = row_entry(t_[i], enter);
        if (!e || !e->is_positive()) continue;
        Rat ratio = rhs_[i] / *e;
        if (leave == rows_ || ratio < best) {
            leave = i;
            best = ratio;
        } else if (ratio == best) {
            if (lex_phase1_ ? lex_row_less(i, leave, enter) : basis_[i] < basis_[leave])
                leave = i;
        }
    }
    if (leave == rows_) {
        out.status = LpStatus::Unbounded;
        out.ray = RatVec(var_count);
        out.ray[enter] = Rat(1);
        for (std::size_t i : col_rows_[enter]) {
            if (basis_[i] >= var_count) continue;
            const Rat* e = row_entry(t_[i], enter);
            if (e) out.ray[basis_[i]] = -*e;
        }
        return false;
    }
    if (best.is_zero()) {
        if (++degenerate_streak_ > 60) bland_ = true;
    } else {
        degenerate_streak_ = 0;
        bland_ = false;  // cycling is only possible inside a degenerate vertex
    }
    apply_pivot(leave, enter);
    if (stop_above && zval_ > *stop_above) {
        out.status = LpStatus::EarlyStop;
        return false;
    }
    return true;
}

bool SimplexTableau::build(const RatMat& a, const RatVec& b) {
    rows_ = a.rows();
    const std::size_t n = a.cols();
    cols_ = n + rows_;  // artificials appended
    pivots_ = 0;
    bland_ = false;
    degenerate_streak_ = 0;
    const std::uint64_t bases = saturating_binomial(cols_ + 1, rows_ ? rows_ : 1);
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 64;
    pivot_budget_ = (bases > cap ? cap : bases) * 40 + 256;

    t_.assign(rows_, {});
    rhs_.assign(rows_, Rat(0));
    basis_.resize(rows_);
    col_rows_.assign(cols_, {});
    for (std::size_t i = 0; i < rows_; ++i) {
        bool neg = b[i].is_negative();
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& v = a.at(i, j);
            if (!v.is_zero()) t_[i].emplace_back(j, neg ? -v : v);
        }
        t_[i].emplace_back(n + i, Rat(1));
        rhs_[i] = neg ? -b[i] : b[i];
        basis_[i] = n + i;
        index_insert(i, t_[i]);
    }
    obj_.assign(cols_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) obj_[n + i] = Rat(-1);
    recompute_reduced_costs();

    lex_phase1_ = true;
    lex_cols_begin_ = n;
    LpResult r;
    while (pivot_step(cols_, std::nullopt, r)) {
    }
    lex_phase1_ = false;
    if (zval_.is_negative()) return false;

    // Pivot out or discard rows whose artificial stayed basic (degenerate).
    for (std::size_t i = 0; i < rows_;) {
        if (basis_[i] < n) {
            ++i;
            continue;
        }
        std::size_t piv = n;
        for (const auto& [c, v] : t_[i])
            if (c < n && !v.is_zero()) {
                piv = c;
                break;
            }
        if (piv < n) {
            apply_pivot(i, piv);
            ++i;
        } else {
            // drop the redundant row; renumber the column index tail
            for (std::size_t k = i; k < rows_; ++k) index_erase(k, t_[k]);
            t_.erase(t_.begin() + static_cast<long>(i));
            rhs_.erase(rhs_.begin() + static_cast<long>(i));
            basis_.erase(basis_.begin() + static_cast<long>(i));
            --rows_;
            for (std::size_t k = i; k < rows_; ++k) index_insert(k, t_[k]);
        }
    }
    // Drop artificial columns.
    for (std::size_t i = 0; i < rows_; ++i) {
        SparseRow kept;
        kept.reserve(t_[i].size());
        for (auto& [c, v] : t_[i])
            if (c < n) kept.emplace_back(c, std::move(v));
        t_[i] = std::move(kept);
    }
    cols_ = n;
    col_rows_.assign(cols_, {});
    for (std::size_t i = 0; i < rows_; ++i) index_insert(i, t_[i]);
    obj_.assign(cols_, Rat(0));
    recompute_reduced_costs();
    return true;
}

LpResult SimplexTableau::maximize(const RatVec& objective, const std::optional<Rat>& stop_above) {
    assert(objective.size() == cols_);
    pivots_ = 0;  // the anti-cycling bound applies per monotone optimization
    bland_ = false;
    degenerate_streak_ = 0;
    obj_.assign(cols_, Rat(0));
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = objective[j];
    recompute_reduced_costs();
    LpResult r;
    if (stop_above && zval_ > *stop_above) {
        r.status = LpStatus::EarlyStop;
    } else {
        while (pivot_step(cols_, stop_above, r)) {
        }
    }
    r.x = current_point();
    r.value = zval_;
    r.pivots = pivots_;
    return r;
}

RatVec SimplexTableau::current_point() const {
    RatVec x(cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (basis_[i] < cols_) x[basis_[i]] = rhs_[i];
    return x;
}

LpResult lp_maximize(const RatMat& a, const RatVec& b, const RatVec& c,
                     const std::optional<Rat>& stop_above) {
    SimplexTableau tab;
    if (!tab.build(a, b)) {
        LpResult r;
        r.status = LpStatus::Infeasible;
        return r;
    }
    return tab.maximize(c, stop_above);
}

std::optional<RatVec> feasible_nonneg_strict(const LinSys& sys,
                                             const std::set<std::size_t>& strict) {
    const std::size_t m = sys.equations(), n = sys.variables();
    for (std::size_t i : strict)
        if (i >= n) throw input_error("feasible_nonneg_strict: strict index out of range");

    // Layout: x (n) | t (1) | one slack per strict index.
    const std::size_t nt = n + 1 + strict.size();
    RatMat a(m + strict.size(), nt);
    RatVec b(m + strict.size());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = sys.a.at(i, j);
        b[i] = sys.b[i];
    }
    std::size_t row = m, slack = n + 1;
    for (std::size_t i : strict) {
        a.at(row, i) = Rat(1);
        a.at(row, n) = Rat(-1);
        a.at(row, slack) = Rat(-1);
        ++row;
        ++slack;
    }
    RatVec c(nt);
    c[n] = Rat(1);

    LpResult r = lp_maximize(a, b, c, Rat(0));
    if (r.status == LpStatus::Infeasible) return std::nullopt;

    RatVec full = r.x;
    if (r.status == LpStatus::Unbounded) full += r.ray;
    if (!strict.empty() && !(full[n] > Rat(0))) return std::nullopt;

    RatVec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = full[j];
    assert(sys.check(x) && x.is_nonnegative());
    for (std::size_t i : strict) assert(x[i].is_positive());
    return x;
}

}  // namespace odlin
