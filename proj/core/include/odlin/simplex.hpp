#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "odlin/linsys.hpp"

namespace odlin {

enum class LpStatus { Infeasible, Optimal, Unbounded, EarlyStop };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RatVec x;        // feasible point (meaningful unless Infeasible)
    Rat value;       // objective at x
    RatVec ray;      // improving ray when Unbounded
    std::uint64_t pivots = 0;
};

// Exact primal simplex over Q in equality standard form: x >= 0, A x = b.
// Least-index (Bland) pivoting throughout, so every run terminates; the
// pivot counter is asserted against a combinatorial bound.
class SimplexTableau {
public:
    // Phase 1. Returns false iff {x >= 0, Ax = b} is empty.
    bool build(const RatMat& a, const RatVec& b);

    // Phase 2 from the current basis. If stop_above is set, returns
    // EarlyStop as soon as the objective strictly exceeds it.
    LpResult maximize(const RatVec& objective, const std::optional<Rat>& stop_above = {});

    RatVec current_point() const;
    std::uint64_t pivots() const { return pivots_; }

private:
    using SparseRow = std::vector<std::pair<std::size_t, Rat>>;  // sorted by column

    static const Rat* row_entry(const SparseRow& row, std::size_t col);
    void index_insert(std::size_t row, const SparseRow& entries);
    void index_erase(std::size_t row, const SparseRow& entries);
    void axpy_row(std::size_t i, const Rat& f, const SparseRow& src);
    bool pivot_step(std::size_t var_count, const std::optional<Rat>& stop_above, LpResult& out);
    void recompute_reduced_costs();
    void apply_pivot(std::size_t row, std::size_t col);
    void bump_pivot_budget();

    std::size_t rows_ = 0, cols_ = 0;       // cols_ = variable count in tableau
    std::vector<SparseRow> t_;
    std::vector<Rat> rhs_;
    std::vector<std::set<std::size_t>> col_rows_;  // rows holding each column
    std::vector<Rat> z_;                    // reduced costs, size cols_ (dense)
    Rat zval_;
    std::vector<std::size_t> basis_;        // basic variable per row
    std::vector<Rat> obj_;                  // current objective, size cols_
    std::uint64_t pivots_ = 0;
    std::uint64_t pivot_budget_ = 0;
    bool bland_ = false;                    // least-index fallback engaged
    int degenerate_streak_ = 0;
    bool lex_phase1_ = false;               // lexicographic ratio ties in phase 1
    std::size_t lex_cols_begin_ = 0;

    bool lex_row_less(std::size_t i, std::size_t j, std::size_t enter) const;
};

// One-shot LP: maximize c.x subject to A x = b, x >= 0.
LpResult lp_maximize(const RatMat& a, const RatVec& b, const RatVec& c,
                     const std::optional<Rat>& stop_above = {});

// Exact feasibility with strict positivity on chosen coordinates: finds x
// with A x = b, x >= 0 and x_i > 0 for every i in strict, or nothing. The
// strict part is decided by maximizing a threshold variable t subject to
// x_i >= t; by convexity a positive optimum (or unboundedness) is
// equivalent to existence.
std::optional<RatVec> feasible_nonneg_strict(const LinSys& sys, const std::set<std::size_t>& strict);

}  // namespace odlin
