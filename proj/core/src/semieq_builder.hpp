#pragma once

// Internal sparse constructor for large assembled semi-equations. Rows are
// kept sparse so that zero-pin presolve can run before densification.

#include <utility>
#include <vector>

#include "odlin/semieq.hpp"

namespace odlin {
struct HomLinearPn;
}

namespace odlin::detail {

struct SparseRow {
    std::vector<std::pair<std::size_t, Rat>> terms;
    Rat rhs;
};

class SemiEqBuilder {
public:
    std::size_t add_vars(std::size_t k) {
        std::size_t first = nvars_;
        nvars_ += k;
        return first;
    }
    std::size_t var_count() const { return nvars_; }

    void add_row(std::vector<std::pair<std::size_t, Rat>> terms, Rat rhs = Rat(0)) {
        SparseRow r{std::move(terms), std::move(rhs)};
        rows_.push_back(std::move(r));
    }
    void imply(std::size_t i, std::size_t j) { impls_.emplace_back(i, j); }

    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& implications() const {
        return impls_;
    }

    SemiEq dense() const;

    struct Reduced {
        bool feasible = true;
        SemiEq se;                      // over kept variables
        std::vector<std::size_t> kept;  // reduced index -> builder index
        std::vector<long> pos_of;       // builder index -> reduced index or -1
    };
    // Zero-pin presolve (same-sign zero rows, implication back-propagation)
    // followed by densification of the surviving rows and columns.
    Reduced reduced() const;

    // Exact validation of a full-space vector against every row and
    // implication.
    bool check_full(const RatVec& x) const;

private:
    std::size_t nvars_ = 0;
    std::vector<SparseRow> rows_;
    std::vector<std::pair<std::size_t, std::size_t>> impls_;
};

// First variable indices of the start and end configurations of one
// appended reachability block (d consecutive variables each).
struct ReachVarMap {
    std::size_t start = 0;
    std::size_t end = 0;
};

// Emits the macro-step reachability encoding of pn into bld and reports
// where its endpoint configurations live. steps < 0 selects pn.dimension.
ReachVarMap append_reach_system(SemiEqBuilder& bld, const HomLinearPn& pn, long steps);

}  // namespace odlin::detail
