#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "odlin/mat.hpp"

namespace odlin {

// A system of linear equations A x = b. The homogeneous companion is the
// same matrix with zero right-hand side.
struct LinSys {
    RatMat a;
    RatVec b;

    LinSys() = default;
    LinSys(RatMat coeff, RatVec rhs);

    std::size_t equations() const { return a.rows(); }
    std::size_t variables() const { return a.cols(); }
    LinSys homogeneous() const { return LinSys(a, RatVec(a.rows())); }
    bool check(const RatVec& x) const { return a.mul(x) == b; }
};

// Unique decomposition v = pos - neg with pos, neg >= 0 and pointwise
// min(pos, neg) = 0. Input must be integral.
std::pair<RatVec, RatVec> split_pos_neg(const RatVec& v);

struct RationalSolution {
    RatVec particular;
    std::vector<RatVec> kernel;  // basis of the homogeneous solution space
};

// Gaussian elimination over Q. Returns a particular solution together with a
// kernel basis, or nothing if the system is inconsistent.
std::optional<RationalSolution> solve_rational(const LinSys& sys);

// Integer solvability via column-style integer echelon form (Hermite-type
// unimodular column reduction). Requires integral input.
std::optional<RatVec> solve_integer(const LinSys& sys);

struct BoxEnumeration {
    std::vector<RatVec> solutions;  // sorted, deduplicated
    bool complete = true;           // false iff the node budget ran out
};

// All nonnegative integer solutions of sys with every entry <= entry_bound.
// Exhaustive DFS with per-row interval pruning; desk-scale stand-in for the
// exponential solution bound.
BoxEnumeration enumerate_n_solutions_bounded(const LinSys& sys, long entry_bound,
                                             std::uint64_t node_budget = 50'000'000);

// Finite presentation B + P^+ of the nonnegative integer solutions found
// within a box: base vectors solve the system, period vectors solve the
// homogeneous companion. P^+ (all finite sums of periods) is implicit.
struct HybridLinearSet {
    std::vector<RatVec> base;
    std::vector<RatVec> periods;
    bool complete = true;

    bool validate(const LinSys& sys) const;
};

HybridLinearSet hybrid_from_bounded(const LinSys& sys, long entry_bound,
                                    std::uint64_t node_budget = 50'000'000);

}  // namespace odlin
