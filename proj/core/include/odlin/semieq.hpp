#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "odlin/linsys.hpp"

namespace odlin {

// Linear equations plus strict-positivity implications x_i > 0 => x_j > 0,
// solved over the nonnegative rationals.
struct SemiEq {
    LinSys sys;
    std::vector<std::pair<std::size_t, std::size_t>> implications;

    SemiEq() = default;
    SemiEq(LinSys s, std::vector<std::pair<std::size_t, std::size_t>> impls);

    bool check(const RatVec& x) const;
};

// Saturation solver: repeatedly computes a support-maximal nonnegative
// solution over the active variable set, removes implication sources whose
// targets are provably zero, and restarts; at most one removal round per
// variable. Returns a witness satisfying every equation exactly and every
// implication literally, or nothing.
std::optional<RatVec> solve_qplus(const SemiEq& se);

// Exponential reference oracle: enumerates implication-closed supports and
// tests each with an exact LP. Throws budget_error above 16 variables.
std::optional<RatVec> oracle_subset(const SemiEq& se);

}  // namespace odlin
