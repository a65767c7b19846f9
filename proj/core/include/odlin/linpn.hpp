#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "odlin/semieq.hpp"

namespace odlin {

// Vector addition system: integer action vectors acting on nonnegative
// integer configurations, with designated initial and final configurations.
struct Vas {
    std::size_t dimension;
    std::vector<RatVec> actions;
    RatVec init;
    RatVec final;

    Vas(std::size_t dim, std::vector<RatVec> acts, RatVec i, RatVec f);
};

enum class ReachStatus { Reachable, Unreachable, Unknown };

struct ReachResult {
    ReachStatus status = ReachStatus::Unknown;
    std::vector<std::size_t> run;  // action indices when Reachable
};

// Breadth-first search over configurations with every entry <= norm_bound
// and run length <= step_bound. Unreachable is reported only when the
// explored set is closed: no transition leaves the box and the search was
// exhausted within its budgets. Otherwise Unknown.
ReachResult vas_bounded_reach(const Vas& vas, long norm_bound, long step_bound,
                              std::uint64_t state_budget = 2'000'000);

// Petri net whose transition rules are homogeneous linear systems over the
// paired subtract/add variable blocks. Rules may carry auxiliary variables
// beyond the leading 2d (columns 2d..) to keep per-rule existentials linear;
// a transition is induced by any nonnegative full solution of a rule.
struct HomLinearPn {
    std::size_t dimension;
    std::vector<LinSys> rules;

    HomLinearPn(std::size_t dim, std::vector<LinSys> rls);
};

// One transition: c' = c - v_sub + v_add for the rule solution v, provided
// the subtraction stays nonnegative. The full vector v (including any
// auxiliary components) must solve the rule exactly.
std::optional<RatVec> pn_step(const HomLinearPn& pn, const RatVec& c, std::size_t rule_index,
                              const RatVec& v);

// Sufficient condition for reachability from i to f: per-rule aggregates u_p
// whose balance matches f - i, whose subtractions touch only positive
// coordinates of i and whose additions touch only positive coordinates of f.
bool serge12_check(const HomLinearPn& pn, const RatVec& i, const RatVec& f,
                   const std::vector<RatVec>& u);

struct ReachSemiEq {
    SemiEq se;
    std::vector<std::size_t> start;  // variable indices of the start configuration
    std::vector<std::size_t> end;    // variable indices of the end configuration
};

// Semi-equation whose nonnegative-rational solutions, projected to the
// (start, end) variables, are exactly the reachability pairs of pn. The
// encoding unrolls `steps` macro steps (every rule fired simultaneously,
// post-subtraction nonnegativity via slacks) on both sides of a per-rule
// aggregate middle segment carrying the balance and positivity implications.
// steps < 0 selects dimension-many steps, which suffice: support can grow
// at most once per coordinate.
ReachSemiEq build_reach_semieq(const HomLinearPn& pn, long steps = -1);

}  // namespace odlin
