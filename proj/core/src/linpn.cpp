#include "odlin/linpn.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

#include "semieq_builder.hpp"

namespace odlin {

Vas::Vas(std::size_t dim, std::vector<RatVec> acts, RatVec i, RatVec f)
    : dimension(dim), actions(std::move(acts)), init(std::move(i)), final(std::move(f)) {
    if (init.size() != dimension || final.size() != dimension)
        throw input_error("vas: configuration dimension mismatch");
    if (!init.is_integral() || !init.is_nonnegative() || !final.is_integral() ||
        !final.is_nonnegative())
        throw input_error("vas: init and final must be nonnegative integer vectors");
    for (const auto& a : actions)
        if (a.size() != dimension || !a.is_integral())
            throw input_error("vas: actions must be integer vectors of the stated dimension");
}

namespace {

std::vector<long> to_longs(const RatVec& v) {
    std::vector<long> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_long();
    return out;
}

}  // namespace

ReachResult vas_bounded_reach(const Vas& vas, long norm_bound, long step_bound,
                              std::uint64_t state_budget) {
    if (norm_bound < 0 || step_bound < 0) throw input_error("vas_bounded_reach: negative bound");
    ReachResult out;
    std::vector<long> init = to_longs(vas.init), final = to_longs(vas.final);
    if (init == final) {
        out.status = ReachStatus::Reachable;
        return out;
    }
    for (long x : init)
        if (x > norm_bound) return out;  // box cannot even hold the start

    std::vector<std::vector<long>> acts;
    for (const auto& a : vas.actions) acts.push_back(to_longs(a));

    // parent state and action used to reach each discovered configuration
    std::map<std::vector<long>, std::pair<std::vector<long>, std::size_t>> parent;
    parent.emplace(init, std::make_pair(std::vector<long>{}, 0));
    std::queue<std::pair<std::vector<long>, long>> frontier;
    frontier.emplace(init, 0);

    bool escaped = false, truncated = false, found = false;
    std::vector<long> hit;
    while (!frontier.empty() && !found) {
        auto [conf, depth] = frontier.front();
        frontier.pop();
        if (depth == step_bound) {
            truncated = true;  // unexpanded frontier node: exploration incomplete
            continue;
        }
        for (std::size_t ai = 0; ai < acts.size() && !found; ++ai) {
            std::vector<long> nxt(conf);
            bool ok = true, inbox = true;
            for (std::size_t l = 0; l < nxt.size(); ++l) {
                nxt[l] += acts[ai][l];
                if (nxt[l] < 0) ok = false;
                if (nxt[l] > norm_bound) inbox = false;
            }
            if (!ok) continue;
            if (!inbox) {
                escaped = true;
                continue;
            }
            if (parent.count(nxt)) continue;
            if (parent.size() >= state_budget) {
                truncated = true;
                continue;
            }
            parent.emplace(nxt, std::make_pair(conf, ai));
            if (nxt == final) {
                found = true;
                hit = nxt;
            } else {
                frontier.emplace(nxt, depth + 1);
            }
        }
    }

    if (found) {
        std::vector<std::size_t> run;
        std::vector<long> cur = hit;
        while (cur != init) {
            auto& [prev, act] = parent.at(cur);
            run.push_back(act);
            cur = prev;
        }
        std::reverse(run.begin(), run.end());
        // re-validate the run step by step
        RatVec c = vas.init;
        for (std::size_t ai : run) {
            c += vas.actions[ai];
            assert(c.is_nonnegative());
        }
        assert(c == vas.final);
        out.status = ReachStatus::Reachable;
        out.run = std::move(run);
        return out;
    }
    out.status = (!escaped && !truncated) ? ReachStatus::Unreachable : ReachStatus::Unknown;
    return out;
}

HomLinearPn::HomLinearPn(std::size_t dim, std::vector<LinSys> rls)
    : dimension(dim), rules(std::move(rls)) {
    for (const auto& r : rules) {
        if (r.variables() < 2 * dimension)
            throw input_error("pn rule must cover the 2d subtract/add variables");
        if (!r.b.is_zero()) throw input_error("pn rules must be homogeneous");
    }
}

std::optional<RatVec> pn_step(const HomLinearPn& pn, const RatVec& c, std::size_t rule_index,
                              const RatVec& v) {
    if (rule_index >= pn.rules.size()) throw input_error("pn_step: rule index out of range");
    const LinSys& rule = pn.rules[rule_index];
    if (v.size() != rule.variables() || !v.is_nonnegative() || !rule.check(v))
        throw input_error("pn_step: v is not a nonnegative rule solution");
    if (c.size() != pn.dimension || !c.is_nonnegative())
        throw input_error("pn_step: invalid configuration");
    RatVec next = c;
    for (std::size_t l = 0; l < pn.dimension; ++l) {
        next[l] -= v[l];
        if (next[l].is_negative()) return std::nullopt;
    }
    for (std::size_t l = 0; l < pn.dimension; ++l) next[l] += v[pn.dimension + l];
    return next;
}

bool serge12_check(const HomLinearPn& pn, const RatVec& i, const RatVec& f,
                   const std::vector<RatVec>& u) {
    const std::size_t d = pn.dimension;
    if (u.size() != pn.rules.size()) throw input_error("serge12_check: one aggregate per rule");
    for (std::size_t p = 0; p < u.size(); ++p)
        if (u[p].size() != pn.rules[p].variables() || !u[p].is_nonnegative() ||
            !pn.rules[p].check(u[p]))
            throw input_error("serge12_check: aggregate is not a rule solution");

    RatVec balance(d);
    for (const auto& up : u)
        for (std::size_t l = 0; l < d; ++l) balance[l] += up[d + l] - up[l];
    if (balance != f - i) return false;
    for (const auto& up : u)
        for (std::size_t l = 0; l < d; ++l) {
            if (up[l].is_positive() && !i[l].is_positive()) return false;
            if (up[d + l].is_positive() && !f[l].is_positive()) return false;
        }
    return true;
}

namespace detail {

ReachVarMap append_reach_system(SemiEqBuilder& bld, const HomLinearPn& pn, long steps) {
    const std::size_t d = pn.dimension;
    const std::size_t s = steps < 0 ? d : static_cast<std::size_t>(steps);
    ReachVarMap vm;

    auto add_config = [&] { return bld.add_vars(d); };
    auto add_rule_solution = [&](std::size_t p) {
        const LinSys& rule = pn.rules[p];
        std::size_t base = bld.add_vars(rule.variables());
        for (std::size_t r = 0; r < rule.equations(); ++r) {
            std::vector<std::pair<std::size_t, Rat>> terms;
            for (std::size_t j = 0; j < rule.variables(); ++j)
                if (!rule.a.at(r, j).is_zero()) terms.emplace_back(base + j, rule.a.at(r, j));
            bld.add_row(std::move(terms), Rat(0));
        }
        return base;
    };
    // One macro step from configuration `from` to a fresh configuration:
    // every rule fires once; post-subtraction nonnegativity goes through a
    // slack configuration.
    auto add_macro_step = [&](std::size_t from) {
        std::vector<std::size_t> sols;
        sols.reserve(pn.rules.size());
        for (std::size_t p = 0; p < pn.rules.size(); ++p) sols.push_back(add_rule_solution(p));
        std::size_t slack = bld.add_vars(d);
        std::size_t to = add_config();
        for (std::size_t l = 0; l < d; ++l) {
            std::vector<std::pair<std::size_t, Rat>> low{{from + l, Rat(1)},
                                                         {slack + l, Rat(-1)}};
            for (std::size_t p = 0; p < pn.rules.size(); ++p)
                low.emplace_back(sols[p] + l, Rat(-1));
            bld.add_row(std::move(low), Rat(0));
            std::vector<std::pair<std::size_t, Rat>> high{{to + l, Rat(1)},
                                                          {slack + l, Rat(-1)}};
            for (std::size_t p = 0; p < pn.rules.size(); ++p)
                high.emplace_back(sols[p] + d + l, Rat(-1));
            bld.add_row(std::move(high), Rat(0));
        }
        return to;
    };

    vm.start = add_config();
    std::size_t cur = vm.start;
    for (std::size_t t = 0; t < s; ++t) cur = add_macro_step(cur);
    std::size_t imax = cur;  // support-maximal configuration after the prefix

    std::size_t fmax = add_config();
    std::vector<std::size_t> aggregates;
    for (std::size_t p = 0; p < pn.rules.size(); ++p) {
        std::size_t u = add_rule_solution(p);
        aggregates.push_back(u);
        for (std::size_t l = 0; l < d; ++l) {
            bld.imply(u + l, imax + l);
            bld.imply(u + d + l, fmax + l);
        }
    }
    for (std::size_t l = 0; l < d; ++l) {
        std::vector<std::pair<std::size_t, Rat>> row{{fmax + l, Rat(1)}, {imax + l, Rat(-1)}};
        for (std::size_t u : aggregates) {
            row.emplace_back(u + l, Rat(1));
            row.emplace_back(u + d + l, Rat(-1));
        }
        bld.add_row(std::move(row), Rat(0));
    }

    cur = fmax;
    for (std::size_t t = 0; t < s; ++t) cur = add_macro_step(cur);
    vm.end = cur;
    return vm;
}

}  // namespace detail

ReachSemiEq build_reach_semieq(const HomLinearPn& pn, long steps) {
    detail::SemiEqBuilder bld;
    detail::ReachVarMap vm = detail::append_reach_system(bld, pn, steps);
    ReachSemiEq out{bld.dense(), {}, {}};
    for (std::size_t l = 0; l < pn.dimension; ++l) {
        out.start.push_back(vm.start + l);
        out.end.push_back(vm.end + l);
    }
    return out;
}

}  // namespace odlin
