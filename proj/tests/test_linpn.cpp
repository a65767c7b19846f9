#include <doctest.h>

#include <algorithm>

#include "odlin/linpn.hpp"
#include "odlin/simplex.hpp"
#include "test_util.hpp"

using namespace odlin;
using testutil::Rng;

namespace {

// Pins chosen variables of a reach system to constants and decides it.
std::optional<RatVec> solve_pinned(const ReachSemiEq& rs,
                                   const std::vector<std::pair<std::size_t, Rat>>& pins) {
    const std::size_t n = rs.se.sys.variables();
    RatMat a(rs.se.sys.equations() + pins.size(), n);
    RatVec b(rs.se.sys.equations() + pins.size());
    for (std::size_t r = 0; r < rs.se.sys.equations(); ++r) {
        for (std::size_t c = 0; c < n; ++c) a.at(r, c) = rs.se.sys.a.at(r, c);
        b[r] = rs.se.sys.b[r];
    }
    for (std::size_t p = 0; p < pins.size(); ++p) {
        a.at(rs.se.sys.equations() + p, pins[p].first) = Rat(1);
        b[rs.se.sys.equations() + p] = pins[p].second;
    }
    return solve_qplus(SemiEq(LinSys(std::move(a), std::move(b)), rs.se.implications));
}

std::optional<RatVec> reach_pair(const ReachSemiEq& rs, const RatVec& from, const RatVec& to) {
    std::vector<std::pair<std::size_t, Rat>> pins;
    for (std::size_t l = 0; l < from.size(); ++l) pins.emplace_back(rs.start[l], from[l]);
    for (std::size_t l = 0; l < to.size(); ++l) pins.emplace_back(rs.end[l], to[l]);
    return solve_pinned(rs, pins);
}

// d-dimensional rule whose solution set is the ray t * (sub; add).
LinSys ray_rule(const RatVec& sub, const RatVec& add) {
    const std::size_t d = sub.size();
    // pick a leading coordinate of the ray as the parameter
    std::size_t lead = 2 * d;
    RatVec full(2 * d);
    for (std::size_t l = 0; l < d; ++l) full[l] = sub[l];
    for (std::size_t l = 0; l < d; ++l) full[d + l] = add[l];
    for (std::size_t v = 0; v < 2 * d; ++v)
        if (!full[v].is_zero()) {
            lead = v;
            break;
        }
    std::vector<std::vector<Rat>> rows;
    for (std::size_t v = 0; v < 2 * d; ++v) {
        if (v == lead) continue;
        std::vector<Rat> row(2 * d, Rat(0));
        if (lead < 2 * d) {
            // full[lead] * x_v - full[v] * x_lead = 0
            row[v] = full[lead];
            row[lead] = -full[v];
        } else {
            row[v] = Rat(1);
        }
        rows.push_back(std::move(row));
    }
    RatMat a(rows.size(), 2 * d);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < 2 * d; ++c) a.at(r, c) = rows[r][c];
    return LinSys(std::move(a), RatVec(rows.size()));
}

}  // namespace

TEST_CASE("vas_bounded_reach pinned verdicts") {
    {
        Vas v(1, {RatVec{Rat(1)}, RatVec{Rat(-1)}}, RatVec{Rat(0)}, RatVec{Rat(0)});
        auto r = vas_bounded_reach(v, 5, 5);
        CHECK(r.status == ReachStatus::Reachable);
        CHECK(r.run.empty());
    }
    {
        // +2 parity: the box is never closed (4 + 2 escapes), so Unknown
        Vas v(1, {RatVec{Rat(2)}}, RatVec{Rat(0)}, RatVec{Rat(1)});
        CHECK(vas_bounded_reach(v, 5, 10).status == ReachStatus::Unknown);
    }
    {
        // (1,0) and (-1,1) pump the second counter: (0,2) is reachable
        Vas v(2, {RatVec{Rat(1), Rat(0)}, RatVec{Rat(-1), Rat(1)}}, RatVec{Rat(0), Rat(0)},
              RatVec{Rat(0), Rat(2)});
        auto r = vas_bounded_reach(v, 4, 8);
        CHECK(r.status == ReachStatus::Reachable);
        CHECK(r.run.size() == 4);
    }
    {
        // closed box: the only action dies immediately, search exhausts
        Vas v(1, {RatVec{Rat(-1)}}, RatVec{Rat(2)}, RatVec{Rat(3)});
        CHECK(vas_bounded_reach(v, 5, 10).status == ReachStatus::Unreachable);
    }
}

TEST_CASE("pn_step follows the subtract-then-add semantics") {
    // one rule: solutions t * (1, 1) in dimension 1 (move mass to itself)
    HomLinearPn pn(1, {ray_rule(RatVec{Rat(1)}, RatVec{Rat(1)})});
    RatVec zero2(2);
    CHECK(*pn_step(pn, RatVec{Rat(1)}, 0, zero2) == RatVec{Rat(1)});
    CHECK(*pn_step(pn, RatVec{Rat(1)}, 0, RatVec{Rat(1), Rat(1)}) == RatVec{Rat(1)});
    CHECK(!pn_step(pn, RatVec{Rat(0)}, 0, RatVec{Rat(1), Rat(1)}));
    CHECK_THROWS_AS(pn_step(pn, RatVec{Rat(1)}, 0, RatVec{Rat(1), Rat(2)}), input_error);
}

TEST_CASE("serge12_check validates the three conditions") {
    HomLinearPn pn(2, {ray_rule(RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)})});
    RatVec zero4(4);
    CHECK(serge12_check(pn, RatVec{Rat(1), Rat(1)}, RatVec{Rat(1), Rat(1)}, {zero4}));
    // balanced move with strictly positive endpoints
    RatVec u{Rat(1), Rat(0), Rat(0), Rat(1)};
    CHECK(serge12_check(pn, RatVec{Rat(2), Rat(1)}, RatVec{Rat(1), Rat(2)}, {u}));
    // subtraction on a zero coordinate of i
    CHECK(!serge12_check(pn, RatVec{Rat(0), Rat(1)}, RatVec{Rat(-1), Rat(2)}, {u}));
    // wrong balance
    CHECK(!serge12_check(pn, RatVec{Rat(2), Rat(1)}, RatVec{Rat(2), Rat(1)}, {u}));
}

TEST_CASE("build_reach_semieq: rule forcing v = 0 gives the diagonal") {
    // rule x = 0 for all four variables of a 2-dimensional pn
    RatMat a(4, 4);
    for (std::size_t i = 0; i < 4; ++i) a.at(i, i) = Rat(1);
    HomLinearPn pn(2, {LinSys(a, RatVec(4))});
    ReachSemiEq rs = build_reach_semieq(pn);
    CHECK(reach_pair(rs, RatVec{Rat(1), Rat(2)}, RatVec{Rat(1), Rat(2)}).has_value());
    CHECK(!reach_pair(rs, RatVec{Rat(1), Rat(2)}, RatVec{Rat(2), Rat(1)}));
}

TEST_CASE("build_reach_semieq: self-move keeps the diagonal in dimension 1") {
    HomLinearPn pn(1, {ray_rule(RatVec{Rat(1)}, RatVec{Rat(1)})});
    ReachSemiEq rs = build_reach_semieq(pn);
    CHECK(reach_pair(rs, RatVec{Rat(3)}, RatVec{Rat(3)}).has_value());
    CHECK(!reach_pair(rs, RatVec{Rat(3)}, RatVec{Rat(2)}));
    CHECK(!reach_pair(rs, RatVec{Rat(0)}, RatVec{Rat(1)}));
}

TEST_CASE("build_reach_semieq: transfer ray moves mass one way only") {
    HomLinearPn pn(2, {ray_rule(RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)})});
    ReachSemiEq rs = build_reach_semieq(pn);
    CHECK(reach_pair(rs, RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)}).has_value());
    CHECK(reach_pair(rs, RatVec{Rat(1), Rat(1)}, RatVec{Rat(0), Rat(2)}).has_value());
    CHECK(reach_pair(rs, RatVec{Rat(1), Rat(1)}, RatVec{Rat(1, 2), Rat(3, 2)}).has_value());
    CHECK(reach_pair(rs, RatVec{Rat(1), Rat(1)}, RatVec{Rat(1), Rat(1)}).has_value());
    CHECK(!reach_pair(rs, RatVec{Rat(0), Rat(1)}, RatVec{Rat(1), Rat(0)}));
    CHECK(!reach_pair(rs, RatVec{Rat(1), Rat(1)}, RatVec{Rat(2), Rat(0)}));
    CHECK(!reach_pair(rs, RatVec{Rat(1), Rat(1)}, RatVec{Rat(0), Rat(1)}));  // mass lost
}

namespace {

HomLinearPn rand_pn(Rng& rng, std::size_t d, std::size_t nrules) {
    std::vector<LinSys> rules;
    for (std::size_t p = 0; p < nrules; ++p) {
        RatVec sub(d), add(d);
        for (std::size_t l = 0; l < d; ++l) {
            sub[l] = Rat(static_cast<long>(rng() % 2));
            add[l] = Rat(static_cast<long>(rng() % 2));
        }
        rules.push_back(ray_rule(sub, add));
    }
    return HomLinearPn(d, std::move(rules));
}

}  // namespace

TEST_CASE("macro steps decompose into sequential firings") {
    Rng rng(11001);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t d = 1 + rng() % 3;
        HomLinearPn pn = rand_pn(rng, d, 1 + rng() % 3);
        RatVec c = testutil::rand_vec(rng, d, 0, 4);
        // pick per-rule solutions jointly feasible after full subtraction
        std::vector<RatVec> sols;
        RatVec total_sub(d);
        for (const auto& rule : pn.rules) {
            auto sol = feasible_nonneg_strict(rule, {});
            REQUIRE(sol);
            // scale down until the joint subtraction fits under c
            RatVec v = *sol;
            for (int halvings = 0; halvings < 12; ++halvings) {
                bool fits = true;
                for (std::size_t l = 0; l < d; ++l)
                    if (total_sub[l] + v[l] > c[l]) fits = false;
                if (fits) break;
                for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(1, 2) * v[i];
            }
            bool fits = true;
            for (std::size_t l = 0; l < d; ++l)
                if (total_sub[l] + v[l] > c[l]) fits = false;
            if (!fits) v = RatVec(rule.variables());
            for (std::size_t l = 0; l < d; ++l) total_sub[l] += v[l];
            sols.push_back(v);
        }
        // macro effect
        RatVec expect = c;
        for (std::size_t p = 0; p < sols.size(); ++p)
            for (std::size_t l = 0; l < d; ++l)
                expect[l] += sols[p][d + l] - sols[p][l];
        // sequential firing in rule order
        RatVec cur = c;
        for (std::size_t p = 0; p < sols.size(); ++p) {
            auto next = pn_step(pn, cur, p, sols[p]);
            REQUIRE(next);
            cur = *next;
        }
        CHECK(cur == expect);
    }
}

TEST_CASE("forward-generated fractional runs are accepted") {
    Rng rng(11002);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t d = 1 + rng() % 2;
        HomLinearPn pn = rand_pn(rng, d, 1 + rng() % 2);
        RatVec c = testutil::rand_vec(rng, d, 1, 3);
        RatVec start = c;
        std::size_t steps = rng() % 3;
        for (std::size_t s = 0; s < steps; ++s) {
            std::size_t p = rng() % pn.rules.size();
            auto sol = feasible_nonneg_strict(pn.rules[p], {});
            REQUIRE(sol);
            RatVec v = *sol;
            for (int halvings = 0; halvings < 10; ++halvings) {
                auto next = pn_step(pn, c, p, v);
                if (next) {
                    c = *next;
                    break;
                }
                for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(1, 2) * v[i];
            }
        }
        ReachSemiEq rs = build_reach_semieq(pn);
        CHECK(reach_pair(rs, start, c).has_value());
    }
}

TEST_CASE("state-equation necessity: no balance, no reachability") {
    Rng rng(11003);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t d = 1 + rng() % 2;
        HomLinearPn pn = rand_pn(rng, d, 1 + rng() % 2);
        RatVec from = testutil::rand_vec(rng, d, 0, 3);
        RatVec to = testutil::rand_vec(rng, d, 0, 3);
        // balance LP: is to - from a sum of rule effects over Qplus?
        std::size_t total_vars = 0;
        for (const auto& r : pn.rules) total_vars += r.variables();
        std::size_t rule_rows = 0;
        for (const auto& r : pn.rules) rule_rows += r.equations();
        RatMat a(d + rule_rows, total_vars);
        RatVec b(d + rule_rows);
        std::size_t off = 0, row = d;
        for (const auto& r : pn.rules) {
            for (std::size_t l = 0; l < d; ++l)
                for (std::size_t idx = 0; idx < r.variables(); ++idx) {
                    if (idx == l) a.at(l, off + idx) -= Rat(1);
                    if (idx == d + l) a.at(l, off + idx) += Rat(1);
                }
            for (std::size_t rr = 0; rr < r.equations(); ++rr, ++row)
                for (std::size_t idx = 0; idx < r.variables(); ++idx)
                    a.at(row, off + idx) = r.a.at(rr, idx);
            off += r.variables();
        }
        for (std::size_t l = 0; l < d; ++l) b[l] = to[l] - from[l];
        bool balance = feasible_nonneg_strict(LinSys(a, b), {}).has_value();
        if (!balance) {
            ReachSemiEq rs = build_reach_semieq(pn);
            CHECK(!reach_pair(rs, from, to));
        }
    }
}
