#include "odlin/semieq.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "odlin/simplex.hpp"

namespace odlin {

SemiEq::SemiEq(LinSys s, std::vector<std::pair<std::size_t, std::size_t>> impls)
    : sys(std::move(s)), implications(std::move(impls)) {
    for (auto& [i, j] : implications)
        if (i >= sys.variables() || j >= sys.variables())
            throw input_error("implication references an unknown variable");
    std::sort(implications.begin(), implications.end());
    implications.erase(std::unique(implications.begin(), implications.end()),
                       implications.end());
}

bool SemiEq::check(const RatVec& x) const {
    if (x.size() != sys.variables() || !x.is_nonnegative() || !sys.check(x)) return false;
    for (auto& [i, j] : implications)
        if (x[i].is_positive() && !x[j].is_positive()) return false;
    return true;
}

namespace {

struct Reduced {
    bool feasible = true;
    std::vector<std::size_t> kept;              // reduced index -> original index
    std::vector<long> pos_of;                   // original index -> reduced index or -1
    LinSys sys;                                 // over kept variables
    std::vector<std::pair<std::size_t, std::size_t>> impls;  // reduced indices
};

// Zero-pin presolve: propagates forced-zero variables through same-sign
// zero rows and implications, drops satisfied rows, and detects trivial
// infeasibility. Sound for nonnegative solving.
Reduced presolve(const SemiEq& se, const std::vector<bool>& pinned_in) {
    const std::size_t n = se.sys.variables(), m = se.sys.equations();
    std::vector<bool> pinned = pinned_in;
    Reduced out;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < m; ++r) {
            int sign = 0;  // +1 all active coeffs > 0, -1 all < 0, 0 mixed
            bool mixed = false, any = false;
            for (std::size_t j = 0; j < n && !mixed; ++j) {
                const Rat& c = se.sys.a.at(r, j);
                if (pinned[j] || c.is_zero()) continue;
                any = true;
                int s = c.is_positive() ? 1 : -1;
                if (sign == 0)
                    sign = s;
                else if (sign != s)
                    mixed = true;
            }
            const Rat& b = se.sys.b[r];
            if (!any) {
                if (!b.is_zero()) {
                    out.feasible = false;
                    return out;
                }
                continue;
            }
            if (mixed) continue;
            // all active coefficients share a sign
            if (b.is_zero()) {
                for (std::size_t j = 0; j < n; ++j)
                    if (!pinned[j] && !se.sys.a.at(r, j).is_zero()) {
                        pinned[j] = true;
                        changed = true;
                    }
            } else if ((sign > 0 && b.is_negative()) || (sign < 0 && b.is_positive())) {
                out.feasible = false;
                return out;
            }
        }
        for (auto& [i, j] : se.implications)
            if (pinned[j] && !pinned[i]) {
                pinned[i] = true;
                changed = true;
            }
    }

    out.pos_of.assign(n, -1);
    for (std::size_t j = 0; j < n; ++j)
        if (!pinned[j]) {
            out.pos_of[j] = static_cast<long>(out.kept.size());
            out.kept.push_back(j);
        }
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < m; ++r) {
        bool live = false;
        for (std::size_t j : out.kept)
            if (!se.sys.a.at(r, j).is_zero()) {
                live = true;
                break;
            }
        if (live)
            rows.push_back(r);
        else if (!se.sys.b[r].is_zero()) {
            out.feasible = false;
            return out;
        }
    }
    RatMat a(rows.size(), out.kept.size());
    RatVec b(rows.size());
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        for (std::size_t ci = 0; ci < out.kept.size(); ++ci)
            a.at(ri, ci) = se.sys.a.at(rows[ri], out.kept[ci]);
        b[ri] = se.sys.b[rows[ri]];
    }
    out.sys = LinSys(std::move(a), std::move(b));
    for (auto& [i, j] : se.implications)
        if (!pinned[i] && !pinned[j])
            out.impls.emplace_back(static_cast<std::size_t>(out.pos_of[i]),
                                   static_cast<std::size_t>(out.pos_of[j]));
    return out;
}

}  // namespace

std::optional<RatVec> solve_qplus(const SemiEq& se) {
    const std::size_t n = se.sys.variables();
    std::vector<bool> pins(n, false);

    for (std::size_t round = 0; round <= n + 1; ++round) {
        Reduced red = presolve(se, pins);
        if (!red.feasible) return std::nullopt;

        SimplexTableau tab;
        if (!tab.build(red.sys.a, red.sys.b)) return std::nullopt;

        const std::size_t k = red.kept.size();
        std::vector<RatVec> witnesses{tab.current_point()};
        std::vector<bool> known_positive(k, false), known_zero(k, false);
        auto note_support = [&](const RatVec& w) {
            for (std::size_t j = 0; j < k; ++j)
                if (w[j].is_positive()) known_positive[j] = true;
        };
        note_support(witnesses[0]);

        // Probe lazily: a target matters only once an implication source is
        // positive in some held witness; new witnesses can activate more.
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& [i, j] : red.impls) {
                if (!known_positive[i] || known_positive[j] || known_zero[j]) continue;
                RatVec obj(k);
                obj[j] = Rat(1);
                LpResult r = tab.maximize(obj, Rat(0));
                RatVec w = r.x;
                if (r.status == LpStatus::Unbounded) w += r.ray;
                if (w[j].is_positive()) {
                    witnesses.push_back(std::move(w));
                    note_support(witnesses.back());
                } else {
                    known_zero[j] = true;
                }
                changed = true;
            }
        }

        bool removed = false;
        for (auto& [i, j] : red.impls)
            if (known_positive[i] && known_zero[j] && !pins[red.kept[i]]) {
                pins[red.kept[i]] = true;
                removed = true;
            }
        if (removed) continue;

        RatVec avg(k);
        for (const auto& w : witnesses) avg += w;
        Rat inv(1, static_cast<long>(witnesses.size()));
        RatVec x(n);
        for (std::size_t j = 0; j < k; ++j) x[red.kept[j]] = inv * avg[j];
        assert(se.check(x));
        return x;
    }
    throw std::logic_error("solve_qplus saturation failed to terminate");
}

std::optional<RatVec> oracle_subset(const SemiEq& se) {
    const std::size_t n = se.sys.variables();
    if (n > 16) throw budget_error("oracle_subset: more than 16 variables");

    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        bool closed = true;
        for (auto& [i, j] : se.implications)
            if (((mask >> i) & 1U) && !((mask >> j) & 1U)) {
                closed = false;
                break;
            }
        if (!closed) continue;

        // Restrict to the support: columns in the mask, strict on all.
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < n; ++j)
            if ((mask >> j) & 1U) keep.push_back(j);
        RatMat a(se.sys.equations(), keep.size());
        for (std::size_t r = 0; r < se.sys.equations(); ++r)
            for (std::size_t ci = 0; ci < keep.size(); ++ci)
                a.at(r, ci) = se.sys.a.at(r, keep[ci]);
        std::set<std::size_t> strict;
        for (std::size_t ci = 0; ci < keep.size(); ++ci) strict.insert(ci);
        auto sol = feasible_nonneg_strict(LinSys(a, se.sys.b), strict);
        if (sol) {
            RatVec x(n);
            for (std::size_t ci = 0; ci < keep.size(); ++ci) x[keep[ci]] = (*sol)[ci];
            assert(se.check(x));
            return x;
        }
    }
    return std::nullopt;
}

}  // namespace odlin
