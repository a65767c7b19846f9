#include "odlin/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "odlin/linpn.hpp"
#include "odlin/linsys.hpp"
#include "odlin/simplex.hpp"
#include "semieq_builder.hpp"

namespace odlin {

namespace {

RatMat concat_generators(const MatrixInstance& inst) {
    RatMat all(inst.dimension, 0);
    for (const auto& g : inst.generators) all = all.hcat(g);
    return all;
}

bool domain_admits(Domain d, const Rat& c) {
    switch (d) {
        case Domain::N: return c.is_integer() && !c.is_negative();
        case Domain::Z: return c.is_integer();
        case Domain::Q: return true;
        case Domain::Qplus: return !c.is_negative();
    }
    return false;
}

}  // namespace

bool verify_witness(const MatrixInstance& inst, const Witness& w, Domain domain,
                    std::string* report) {
    auto fail = [&](const std::string& why) {
        if (report) *report = why;
        return false;
    };
    RatMat sum(inst.dimension, w.slots);
    for (std::size_t t = 0; t < w.terms.size(); ++t) {
        const WitnessTerm& term = w.terms[t];
        if (term.generator >= inst.generators.size())
            return fail("term " + std::to_string(t) + ": generator index out of range");
        const RatMat& g = inst.generators[term.generator];
        if (term.placement.size() != g.cols())
            return fail("term " + std::to_string(t) + ": placement arity mismatch");
        for (std::size_t i = 0; i < term.placement.size(); ++i) {
            if (term.placement[i] >= w.slots)
                return fail("term " + std::to_string(t) + ": slot out of range");
            if (i > 0 && term.placement[i - 1] >= term.placement[i])
                return fail("term " + std::to_string(t) + ": placement not strictly increasing");
        }
        if (!domain_admits(domain, term.coeff))
            return fail("term " + std::to_string(t) + ": coefficient outside domain");
        for (std::size_t i = 0; i < g.cols(); ++i)
            for (std::size_t r = 0; r < inst.dimension; ++r)
                sum.at(r, term.placement[i]) += term.coeff * g.at(r, i);
    }
    if (!recover_simple(sum, inst.target))
        return fail("scaled placements do not sum to a 0-extension of the target");
    return true;
}

namespace {

// Shared layout of the hub-and-moves witness: left parking block, one hub
// slot, the target slots in order, right parking block.
struct HubLayout {
    std::size_t rmax, n;
    std::size_t hub() const { return rmax; }
    std::size_t target(std::size_t i) const { return rmax + 1 + i; }
    std::size_t rstart() const { return rmax + n + 1; }
    std::size_t slots() const { return 2 * rmax + n + 1; }
};

// Moves column `col` of a generator with `r` columns to slot `dest`,
// parking columns before it on the left block and after it on the right.
std::vector<std::size_t> move_placement(const HubLayout& lay, std::size_t r, std::size_t col,
                                        std::size_t dest) {
    std::vector<std::size_t> p(r);
    for (std::size_t i = 0; i < col; ++i) p[i] = i;
    p[col] = dest;
    for (std::size_t i = col + 1; i < r; ++i) p[i] = lay.rstart() + i;
    return p;
}

Verdict solve_thm3(const MatrixInstance& inst, Domain domain) {
    assert(domain == Domain::Q || domain == Domain::Z);
    auto solve = [&](const LinSys& sys) -> std::optional<RatVec> {
        if (domain == Domain::Z) return solve_integer(sys);
        auto r = solve_rational(sys);
        if (!r) return std::nullopt;
        return r->particular;
    };

    const std::size_t k = inst.generators.size();
    RatMat undata_cols(inst.dimension, k);
    for (std::size_t j = 0; j < k; ++j) undata_cols.set_col(j, undata(inst.generators[j]));
    auto x = solve(LinSys(undata_cols, undata(inst.target)));
    if (!x) return {SolveStatus::Unsolvable, std::nullopt, std::nullopt};

    RatMat all = concat_generators(inst);
    std::vector<RatVec> ys;
    for (std::size_t i = 0; i < inst.target.cols(); ++i) {
        auto y = solve(LinSys(all, inst.target.col(i)));
        if (!y) return {SolveStatus::Unsolvable, std::nullopt, std::nullopt};
        ys.push_back(std::move(*y));
    }

    // Witness synthesis: realize the total on the hub slot, then move each
    // target column's worth of mass outward.
    std::size_t rmax = 1;
    for (const auto& g : inst.generators) rmax = std::max(rmax, g.cols());
    HubLayout lay{rmax, inst.target.cols()};
    Witness w;
    w.slots = lay.slots();

    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t r = inst.generators[j].cols();
        if ((*x)[j].is_zero() || r == 0) continue;
        std::vector<std::size_t> park(r);
        for (std::size_t i = 0; i < r; ++i) park[i] = lay.rstart() + i;
        w.terms.push_back({(*x)[j], j, park});
        for (std::size_t col = 0; col < r; ++col) {
            w.terms.push_back({(*x)[j], j, move_placement(lay, r, col, lay.hub())});
            w.terms.push_back({-(*x)[j], j, move_placement(lay, r, col, lay.rstart() + col)});
        }
    }
    for (std::size_t i = 0; i < inst.target.cols(); ++i) {
        std::size_t flat = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t r = inst.generators[j].cols();
            for (std::size_t col = 0; col < r; ++col, ++flat) {
                const Rat& c = ys[i][flat];
                if (c.is_zero()) continue;
                w.terms.push_back({c, j, move_placement(lay, r, col, lay.target(i))});
                w.terms.push_back({-c, j, move_placement(lay, r, col, lay.hub())});
            }
        }
    }
    // merge summands sharing a generator and placement, drop cancellations
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, Rat> merged;
    for (auto& t : w.terms) merged[{t.generator, t.placement}] += t.coeff;
    w.terms.clear();
    for (auto& [key, coeff] : merged)
        if (!coeff.is_zero()) w.terms.push_back({coeff, key.first, key.second});
    assert(verify_witness(inst, w, domain));
    return {SolveStatus::Solvable, std::move(w), std::nullopt};
}

}  // namespace

Verdict solve_q(const MatrixInstance& inst) { return solve_thm3(inst, Domain::Q); }
Verdict solve_z(const MatrixInstance& inst) { return solve_thm3(inst, Domain::Z); }

namespace {

// ---- bounded integer multihistogram search ----------------------------

struct WordSearch {
    const MatrixInstance& inst;
    std::size_t col_bound;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = true;

    std::vector<std::size_t> block_rows;   // r_j per generator
    std::vector<RatVec> hom_cols;          // nonzero stacked columns with zero product
    std::vector<std::vector<RatVec>> tgt_cols;  // per target column index
    bool candidates_complete = true;

    std::vector<std::vector<Rat>> prefix;  // per block, per row: running sums
    std::vector<RatVec> word;
    std::optional<Multihistogram> found;

    WordSearch(const MatrixInstance& in, std::size_t cb, long eb, std::uint64_t nb)
        : inst(in), col_bound(cb), budget(nb) {
        for (const auto& g : inst.generators) block_rows.push_back(g.cols());
        RatMat all = concat_generators(inst);
        BoxEnumeration hom = enumerate_n_solutions_bounded(
            LinSys(all, RatVec(inst.dimension)), eb, budget);
        candidates_complete = hom.complete;
        for (auto& v : hom.solutions)
            if (!v.is_zero()) hom_cols.push_back(std::move(v));
        for (std::size_t i = 0; i < inst.target.cols(); ++i) {
            BoxEnumeration te =
                enumerate_n_solutions_bounded(LinSys(all, inst.target.col(i)), eb, budget);
            candidates_complete = candidates_complete && te.complete;
            tgt_cols.push_back(std::move(te.solutions));
        }
        prefix.resize(block_rows.size());
        for (std::size_t j = 0; j < block_rows.size(); ++j)
            prefix[j].assign(block_rows[j], Rat(0));
    }

    // Dominance boundary: appending w as the next column requires, within
    // every block, prefix(i) >= prefix(i+1) + w(i+1).
    bool admissible(const RatVec& w) const {
        std::size_t off = 0;
        for (std::size_t j = 0; j < block_rows.size(); ++j) {
            for (std::size_t i = 0; i + 1 < block_rows[j]; ++i)
                if (prefix[j][i] < prefix[j][i + 1] + w[off + i + 1]) return false;
            off += block_rows[j];
        }
        return true;
    }

    bool degrees_match() const {
        for (const auto& block : prefix)
            for (std::size_t i = 0; i + 1 < block.size(); ++i)
                if (block[i] != block[i + 1]) return false;
        return true;
    }

    void push(const RatVec& w) {
        std::size_t off = 0;
        for (std::size_t j = 0; j < block_rows.size(); ++j) {
            for (std::size_t i = 0; i < block_rows[j]; ++i) prefix[j][i] += w[off + i];
            off += block_rows[j];
        }
        word.push_back(w);
    }
    void pop(const RatVec& w) {
        std::size_t off = 0;
        for (std::size_t j = 0; j < block_rows.size(); ++j) {
            for (std::size_t i = 0; i < block_rows[j]; ++i) prefix[j][i] -= w[off + i];
            off += block_rows[j];
        }
        word.pop_back();
    }

    void accept() {
        Multihistogram fam;
        std::size_t off = 0;
        for (std::size_t j = 0; j < block_rows.size(); ++j) {
            RatMat h(block_rows[j], word.size());
            for (std::size_t c = 0; c < word.size(); ++c)
                for (std::size_t i = 0; i < block_rows[j]; ++i) h.at(i, c) = word[c][off + i];
            fam.family.push_back(std::move(h));
            off += block_rows[j];
        }
        assert(is_multihistogram(fam, inst.target, inst.generators, HistMode::Integer));
        found = fam;
    }

    void dfs(std::size_t t) {
        if (found) return;
        if (++nodes > budget) {
            exhausted = false;
            return;
        }
        const std::size_t n = inst.target.cols();
        if (t == n && degrees_match()) {
            accept();
            return;
        }
        if (word.size() == col_bound) return;
        if (n - t > col_bound - word.size()) return;
        if (t < n)
            for (const auto& w : tgt_cols[t]) {
                if (++nodes > budget) {
                    exhausted = false;
                    return;
                }
                if (!admissible(w)) continue;
                push(w);
                dfs(t + 1);
                pop(w);
                if (found) return;
            }
        for (const auto& w : hom_cols) {
            if (++nodes > budget) {
                exhausted = false;
                return;
            }
            if (!admissible(w)) continue;
            push(w);
            dfs(t);
            pop(w);
            if (found) return;
        }
    }
};

}  // namespace

MultihistogramSearch find_multihistogram_bounded(const MatrixInstance& inst,
                                                 std::size_t col_bound, long entry_bound,
                                                 std::uint64_t node_budget) {
    WordSearch ws(inst, col_bound, entry_bound, node_budget);
    ws.dfs(0);
    return {ws.found, ws.exhausted && ws.candidates_complete};
}

Witness multihistogram_to_witness(const Multihistogram& fam) {
    Witness w;
    w.slots = fam.family.empty() ? 0 : fam.family[0].cols();
    for (std::size_t j = 0; j < fam.family.size(); ++j) {
        for (const auto& simple : decompose(fam.family[j]))
            w.terms.push_back({Rat(1), j, simple.place});
    }
    return w;
}

namespace {

// Relaxation certificates shared by the nonnegative solvers: the target's
// column sum must lie in the cone of generator column sums, and every
// target column in the cone of generator columns.
bool cone_conditions_hold(const MatrixInstance& inst) {
    RatMat undata_cols(inst.dimension, inst.generators.size());
    for (std::size_t j = 0; j < inst.generators.size(); ++j)
        undata_cols.set_col(j, undata(inst.generators[j]));
    if (!feasible_nonneg_strict(LinSys(undata_cols, undata(inst.target)), {})) return false;
    RatMat all = concat_generators(inst);
    for (std::size_t i = 0; i < inst.target.cols(); ++i)
        if (!feasible_nonneg_strict(LinSys(all, inst.target.col(i)), {})) return false;
    return true;
}

}  // namespace

Verdict solve_n_bounded(const MatrixInstance& inst, std::size_t col_bound, long entry_bound,
                        bool bound_is_complete, std::uint64_t node_budget) {
    // relaxation certificates: no integer combination or no nonnegative
    // rational one rules out nonnegative integers outright
    if (solve_z(inst).status == SolveStatus::Unsolvable || !cone_conditions_hold(inst))
        return {SolveStatus::Unsolvable, std::nullopt, std::nullopt};
    MultihistogramSearch s = find_multihistogram_bounded(inst, col_bound, entry_bound, node_budget);
    if (s.found) {
        Witness w = multihistogram_to_witness(*s.found);
        assert(verify_witness(inst, w, Domain::N));
        return {SolveStatus::Solvable, std::move(w), std::nullopt};
    }
    if (s.exhausted && bound_is_complete)
        return {SolveStatus::Unsolvable, std::nullopt, std::nullopt};
    return {SolveStatus::Unknown, std::nullopt, std::nullopt};
}

// ---- nonnegative-rational pipeline -------------------------------------

namespace {

// Histogram-checking homogeneous linear PN for the generator family: per
// block of r columns, r-1 buffer counters then r-1 profile counters; one
// reading rule coupling a column solution to buffer additions and profile
// subtractions, and one moving rule per buffer counter.
struct HistPn {
    std::size_t dim = 0;
    std::vector<std::size_t> block_off;   // counter offset per block
    std::vector<std::size_t> block_rows;  // r_j
    HomLinearPn pn{0, {}};

    std::size_t buf(std::size_t j, std::size_t i) const { return block_off[j] + i; }
    std::size_t prof(std::size_t j, std::size_t i) const {
        return block_off[j] + (block_rows[j] - 1) + i;
    }
};

// Builds the reading system over [z_sub | z_add | aux] for the column
// equation [M_1 | ... | M_k] x = rhs. Canonical representation of x within
// block j: x_i = z_add[buf(j,i)] for i < r_j - 1, x_{r_j-1} = z_sub[prof(j,
// r_j-2)] when r_j >= 2; single-column blocks get one auxiliary variable.
LinSys reading_system(const HistPn& lay, const std::vector<RatMat>& gens, const RatVec& rhs) {
    const std::size_t d = lay.dim;
    const std::size_t zsub = 0, zadd = d;
    std::size_t aux = 2 * d;
    std::vector<std::vector<std::size_t>> xvar(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t r = lay.block_rows[j];
        xvar[j].resize(r);
        for (std::size_t i = 0; i < r; ++i) {
            if (r >= 2 && i + 1 < r)
                xvar[j][i] = zadd + lay.buf(j, i);
            else if (r >= 2)
                xvar[j][i] = zsub + lay.prof(j, r - 2);
            else
                xvar[j][i] = aux++;
        }
    }
    const std::size_t vars = aux;
    std::vector<std::vector<Rat>> rows;
    auto new_row = [&]() -> std::vector<Rat>& {
        rows.emplace_back(vars, Rat(0));
        return rows.back();
    };
    // column equation
    RatVec b;
    {
        std::vector<std::vector<Rat>> eq(rhs.size(), std::vector<Rat>(vars, Rat(0)));
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (std::size_t i = 0; i < lay.block_rows[j]; ++i)
                for (std::size_t r = 0; r < rhs.size(); ++r)
                    eq[r][xvar[j][i]] += gens[j].at(r, i);
        for (auto& e : eq) rows.push_back(std::move(e));
        b = rhs;
    }
    // couplings z_sub[prof(j,i)] = x_{i+1} for i = 0..r-3 (the last one is
    // canonical), plus structural zeros: no subtraction on buffers, no
    // addition on profiles.
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t r = lay.block_rows[j];
        if (r < 2) continue;
        for (std::size_t i = 0; i + 2 < r; ++i) {
            auto& row = new_row();
            row[zsub + lay.prof(j, i)] = Rat(1);
            row[xvar[j][i + 1]] -= Rat(1);
        }
        for (std::size_t i = 0; i + 1 < r; ++i) {
            auto& r1 = new_row();
            r1[zsub + lay.buf(j, i)] = Rat(1);
            auto& r2 = new_row();
            r2[zadd + lay.prof(j, i)] = Rat(1);
        }
    }
    RatMat a(rows.size(), vars);
    RatVec bb(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < vars; ++c) a.at(r, c) = rows[r][c];
        if (r < b.size()) bb[r] = b[r];
    }
    return LinSys(std::move(a), std::move(bb));
}

HistPn build_hist_pn(const MatrixInstance& inst) {
    HistPn lay;
    for (const auto& g : inst.generators) {
        lay.block_off.push_back(lay.dim);
        lay.block_rows.push_back(g.cols());
        lay.dim += g.cols() >= 1 ? 2 * (g.cols() - 1) : 0;
    }
    const std::size_t d = lay.dim;
    const std::vector<RatMat>& gens = inst.generators;
    std::vector<LinSys> rules;
    rules.push_back(reading_system(lay, gens, RatVec(inst.dimension)));
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t r = lay.block_rows[j];
        if (r < 2) continue;
        for (std::size_t i = 0; i + 1 < r; ++i) {
            RatMat a(2 * d - 1, 2 * d);
            std::size_t row = 0;
            a.at(row, lay.buf(j, i)) = Rat(1);
            a.at(row, d + lay.prof(j, i)) = Rat(-1);
            ++row;
            for (std::size_t v = 0; v < 2 * d; ++v) {
                if (v == lay.buf(j, i) || v == d + lay.prof(j, i)) continue;
                a.at(row, v) = Rat(1);
                ++row;
            }
            rules.emplace_back(std::move(a), RatVec(2 * d - 1));
        }
    }
    lay.pn = HomLinearPn(d, std::move(rules));
    return lay;
}

}  // namespace

Verdict solve_qplus(const MatrixInstance& inst) {
    const std::size_t n = inst.target.cols();
    if (n == 0) return {SolveStatus::Solvable, std::nullopt, std::nullopt};

    // Necessary conditions, each a small exact solve: cone membership of the
    // column sums and of every target column, and plain rational solvability.
    if (!cone_conditions_hold(inst) || solve_q(inst).status == SolveStatus::Unsolvable)
        return {SolveStatus::Unsolvable, std::nullopt, std::nullopt};

    HistPn lay = build_hist_pn(inst);
    if (lay.dim == 0) {
        // Single-column blocks only: no histogram constraints beyond the
        // column equations, which were just checked feasible.
        return {SolveStatus::Solvable, std::nullopt, std::nullopt};
    }

    // Dimension-many macro steps always suffice to reach a support-maximal
    // configuration; keep that depth whenever the assembled system stays
    // desk-sized and scale the prefixes down to what exact LP can carry
    // otherwise.
    long full_steps = static_cast<long>(lay.dim);
    {
        std::size_t rule_vars = 0;
        for (const auto& rule : lay.pn.rules) rule_vars += rule.variables();
        const std::size_t per_step = rule_vars + 2 * lay.dim;
        const std::size_t per_copy_base = rule_vars + 4 * lay.dim;
        const std::size_t budget = 12000;
        auto raw_estimate = [&](long s) {
            return (n + 1) * (2 * static_cast<std::size_t>(s) * per_step + per_copy_base) +
                   n * (rule_vars + 2 * lay.dim);
        };
        while (full_steps > 1 && raw_estimate(full_steps) > budget) --full_steps;
    }

    auto assemble_and_solve = [&](long steps) -> std::optional<Verdict> {
        detail::SemiEqBuilder bld;
        std::vector<detail::ReachVarMap> segs;
        for (std::size_t s = 0; s <= n; ++s)
            segs.push_back(detail::append_reach_system(bld, lay.pn, steps));
        const std::size_t d = lay.dim;
        for (std::size_t l = 0; l < d; ++l) {
            bld.add_row({{segs.front().start + l, Rat(1)}}, Rat(0));
            bld.add_row({{segs.back().end + l, Rat(1)}}, Rat(0));
        }
        const std::vector<RatMat>& gens = inst.generators;
        for (std::size_t i = 0; i < n; ++i) {
            LinSys link = reading_system(lay, gens, inst.target.col(i));
            std::size_t v = bld.add_vars(link.variables());
            for (std::size_t r = 0; r < link.equations(); ++r) {
                std::vector<std::pair<std::size_t, Rat>> terms;
                for (std::size_t c = 0; c < link.variables(); ++c)
                    if (!link.a.at(r, c).is_zero()) terms.emplace_back(v + c, link.a.at(r, c));
                bld.add_row(std::move(terms), link.b[r]);
            }
            std::size_t slack = bld.add_vars(d);
            for (std::size_t l = 0; l < d; ++l) {
                bld.add_row({{segs[i].end + l, Rat(1)}, {v + l, Rat(-1)}, {slack + l, Rat(-1)}},
                            Rat(0));
                bld.add_row({{segs[i + 1].start + l, Rat(1)},
                             {slack + l, Rat(-1)},
                             {v + d + l, Rat(-1)}},
                            Rat(0));
            }
        }

        detail::SemiEqBuilder::Reduced red = bld.reduced();
        if (!red.feasible) return std::nullopt;
        auto sol = odlin::solve_qplus(red.se);
        if (!sol) return std::nullopt;
        RatVec full(bld.var_count());
        for (std::size_t j = 0; j < red.kept.size(); ++j) full[red.kept[j]] = (*sol)[j];
        assert(bld.check_full(full));
        return Verdict{SolveStatus::Solvable, std::nullopt, std::move(full)};
    };

    // shallow encodings first: most solvable instances need few or no
    // macro steps, and soundness holds at every depth
    for (long s : {0L, 1L}) {
        if (s >= full_steps) break;
        if (auto quick = assemble_and_solve(s)) return std::move(*quick);
    }
    if (auto v = assemble_and_solve(full_steps)) return std::move(*v);
    return {SolveStatus::Unsolvable, std::nullopt, std::nullopt};
}

// ---- reference oracle ---------------------------------------------------

namespace {

struct OracleDfs {
    const MatrixInstance& inst;
    Domain domain;
    std::size_t slot_bound;
    std::size_t m_bound;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = true;

    std::vector<std::size_t> gens;          // generator index per term
    std::vector<std::size_t> done;          // placed-column count per term
    std::vector<std::vector<std::size_t>> slots_used;
    // accumulated equations over the coefficients, kept row reduced
    std::vector<RatVec> ech_rows;           // each length m+1 (coeffs | rhs)
    std::optional<Witness> found;

    OracleDfs(const MatrixInstance& in, Domain dom, std::size_t mb, std::size_t sb,
              std::uint64_t nb)
        : inst(in), domain(dom), slot_bound(sb), m_bound(mb), budget(nb) {}

    // Gaussian append over Q; false on inconsistency.
    bool add_equation(const RatVec& row_in) {
        RatVec row = row_in;
        const std::size_t m = gens.size();
        for (const auto& r : ech_rows) {
            std::size_t lead = 0;
            while (lead < m && r[lead].is_zero()) ++lead;
            if (lead < m && !row[lead].is_zero()) {
                Rat f = row[lead] / r[lead];
                for (std::size_t c = lead; c <= m; ++c) row[c] -= f * r[c];
            }
        }
        bool allzero = true;
        for (std::size_t c = 0; c < m; ++c)
            if (!row[c].is_zero()) {
                allzero = false;
                break;
            }
        if (allzero) return row[m].is_zero();
        ech_rows.push_back(std::move(row));
        return true;
    }

    std::optional<RatVec> coefficients() {
        const std::size_t m = gens.size();
        RatMat a(ech_rows.size(), m);
        RatVec b(ech_rows.size());
        for (std::size_t r = 0; r < ech_rows.size(); ++r) {
            // clear denominators so the integer solvers accept the rows
            mpz_class lcm = 1;
            for (std::size_t c = 0; c <= m; ++c)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), ech_rows[r][c].den().get_mpz_t());
            Rat scale{mpq_class(lcm)};
            for (std::size_t c = 0; c < m; ++c) a.at(r, c) = scale * ech_rows[r][c];
            b[r] = scale * ech_rows[r][m];
        }
        LinSys sys(std::move(a), std::move(b));
        switch (domain) {
            case Domain::Q: {
                auto s = solve_rational(sys);
                if (!s) return std::nullopt;
                return s->particular;
            }
            case Domain::Z: return solve_integer(sys);
            case Domain::Qplus: return feasible_nonneg_strict(sys, {});
            case Domain::N: {
                BoxEnumeration e = enumerate_n_solutions_bounded(
                    sys, static_cast<long>(m_bound), 1'000'000);
                if (!e.complete) exhausted = false;
                if (e.solutions.empty()) return std::nullopt;
                return e.solutions.front();
            }
        }
        return std::nullopt;
    }

    void accept_check(std::size_t t_done) {
        for (std::size_t h = 0; h < gens.size(); ++h)
            if (done[h] != inst.generators[gens[h]].cols()) return;
        if (t_done != inst.target.cols()) return;
        auto coeff = coefficients();
        if (!coeff) return;
        Witness w;
        w.slots = slot_bound;
        for (std::size_t h = 0; h < gens.size(); ++h) {
            if ((*coeff)[h].is_zero() && !slots_used[h].empty()) continue;
            if (inst.generators[gens[h]].cols() == 0) continue;
            w.terms.push_back({(*coeff)[h], gens[h], slots_used[h]});
        }
        std::string rep;
        if (verify_witness(inst, w, domain, &rep)) found = w;
    }

    void dfs(std::size_t p, std::size_t t_done) {
        if (found) return;
        if (++nodes > budget) {
            exhausted = false;
            return;
        }
        const std::size_t m = gens.size(), n = inst.target.cols();
        // an entirely empty unassigned slot can always be shifted to the
        // end, so the remaining slots may as well all stay empty: try to
        // close the arrangement here
        accept_check(t_done);
        if (found) return;
        if (p == slot_bound) return;
        if (n - t_done > slot_bound - p) return;
        for (std::size_t h = 0; h < m; ++h)
            if (inst.generators[gens[h]].cols() - done[h] > slot_bound - p) return;

        // nonempty contribution or a target assignment at this slot
        for (std::uint64_t mask = 0; mask < (1ULL << m) && !found; ++mask) {
            bool ok = true;
            for (std::size_t h = 0; h < m && ok; ++h) {
                if (!((mask >> h) & 1U)) continue;
                if (done[h] >= inst.generators[gens[h]].cols()) ok = false;
                // canonical order among copies of the same generator
                if (ok && h > 0 && gens[h - 1] == gens[h] && done[h - 1] == done[h] &&
                    !((mask >> (h - 1)) & 1U))
                    ok = false;
            }
            if (!ok) continue;
            for (int assign = 0; assign <= 1 && !found; ++assign) {
                if (assign && t_done == n) continue;
                if (!assign && mask == 0) continue;  // handled by the closing shortcut
                // a lone column on an unassigned slot pins its coefficient
                // to zero; the smaller multiset already covers that
                if (!assign && (mask & (mask - 1)) == 0) continue;
                std::size_t saved_rows = ech_rows.size();
                bool consistent = true;
                for (std::size_t r = 0; r < inst.dimension && consistent; ++r) {
                    RatVec eq(m + 1);
                    for (std::size_t h = 0; h < m; ++h)
                        if ((mask >> h) & 1U) eq[h] = inst.generators[gens[h]].at(r, done[h]);
                    eq[m] = assign ? inst.target.at(r, t_done) : Rat(0);
                    consistent = add_equation(eq);
                }
                if (consistent) {
                    for (std::size_t h = 0; h < m; ++h)
                        if ((mask >> h) & 1U) {
                            slots_used[h].push_back(p);
                            ++done[h];
                        }
                    dfs(p + 1, t_done + (assign ? 1 : 0));
                    for (std::size_t h = 0; h < m; ++h)
                        if ((mask >> h) & 1U) {
                            slots_used[h].pop_back();
                            --done[h];
                        }
                }
                ech_rows.resize(saved_rows);
            }
        }
    }
};

void multisets_rec(std::size_t k, std::size_t max_len, std::size_t start,
                   std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
    out.push_back(cur);
    if (cur.size() == max_len) return;
    for (std::size_t g = start; g < k; ++g) {
        cur.push_back(g);
        multisets_rec(k, max_len, g, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Verdict oracle_pproduct(const MatrixInstance& inst, Domain domain, std::size_t m_bound,
                        std::size_t slot_bound, std::uint64_t node_budget) {
    std::vector<std::vector<std::size_t>> multisets;
    std::vector<std::size_t> cur;
    multisets_rec(inst.generators.size(), m_bound, 0, cur, multisets);

    std::uint64_t budget_left = node_budget;
    RatVec target_sum = undata(inst.target);
    for (const auto& ms : multisets) {
        bool fits = true;
        for (std::size_t g : ms)
            if (inst.generators[g].cols() > slot_bound) fits = false;
        if (!fits) continue;
        // summing every slot equation forces the column sums to balance
        {
            RatMat sums(inst.dimension, ms.size());
            for (std::size_t h = 0; h < ms.size(); ++h)
                sums.set_col(h, undata(inst.generators[ms[h]]));
            if (!solve_rational(LinSys(sums, target_sum))) continue;
        }
        OracleDfs dfs(inst, domain, m_bound, slot_bound, budget_left);
        dfs.gens = ms;
        dfs.done.assign(ms.size(), 0);
        dfs.slots_used.assign(ms.size(), {});
        dfs.dfs(0, 0);
        budget_left = dfs.nodes >= budget_left ? 0 : budget_left - dfs.nodes;
        if (dfs.found) {
            assert(verify_witness(inst, *dfs.found, domain));
            return {SolveStatus::Solvable, std::move(*dfs.found), std::nullopt};
        }
        if (budget_left == 0) break;
    }
    return {SolveStatus::Unknown, std::nullopt, std::nullopt};
}

}  // namespace odlin
