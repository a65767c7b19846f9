#include "odlin/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace odlin {

DataVector DataRealization::combined() const {
    std::vector<DataPoint> pts;
    long datum = 1;
    for (const auto& p : neg_parts) pts.push_back({Rat(datum++), -p});
    for (const auto& p : pos_parts) pts.push_back({Rat(datum++), p});
    return DataVector(action.size(), std::move(pts));
}

namespace {

// All ordered sequences of nonzero nonnegative integer vectors summing to b.
void spreads_rec(const RatVec& remaining, std::vector<RatVec>& cur,
                 std::vector<std::vector<RatVec>>& out) {
    if (remaining.is_zero()) {
        out.push_back(cur);
        return;
    }
    // enumerate nonzero parts <= remaining componentwise
    const std::size_t d = remaining.size();
    RatVec part(d);
    auto rec = [&](auto&& self, std::size_t coord) -> void {
        if (coord == d) {
            if (part.is_zero()) return;
            cur.push_back(part);
            spreads_rec(remaining - part, cur, out);
            cur.pop_back();
            return;
        }
        for (long v = 0; Rat(v) <= remaining[coord]; ++v) {
            part[coord] = Rat(v);
            self(self, coord + 1);
        }
        part[coord] = Rat(0);
    };
    rec(rec, 0);
}

std::vector<std::vector<RatVec>> spreads_of(const RatVec& b) {
    std::vector<std::vector<RatVec>> out;
    std::vector<RatVec> cur;
    spreads_rec(b, cur, out);
    return out;
}

}  // namespace

std::vector<DataRealization> enumerate_realizations(const RatVec& a, long norm_cap) {
    if (!a.is_integral()) throw input_error("enumerate_realizations: non-integral action");
    Rat norm;
    for (const auto& x : a) norm += x.abs();
    if (norm > Rat(norm_cap))
        throw input_error("enumerate_realizations: action 1-norm exceeds the cap of " +
                          Rat(norm_cap).str() + "; raise it explicitly for unary-size inputs");
    auto [pos, neg] = split_pos_neg(a);
    std::vector<DataRealization> out;
    for (const auto& negs : spreads_of(neg))
        for (const auto& poss : spreads_of(pos)) out.push_back({a, negs, poss});
    return out;
}

Vas normalize_final_zero(const Vas& vas) {
    const std::size_t d = vas.dimension;
    std::vector<RatVec> actions;
    for (const auto& a : vas.actions) {
        RatVec ext(d + 1);
        for (std::size_t l = 0; l < d; ++l) ext[l] = a[l];
        actions.push_back(std::move(ext));
    }
    RatVec closing(d + 1);
    for (std::size_t l = 0; l < d; ++l) closing[l] = -vas.final[l];
    closing[d] = Rat(-1);
    actions.push_back(std::move(closing));
    RatVec init(d + 1);
    for (std::size_t l = 0; l < d; ++l) init[l] = vas.init[l];
    init[d] = Rat(1);
    return Vas(d + 1, std::move(actions), std::move(init), RatVec(d + 1));
}

VasReduction vas_to_instance(const Vas& vas, long norm_cap) {
    if (!vas.final.is_zero())
        throw input_error("vas_to_instance requires final = 0; normalize_final_zero first");
    std::vector<DataVector> gens;
    std::vector<std::size_t> gen_action, gen_negs;
    for (std::size_t ai = 0; ai < vas.actions.size(); ++ai) {
        for (const auto& real : enumerate_realizations(vas.actions[ai], norm_cap)) {
            gens.push_back(real.combined());
            gen_action.push_back(ai);
            gen_negs.push_back(real.neg_parts.size());
        }
    }
    // target = minus the single-datum spread of init
    std::vector<DataPoint> tpts;
    if (!vas.init.is_zero()) tpts.push_back({Rat(1), -vas.init});
    DataVector target(vas.dimension, std::move(tpts));
    Instance inst(vas.dimension, std::move(target), std::move(gens));
    MatrixInstance mat = instance_to_matrix_problem(inst);
    return {std::move(inst), std::move(mat), std::move(gen_action), std::move(gen_negs)};
}

std::vector<std::size_t> witness_to_run(const Vas& vas, const VasReduction& red,
                                        const Witness& w) {
    std::string report;
    if (!verify_witness(red.matrix, w, Domain::N, &report))
        throw input_error("witness_to_run: witness does not verify: " + report);

    struct Term {
        std::size_t action;
        std::vector<std::size_t> neg_slots, pos_slots;
    };
    std::vector<Term> terms;
    for (const auto& t : w.terms) {
        long copies = t.coeff.to_long();
        std::size_t negs = red.generator_neg_count[t.generator];
        Term base;
        base.action = red.generator_action[t.generator];
        base.neg_slots.assign(t.placement.begin(),
                              t.placement.begin() + static_cast<long>(negs));
        base.pos_slots.assign(t.placement.begin() + static_cast<long>(negs),
                              t.placement.end());
        for (long c = 0; c < copies; ++c) terms.push_back(base);
    }

    // immediate consequence: producer before consumer at every shared slot
    const std::size_t m = terms.size();
    std::vector<std::vector<std::size_t>> succ(m);
    std::vector<std::size_t> indeg(m, 0);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            if (u == v) continue;
            bool edge = false;
            for (std::size_t s : terms[u].pos_slots)
                if (std::find(terms[v].neg_slots.begin(), terms[v].neg_slots.end(), s) !=
                    terms[v].neg_slots.end()) {
                    edge = true;
                    break;
                }
            if (edge) {
                succ[u].push_back(v);
                ++indeg[v];
            }
        }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t u = 0; u < m; ++u)
        if (indeg[u] == 0) ready.push(u);
    std::vector<std::size_t> run;
    while (!ready.empty()) {
        std::size_t u = ready.top();
        ready.pop();
        run.push_back(terms[u].action);
        for (std::size_t v : succ[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    if (run.size() != m)
        throw std::logic_error("witness_to_run: immediate-consequence relation has a cycle");

    RatVec c = vas.init;
    for (std::size_t ai : run) {
        c += vas.actions[ai];
        assert(c.is_nonnegative());
    }
    assert(c == vas.final);
    return run;
}

MultihistVas instance_to_vas(const MatrixInstance& inst, const std::vector<RatVec>& alphabet) {
    std::vector<std::size_t> block_off, block_rows;
    std::size_t counters = 0;
    for (const auto& g : inst.generators) {
        block_off.push_back(counters);
        block_rows.push_back(g.cols());
        counters += g.cols() >= 1 ? 2 * (g.cols() - 1) : 0;
    }
    const std::size_t n = inst.target.cols();
    const std::size_t dim = counters + n + 1;
    const std::size_t control = counters;
    std::size_t height = 0;
    for (std::size_t r : block_rows) height += r;

    std::vector<RatVec> actions;
    std::vector<MhAction> meta;
    auto reading_effect = [&](const RatVec& w) {
        RatVec eff(dim);
        std::size_t off = 0;
        for (std::size_t j = 0; j < block_rows.size(); ++j) {
            const std::size_t r = block_rows[j];
            for (std::size_t i = 0; i + 1 < r; ++i) {
                eff[block_off[j] + i] += w[off + i];                    // buffer gains row i
                eff[block_off[j] + (r - 1) + i] -= w[off + i + 1];      // profile pays row i+1
            }
            off += r;
        }
        return eff;
    };

    for (std::size_t li = 0; li < alphabet.size(); ++li) {
        const RatVec& w = alphabet[li];
        if (w.size() != height || !w.is_integral() || !w.is_nonnegative())
            throw input_error("instance_to_vas: alphabet letter of wrong shape");
        RatVec prod(inst.dimension);
        std::size_t off = 0;
        for (std::size_t j = 0; j < block_rows.size(); ++j) {
            for (std::size_t i = 0; i < block_rows[j]; ++i)
                for (std::size_t r = 0; r < inst.dimension; ++r)
                    prod[r] += inst.generators[j].at(r, i) * w[off + i];
            off += block_rows[j];
        }
        if (prod.is_zero()) {
            actions.push_back(reading_effect(w));
            MhAction a;
            a.kind = MhAction::Kind::Read;
            a.letter = li;
            a.target = -1;
            meta.push_back(a);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (prod != inst.target.col(i)) continue;
            RatVec eff = reading_effect(w);
            eff[control + i] -= Rat(1);
            eff[control + i + 1] += Rat(1);
            actions.push_back(std::move(eff));
            MhAction a;
            a.kind = MhAction::Kind::Read;
            a.letter = li;
            a.target = static_cast<long>(i);
            meta.push_back(a);
        }
    }
    for (std::size_t j = 0; j < block_rows.size(); ++j) {
        const std::size_t r = block_rows[j];
        for (std::size_t i = 0; i + 1 < r; ++i) {
            RatVec eff(dim);
            eff[block_off[j] + i] = Rat(-1);
            eff[block_off[j] + (r - 1) + i] = Rat(1);
            actions.push_back(std::move(eff));
            MhAction a;
            a.kind = MhAction::Kind::Move;
            a.block = j;
            a.row = i;
            meta.push_back(a);
        }
    }
    {
        RatVec eff(dim);
        eff[control + n] = Rat(-1);
        actions.push_back(std::move(eff));
        MhAction a;
        a.kind = MhAction::Kind::Accept;
        meta.push_back(a);
    }

    RatVec init(dim);
    init[control] = Rat(1);
    MultihistVas out(Vas(dim, std::move(actions), std::move(init), RatVec(dim)));
    out.meta = std::move(meta);
    out.alphabet = alphabet;
    out.block_off = std::move(block_off);
    out.block_rows = std::move(block_rows);
    out.counters = counters;
    out.control_off = control;
    return out;
}

std::optional<std::vector<long>> multihistogram_assignment(const Multihistogram& fam,
                                                           const RatMat& d,
                                                           const std::vector<RatMat>& ms,
                                                           HistMode mode) {
    if (!is_multihistogram(fam, d, ms, mode)) return std::nullopt;
    const std::size_t c = fam.family.empty() ? 0 : fam.family[0].cols();
    const std::size_t n = d.cols();
    std::vector<long> assign(c, -1);
    // greedy with lookahead: since is_multihistogram already holds, walk
    // left to right matching the next target whenever the suffix can still
    // complete; the suffix test reuses the membership DP on a shifted word.
    std::vector<RatVec> prods(c, RatVec(d.rows()));
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t g = 0; g < ms.size(); ++g) prods[j] += ms[g].mul(fam.family[g].col(j));

    // completes[j][t]: positions j.. can match targets t..n-1
    std::vector<std::vector<bool>> completes(c + 1, std::vector<bool>(n + 1, false));
    completes[c][n] = true;
    for (std::size_t j = c; j-- > 0;)
        for (std::size_t t = 0; t <= n; ++t) {
            bool ok = false;
            if (prods[j].is_zero() && completes[j + 1][t]) ok = true;
            if (!ok && t < n && prods[j] == d.col(t) && completes[j + 1][t + 1]) ok = true;
            completes[j][t] = ok;
        }
    std::size_t t = 0;
    for (std::size_t j = 0; j < c; ++j) {
        if (t < n && prods[j] == d.col(t) && completes[j + 1][t + 1]) {
            assign[j] = static_cast<long>(t);
            ++t;
        } else if (prods[j].is_zero() && completes[j + 1][t]) {
            assign[j] = -1;
        } else {
            return std::nullopt;  // unreachable given the membership check
        }
    }
    return assign;
}

namespace {

std::size_t find_action(const MultihistVas& mhv, MhAction::Kind kind, std::size_t letter,
                        long target, std::size_t block, std::size_t row) {
    for (std::size_t i = 0; i < mhv.meta.size(); ++i) {
        const MhAction& a = mhv.meta[i];
        if (a.kind != kind) continue;
        if (kind == MhAction::Kind::Read && (a.letter != letter || a.target != target)) continue;
        if (kind == MhAction::Kind::Move && (a.block != block || a.row != row)) continue;
        return i;
    }
    throw input_error("drive_multihistogram: required action is missing from the gadget");
}

}  // namespace

std::vector<std::size_t> drive_multihistogram(const MultihistVas& mhv, const Multihistogram& fam,
                                              const MatrixInstance& inst) {
    const std::size_t c = fam.family.empty() ? 0 : fam.family[0].cols();

    auto assignment =
        multihistogram_assignment(fam, inst.target, inst.generators, HistMode::Integer);
    if (!assignment) throw input_error("drive_multihistogram: not a multihistogram");
    const std::vector<long>& assign = *assignment;

    // locate the word's letters in the alphabet
    std::size_t height = 0;
    for (std::size_t r : mhv.block_rows) height += r;
    std::vector<std::size_t> letter_of(c);
    for (std::size_t col = 0; col < c; ++col) {
        RatVec stacked(height);
        std::size_t off = 0;
        for (std::size_t j = 0; j < fam.family.size(); ++j) {
            for (std::size_t i = 0; i < mhv.block_rows[j]; ++i)
                stacked[off + i] = fam.family[j].at(i, col);
            off += mhv.block_rows[j];
        }
        bool found = false;
        for (std::size_t li = 0; li < mhv.alphabet.size(); ++li)
            if (mhv.alphabet[li] == stacked) {
                letter_of[col] = li;
                found = true;
                break;
            }
        if (!found) throw input_error("drive_multihistogram: word column outside the alphabet");
    }

    std::vector<std::size_t> run;
    RatVec conf = mhv.vas.init;
    auto fire = [&](std::size_t action) {
        conf += mhv.vas.actions[action];
        assert(conf.is_nonnegative());
        run.push_back(action);
    };
    for (std::size_t col = 0; col < c; ++col) {
        // moves: pay the next column's profile subtractions in advance
        for (std::size_t j = 0; j < fam.family.size(); ++j) {
            const std::size_t r = mhv.block_rows[j];
            for (std::size_t i = 0; i + 1 < r; ++i) {
                long units = fam.family[j].at(i + 1, col).to_long();
                std::size_t mv = find_action(mhv, MhAction::Kind::Move, 0, 0, j, i);
                for (long u = 0; u < units; ++u) fire(mv);
                // invariant: buffer holds the profile value, the profile
                // counter exactly the upcoming subtraction
                RatMat p = profile(fam.family[j]);
                assert(conf[mhv.block_off[j] + i] == p.at(i, col));
                assert(conf[mhv.block_off[j] + (r - 1) + i] == fam.family[j].at(i + 1, col));
            }
        }
        fire(find_action(mhv, MhAction::Kind::Read, letter_of[col], assign[col], 0, 0));
    }
    fire(find_action(mhv, MhAction::Kind::Accept, 0, 0, 0, 0));
    assert(conf.is_zero());
    return run;
}

Multihistogram run_to_multihistogram(const MultihistVas& mhv,
                                     const std::vector<std::size_t>& run) {
    std::vector<RatVec> word;
    for (std::size_t ai : run)
        if (mhv.meta[ai].kind == MhAction::Kind::Read)
            word.push_back(mhv.alphabet[mhv.meta[ai].letter]);
    Multihistogram fam;
    std::size_t off = 0;
    for (std::size_t j = 0; j < mhv.block_rows.size(); ++j) {
        RatMat h(mhv.block_rows[j], word.size());
        for (std::size_t c = 0; c < word.size(); ++c)
            for (std::size_t i = 0; i < mhv.block_rows[j]; ++i) h.at(i, c) = word[c][off + i];
        fam.family.push_back(std::move(h));
        off += mhv.block_rows[j];
    }
    return fam;
}

}  // namespace odlin
