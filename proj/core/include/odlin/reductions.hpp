#pragma once

#include <optional>
#include <vector>

#include "odlin/datavec.hpp"
#include "odlin/histogram.hpp"
#include "odlin/linpn.hpp"
#include "odlin/solvers.hpp"

namespace odlin {

// A data realization of an integer action: a spread of its negative part
// over low data values and a spread of its positive part over strictly
// higher ones.
struct DataRealization {
    RatVec action;
    std::vector<RatVec> neg_parts;  // nonzero, sum to the negative part
    std::vector<RatVec> pos_parts;  // nonzero, sum to the positive part

    // The realization as a data vector on canonical data 1, 2, ...:
    // negated low block followed by the positive high block.
    DataVector combined() const;
};

// All data realizations of an integer vector up to order isomorphism. The
// count is exponential in the entries, so the 1-norm is capped; callers
// wanting more must raise the cap explicitly.
std::vector<DataRealization> enumerate_realizations(const RatVec& a, long norm_cap = 12);

// Reduces final-marking reachability to zero reachability: one extra token
// counter that a single closing action spends together with the final
// marking. Reaching zero in the result is equivalent to reaching the
// original final configuration.
Vas normalize_final_zero(const Vas& vas);

struct VasReduction {
    Instance instance;
    MatrixInstance matrix;
    std::vector<std::size_t> generator_action;     // generator -> action index
    std::vector<std::size_t> generator_neg_count;  // columns in the low block
};

// The reachability-to-solvability compiler: generators are all realizations
// of all actions, the target is the negated single-datum spread of init.
// Requires final = 0 (see normalize_final_zero).
VasReduction vas_to_instance(const Vas& vas, long norm_cap = 12);

// Rearranges a verified witness of the reduced instance into a run of the
// source VAS by topologically ordering terms along the immediate-consequence
// relation (a term producing at a slot precedes every term consuming there).
// The result re-validates as a nonnegative run from init to final.
std::vector<std::size_t> witness_to_run(const Vas& vas, const VasReduction& red,
                                        const Witness& w);

// The solvability-to-reachability compiler: a VAS that reads stacked columns
// from a finite alphabet, checks the histogram conditions of every generator
// block through buffer/profile counter pairs, and tracks the target-column
// language with one-hot control counters. Init carries the first control
// token; accepting means reaching the all-zero configuration.
struct MhAction {
    enum class Kind { Read, Move, Accept };
    Kind kind = Kind::Read;
    std::size_t letter = 0;  // Read: alphabet index
    long target = -1;        // Read: matched target column, -1 for homogeneous
    std::size_t block = 0;   // Move: generator block
    std::size_t row = 0;     // Move: buffer row within the block
};

struct MultihistVas {
    Vas vas;
    std::vector<MhAction> meta;            // one entry per vas action
    std::vector<RatVec> alphabet;
    std::vector<std::size_t> block_off;    // counter offset per generator block
    std::vector<std::size_t> block_rows;   // r_j per block
    std::size_t counters = 0;              // histogram counters, then control
    std::size_t control_off = 0;

    MultihistVas(Vas v) : vas(std::move(v)) {}
};

MultihistVas instance_to_vas(const MatrixInstance& inst, const std::vector<RatVec>& alphabet);

// Monotone assignment of target columns to word positions, or nothing:
// position j maps to a target index or -1 (homogeneous padding).
std::optional<std::vector<long>> multihistogram_assignment(const Multihistogram& fam,
                                                           const RatMat& d,
                                                           const std::vector<RatMat>& ms,
                                                           HistMode mode);

// Canonical simulation of reading an integer multihistogram: moves exactly
// the next column's subtraction needs before every read, asserting the
// profile-counter invariant at each step, and closes with the accept action.
// Returns the action sequence, which ends in the all-zero configuration.
std::vector<std::size_t> drive_multihistogram(const MultihistVas& mhv, const Multihistogram& fam,
                                              const MatrixInstance& inst);

// Letters read along a run, stacked back into a multihistogram.
Multihistogram run_to_multihistogram(const MultihistVas& mhv, const std::vector<std::size_t>& run);

}  // namespace odlin
