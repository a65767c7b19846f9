#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odlin/datavec.hpp"
#include "odlin/histogram.hpp"

namespace odlin {

enum class Domain { N, Z, Q, Qplus };

enum class SolveStatus { Solvable, Unsolvable, Unknown };

// One summand of an exchange-product witness: coefficient times generator
// placed at the given strictly increasing slot positions.
struct WitnessTerm {
    Rat coeff;
    std::size_t generator;
    std::vector<std::size_t> placement;
};

struct Witness {
    std::vector<WitnessTerm> terms;
    std::size_t slots = 0;
};

struct Verdict {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<Witness> witness;          // placement witnesses (N, Z, Q)
    std::optional<RatVec> qplus_evidence;    // assembled semi-equation solution
};

// Scales and places the witness terms and checks that they sum to a
// 0-extension of the target matrix, with all coefficients in the claimed
// domain. Malformed witnesses yield false with a report, never an exception.
bool verify_witness(const MatrixInstance& inst, const Witness& w, Domain domain,
                    std::string* report = nullptr);

// Rational and integer solvers: target is solvable iff its column sum is a
// domain-sum of the generators' column sums and every target column is a
// domain-sum of the generator columns. Solvable verdicts carry a
// constructively synthesized placement witness (all mass through a hub slot,
// then moves outward to the target slots).
Verdict solve_q(const MatrixInstance& inst);
Verdict solve_z(const MatrixInstance& inst);

// Nonnegative-rational solver: assembles the reachability semi-equations of
// the histogram-checking Petri net (one copy per target gap, linked by the
// nonhomogeneous target-column steps) and decides it with the semi-equation
// engine. Verdicts carry the semi-equation solution as evidence.
Verdict solve_qplus(const MatrixInstance& inst);

// Bounded search for an integer multihistogram: words of at most col_bound
// candidate columns with entries at most entry_bound. Without
// bound_is_complete an exhausted search reports Unknown, because the true
// column bound is parameterized rather than computed.
Verdict solve_n_bounded(const MatrixInstance& inst, std::size_t col_bound, long entry_bound,
                        bool bound_is_complete = false,
                        std::uint64_t node_budget = 20'000'000);

struct MultihistogramSearch {
    std::optional<Multihistogram> found;
    bool exhausted = false;  // true when the whole bounded space was covered
};

MultihistogramSearch find_multihistogram_bounded(const MatrixInstance& inst,
                                                 std::size_t col_bound, long entry_bound,
                                                 std::uint64_t node_budget = 20'000'000);

// Converts an integer multihistogram into a placement witness by simple-
// histogram decomposition of every family member.
Witness multihistogram_to_witness(const Multihistogram& fam);

// Reference oracle: enumerates multisets of at most m_bound generator
// copies and all joint monotone placements into slot_bound slots consistent
// with a 0-extension of the target, deciding coefficient existence exactly
// per arrangement. Returns Solvable with a witness or Unknown; never
// Unsolvable.
Verdict oracle_pproduct(const MatrixInstance& inst, Domain domain, std::size_t m_bound,
                        std::size_t slot_bound, std::uint64_t node_budget = 50'000'000);

}  // namespace odlin
