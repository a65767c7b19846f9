#pragma once

#include <random>

#include "odlin/linsys.hpp"
#include "odlin/simplex.hpp"

namespace odlin::testutil {

using Rng = std::mt19937_64;

inline Rat rand_int(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Rat(d(rng));
}

inline RatVec rand_vec(Rng& rng, std::size_t n, long lo, long hi) {
    RatVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rand_int(rng, lo, hi);
    return v;
}

inline RatMat rand_mat(Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
    RatMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rand_int(rng, lo, hi);
    return m;
}

// Reference decision of {x >= 0, Ax = b} != {} by basic-solution
// enumeration: every nonempty standard-form polyhedron has a basic feasible
// solution supported on linearly independent columns.
inline bool feasible_by_vertex_enumeration(const LinSys& sys) {
    const std::size_t n = sys.variables();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if ((mask >> j) & 1U) cols.push_back(j);
        RatMat a(sys.equations(), cols.size());
        for (std::size_t r = 0; r < sys.equations(); ++r)
            for (std::size_t ci = 0; ci < cols.size(); ++ci) a.at(r, ci) = sys.a.at(r, cols[ci]);
        auto sol = solve_rational(LinSys(a, sys.b));
        if (!sol || !sol->kernel.empty()) continue;  // not a unique basic solve
        if (sol->particular.is_nonnegative()) return true;
    }
    return false;
}

}  // namespace odlin::testutil
