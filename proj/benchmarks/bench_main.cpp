#include <benchmark/benchmark.h>

#include <random>

#include "odlin/histogram.hpp"
#include "odlin/simplex.hpp"
#include "odlin/solvers.hpp"

using namespace odlin;

namespace {

using Rng = std::mt19937_64;

RatMat rand_mat(Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    RatMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(d(rng));
    return m;
}

RatMat rand_histogram(Rng& rng, std::size_t r, std::size_t c, std::size_t s) {
    RatMat h(r, c);
    for (std::size_t k = 0; k < s; ++k) {
        std::vector<std::size_t> cols(c);
        for (std::size_t i = 0; i < c; ++i) cols[i] = i;
        std::shuffle(cols.begin(), cols.end(), rng);
        cols.resize(r);
        std::sort(cols.begin(), cols.end());
        h += SimpleHistogram(r, c, cols).to_matrix();
    }
    return h;
}

MatrixInstance rand_instance(Rng& rng, std::size_t d, std::size_t k, std::size_t s) {
    std::uniform_int_distribution<long> e(-3, 3);
    auto cols = [&](std::size_t lo) {
        std::size_t c = lo + rng() % (s + 1 - lo);
        RatMat m(d, c);
        for (std::size_t j = 0; j < c; ++j) {
            RatVec v(d);
            for (std::size_t i = 0; i < d; ++i) v[i] = Rat(e(rng));
            if (v.is_zero()) v[0] = Rat(1);
            m.set_col(j, v);
        }
        return m;
    };
    RatMat target = cols(0);
    std::vector<RatMat> gens;
    for (std::size_t j = 0; j < k; ++j) gens.push_back(cols(1));
    return MatrixInstance(d, target, gens);
}

void bm_solve_rational(benchmark::State& state) {
    Rng rng(1);
    std::size_t n = state.range(0);
    RatMat a = rand_mat(rng, n, n, -5, 5);
    RatVec b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = Rat(static_cast<long>(i % 3));
    for (auto _ : state) benchmark::DoNotOptimize(solve_rational(LinSys(a, b)));
}
BENCHMARK(bm_solve_rational)->Arg(4)->Arg(8)->Arg(16);

void bm_simplex_feasibility(benchmark::State& state) {
    Rng rng(2);
    std::size_t n = state.range(0);
    RatMat a = rand_mat(rng, n / 2, n, -3, 3);
    RatVec b(n / 2);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = Rat(1);
    for (auto _ : state) benchmark::DoNotOptimize(feasible_nonneg_strict(LinSys(a, b), {}));
}
BENCHMARK(bm_simplex_feasibility)->Arg(8)->Arg(16)->Arg(32);

void bm_decompose(benchmark::State& state) {
    Rng rng(3);
    std::size_t r = state.range(0);
    RatMat h = rand_histogram(rng, r, r + 4, 6);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(h));
}
BENCHMARK(bm_decompose)->Arg(3)->Arg(5)->Arg(8);

void bm_solve_q(benchmark::State& state) {
    Rng rng(4);
    std::size_t d = state.range(0);
    MatrixInstance inst = rand_instance(rng, d, d, 4);
    for (auto _ : state) benchmark::DoNotOptimize(solve_q(inst));
}
BENCHMARK(bm_solve_q)->Arg(2)->Arg(4)->Arg(8);

void bm_solve_qplus(benchmark::State& state) {
    Rng rng(5);
    std::size_t d = state.range(0);
    MatrixInstance inst = rand_instance(rng, d, 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(solve_qplus(inst));
}
BENCHMARK(bm_solve_qplus)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
