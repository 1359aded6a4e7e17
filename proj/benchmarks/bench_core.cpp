#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "muskit/entropy.hpp"
#include "muskit/mus.hpp"
#include "muskit/order.hpp"
#include "muskit/quantum.hpp"
#include "muskit/thermo.hpp"
#include "muskit/uncertainty.hpp"

namespace {

using namespace muskit;
using entropy::AlphaGrid;
using entropy::ProbDist;
using entropy::RenyiOrder;

ProbDist make_dist(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(n);
    double s = 0.0;
    for (double& x : v) {
        x = -std::log(u(gen) + 1e-300);
        s += x;
    }
    for (double& x : v) x /= s;
    return ProbDist(std::move(v));
}

void BM_renyi_entropy(benchmark::State& state) {
    const ProbDist p = make_dist(static_cast<std::size_t>(state.range(0)), 1);
    const RenyiOrder a = RenyiOrder::finite(2.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(entropy::renyi_entropy(p, a));
    }
}
BENCHMARK(BM_renyi_entropy)->Arg(8)->Arg(64)->Arg(512);

void BM_renyi_grid(benchmark::State& state) {
    const ProbDist p = make_dist(64, 2);
    const AlphaGrid grid = AlphaGrid::default_grid();
    for (auto _ : state) {
        double acc = 0.0;
        for (const RenyiOrder& a : grid) acc += entropy::renyi_entropy(p, a);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_renyi_grid);

void BM_majorizes(benchmark::State& state) {
    const ProbDist p = make_dist(static_cast<std::size_t>(state.range(0)), 3);
    const ProbDist q = make_dist(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(order::majorizes(p, q));
    }
}
BENCHMARK(BM_majorizes)->Arg(16)->Arg(256);

void BM_trumping_verdict(benchmark::State& state) {
    const ProbDist p = make_dist(8, 5);
    const ProbDist q = make_dist(8, 6);
    const AlphaGrid grid = AlphaGrid::default_grid();
    for (auto _ : state) {
        benchmark::DoNotOptimize(order::trumping_verdict(p, q, grid));
    }
}
BENCHMARK(BM_trumping_verdict);

void BM_haar_unitary(benchmark::State& state) {
    std::uint64_t seed = 0;
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantum::haar_unitary(d, seed++));
    }
}
BENCHMARK(BM_haar_unitary)->Arg(2)->Arg(5)->Arg(8);

void BM_flip_threshold(benchmark::State& state) {
    const ProbDist p({0.77, 0.10, 0.10, 0.03});
    const ProbDist q({0.63, 0.35, 0.01, 0.01});
    const RenyiOrder one = RenyiOrder::shannon();
    for (auto _ : state) {
        benchmark::DoNotOptimize(uncertainty::flip_threshold(p, q, one));
    }
}
BENCHMARK(BM_flip_threshold);

void BM_qubit_mus_theta(benchmark::State& state) {
    const uncertainty::NoiseLevel nl(0.5);
    const RenyiOrder a = RenyiOrder::finite(1.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mus::qubit_mus_theta(0.7853981633974483, nl, a));
    }
}
BENCHMARK(BM_qubit_mus_theta);

void BM_optimize_h2_qutrit(benchmark::State& state) {
    const auto pair = quantum::rotation_pair_qutrit(0.5235987755982988);
    const int restarts = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mus::optimize_h2_pure(pair, restarts, seed++));
    }
}
BENCHMARK(BM_optimize_h2_qutrit)->Arg(1)->Arg(9);

void BM_thermo_majorizes(benchmark::State& state) {
    const thermo::ThermoContext ctx({0.0, 0.5, 1.0, 1.7, 2.2, 3.0}, 1.1);
    const ProbDist p = make_dist(6, 7);
    const ProbDist q = make_dist(6, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(thermo::thermo_majorizes(p, q, ctx));
    }
}
BENCHMARK(BM_thermo_majorizes);

}  // namespace

BENCHMARK_MAIN();
