#include <benchmark/benchmark.h>

#include <random>

#include "weylchan/channel.hpp"
#include "weylchan/master_equation.hpp"
#include "weylchan/measures.hpp"
#include "weylchan/representations.hpp"
#include "weylchan/spectral.hpp"

using namespace weylchan;

namespace {

ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = Complex(dist(rng), dist(rng));
    return (g + g.adjoint()) * Complex(0.5, 0.0);
}

void BM_HermitianEigs(benchmark::State& state) {
    std::mt19937_64 rng(0);
    const ComplexMatrix h = random_hermitian(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigs(h));
    }
}
BENCHMARK(BM_HermitianEigs)->Arg(9)->Arg(16)->Arg(36)->Arg(64);

void BM_IntermediateChoiAnalytic(benchmark::State& state) {
    const IntermediateSpec spec(ChannelParams(static_cast<int>(state.range(0)), 0.5), 0.3, 0.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(intermediate_choi(spec));
    }
}
BENCHMARK(BM_IntermediateChoiAnalytic)->Arg(3)->Arg(6)->Arg(8);

void BM_IntermediateChoiNumeric(benchmark::State& state) {
    const IntermediateSpec spec(ChannelParams(static_cast<int>(state.range(0)), 0.5), 0.3, 0.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(intermediate_choi_numeric(spec));
    }
}
BENCHMARK(BM_IntermediateChoiNumeric)->Arg(3)->Arg(6)->Arg(8);

void BM_Evolve(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const ChannelParams params(d, 0.5);
    const DensityMatrix rho = DensityMatrix::maximally_mixed(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve(params, 0.7, rho));
    }
}
BENCHMARK(BM_Evolve)->Arg(3)->Arg(8)->Arg(16);

void BM_HclaMeasure(benchmark::State& state) {
    const ChannelParams params(static_cast<int>(state.range(0)), 0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hcla_measure(params));
    }
}
BENCHMARK(BM_HclaMeasure)->Arg(2)->Arg(3)->Arg(5);

void BM_MasterEquation(benchmark::State& state) {
    const ChannelParams params(3, 0.5);
    std::mt19937_64 rng(0);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix g(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g(i, j) = Complex(dist(rng), dist(rng));
    ComplexMatrix w = g * g.adjoint();
    w = w * Complex(1.0 / w.trace().real(), 0.0);
    w = (w + w.adjoint()) * Complex(0.5, 0.0);
    const DensityMatrix rho0(w);
    const double step = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_master(params, rho0, 0.0, 1.0, step));
    }
}
BENCHMARK(BM_MasterEquation)->Arg(1000)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
