#include <benchmark/benchmark.h>

#include "oldroyd/analysis/trajectory.hpp"
#include "oldroyd/integrate/integrator.hpp"
#include "oldroyd/lp/filter_bank.hpp"
#include "oldroyd/spectral/fft.hpp"
#include "oldroyd/spectral/random_field.hpp"

using namespace oldroyd;

namespace {

spectral::Grid grid_for(const benchmark::State& st) {
    return spectral::Grid(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
}

model::State random_state(const spectral::Grid& g) {
    model::State s = model::State::zero(g);
    s.u = 0.1 * spectral::random_divfree(g, {2.0, 0.0}, 1);
    s.tau = 0.1 * spectral::random_symtensor(g, {2.0, 0.0}, 2);
    return s;
}

void args(benchmark::internal::Benchmark* b) { b->Args({2, 64})->Args({2, 128})->Args({3, 32}); }

void BM_TransformRoundTrip(benchmark::State& st) {
    const auto g = grid_for(st);
    auto f = spectral::random_scalar(g, {}, 3);
    for (auto _ : st) {
        auto phys = f.physical();
        f = spectral::ScalarField::from_physical(g, phys);
        benchmark::DoNotOptimize(f.coeffs().data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_TransformRoundTrip)->Apply(args);

void BM_Rhs(benchmark::State& st) {
    const auto g = grid_for(st);
    const model::ModelParams p(1.0, 1.0, 0.5, 0.2, g.dim());
    const auto s = random_state(g);
    for (auto _ : st) benchmark::DoNotOptimize(model::rhs(s, p));
}
BENCHMARK(BM_Rhs)->Apply(args)->Unit(benchmark::kMillisecond);

void BM_Step(benchmark::State& st) {
    const auto g = grid_for(st);
    const model::ModelParams p(1.0, 1.0, 0.5, 0.2, g.dim());
    auto s = random_state(g);
    for (auto _ : st) s = integrate::step(s, p, 1e-3);
}
BENCHMARK(BM_Step)->Apply(args)->Unit(benchmark::kMillisecond);

void BM_BlockNorms(benchmark::State& st) {
    const auto g = grid_for(st);
    const lp::DyadicFilterBank bank(g);
    const auto s = random_state(g);
    for (auto _ : st) benchmark::DoNotOptimize(analysis::sample_blocks(bank, s));
}
BENCHMARK(BM_BlockNorms)->Apply(args)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
