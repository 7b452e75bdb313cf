#include <benchmark/benchmark.h>

#include "ggs/agcode.hpp"
#include "ggs/automorphisms.hpp"
#include "ggs/curve.hpp"
#include "ggs/semigroup.hpp"

namespace {

const ggs::Curve& curve25() {
  static ggs::Curve c(2, 5);
  return c;
}

void BM_EnumeratePoints(benchmark::State& state) {
  for (auto _ : state) {
    ggs::Curve c(2, 5);
    benchmark::DoNotOptimize(c.points().size());
  }
}
BENCHMARK(BM_EnumeratePoints)->Unit(benchmark::kMillisecond);

void BM_BuildCode(benchmark::State& state) {
  const ggs::Curve& c = curve25();
  for (auto _ : state) {
    ggs::EvalCode code = ggs::build_code(c, uint64_t(state.range(0)));
    benchmark::DoNotOptimize(code.rank);
  }
}
BENCHMARK(BM_BuildCode)->Arg(33)->Arg(99)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RankProfile(benchmark::State& state) {
  const ggs::Curve& c = curve25();
  for (auto _ : state) {
    auto profile = ggs::rank_profile(c, uint64_t(state.range(0)));
    benchmark::DoNotOptimize(profile.size());
  }
}
BENCHMARK(BM_RankProfile)->Arg(120)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_DualParamsSweep(benchmark::State& state) {
  ggs::CurveParams par = ggs::curve_params(2, 5);
  ggs::Semigroup h = ggs::Semigroup::from_generators({8, 22, 33});
  uint64_t lmax = uint64_t(state.range(0));
  for (auto _ : state) {
    uint64_t acc = 0;
    for (uint64_t l = 1; l <= lmax; ++l) acc += ggs::dual_params(l, par, h).d_ord;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_DualParamsSweep)->Arg(60)->Arg(160);

void BM_DualWeightSampling(benchmark::State& state) {
  const ggs::Curve& c = curve25();
  ggs::EvalCode code = ggs::build_code(c, 99);
  for (auto _ : state) {
    uint64_t w =
        ggs::min_dual_weight_sampled(code, c.field(), size_t(state.range(0)), 42);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_DualWeightSampling)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_OrbitDecomposition(benchmark::State& state) {
  const ggs::Curve& c = curve25();
  for (auto _ : state) {
    ggs::AutContext ctx(c);
    auto gens = ctx.q_group();
    gens.push_back(ctx.sigma_generator());
    benchmark::DoNotOptimize(ctx.orbit_sizes(gens).size());
  }
}
BENCHMARK(BM_OrbitDecomposition)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
