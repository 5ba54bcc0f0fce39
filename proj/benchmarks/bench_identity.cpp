#include <benchmark/benchmark.h>

#include "foliage/singular.hpp"
#include "foliage_app/catalog.hpp"

using namespace foliage;

namespace {

const PForm& eta(unsigned nu, unsigned d) {
  static const PForm cache[2][2] = {
      {pullback_foliation(app::binomial_map(2), app::reference_foliation(2)).eta,
       pullback_foliation(app::binomial_map(2), app::reference_foliation(3)).eta},
      {pullback_foliation(app::binomial_map(3), app::reference_foliation(2)).eta,
       pullback_foliation(app::binomial_map(3), app::reference_foliation(3)).eta}};
  return cache[nu - 2][d - 2];
}

CheckMode mode_of(const benchmark::State& state) {
  return state.range(2) == 0 ? CheckMode::exact() : CheckMode::prob(kPrime62, 2);
}

void BM_Pullback(benchmark::State& state) {
  const RationalMap f = app::binomial_map(static_cast<unsigned>(state.range(0)));
  const Foliation1D g = app::reference_foliation(static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pullback_foliation(f, g));
  }
}
BENCHMARK(BM_Pullback)->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

// Radial, Euler and integrability on one pull-back; third argument 0 = exact, 1 = probabilistic.
void BM_IdentitySet(benchmark::State& state) {
  const PForm& a = eta(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const CheckMode mode = mode_of(state);
  for (auto _ : state) {
    const bool ok = radial_check(a, mode) && euler_relation_check(a, mode) && is_integrable(a, mode);
    benchmark::DoNotOptimize(ok);
  }
  state.SetLabel(mode.name());
}
BENCHMARK(BM_IdentitySet)
    ->Args({2, 2, 0})
    ->Args({2, 2, 1})
    ->Args({3, 3, 0})
    ->Args({3, 3, 1})
    ->Unit(benchmark::kMillisecond);

void BM_SingCount(benchmark::State& state) {
  const Foliation1D g = state.range(0) == 2 ? app::hyperbolic_quadratic_foliation() : app::cubic_foliation();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sing_count_p2(g));
  }
}
BENCHMARK(BM_SingCount)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ConicCheck(benchmark::State& state) {
  const PForm omega = omega_from_1d(app::hyperbolic_quadratic_foliation());
  const Point origin{0, 0, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_conic_ngk_at(omega, origin, 2));
  }
}
BENCHMARK(BM_ConicCheck)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
