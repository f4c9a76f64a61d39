#include <benchmark/benchmark.h>

#include <numeric>

#include "uiseq/construct.hpp"
#include "uiseq/correlate.hpp"
#include "uiseq/verify.hpp"

namespace {

using namespace uiseq;

void BM_MaxCrosscorr(benchmark::State& state) {
  const auto set = default_user_set(Construction::crtm, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_crosscorr(set[0], set[1]));
  }
  state.counters["L"] = static_cast<double>(set.period());
}
BENCHMARK(BM_MaxCrosscorr)->Arg(10)->Arg(30)->Arg(100)->Arg(300);

void BM_CorrelationProfile(benchmark::State& state) {
  const auto set = default_user_set(Construction::crtm, state.range(0));
  for (auto _ : state) {
    CorrelationProfile profile(set);
    benchmark::DoNotOptimize(profile.lambda_c());
  }
}
BENCHMARK(BM_CorrelationProfile)->Arg(10)->Arg(30)->Arg(60);

void BM_Lemma2(benchmark::State& state) {
  const auto set = default_user_set(Construction::crtm, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_ui_lemma2(set).is_ui);
  }
}
BENCHMARK(BM_Lemma2)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

// Exhaustive search grows as L^(M-1); keep it to small sets.
void BM_Exhaustive(benchmark::State& state) {
  const auto set = default_user_set(Construction::crtm, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_ui_exhaustive(set).is_ui);
  }
}
BENCHMARK(BM_Exhaustive)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
