#include <benchmark/benchmark.h>

#include "uiseq/construct.hpp"
#include "uiseq/simulate.hpp"

namespace {

using namespace uiseq;

SimConfig protocol_config(std::int64_t m, double pa) {
  SimConfig c;
  c.scheme = ProtocolScheme{default_user_set(Construction::crtm, m)};
  c.users = static_cast<std::size_t>(m);
  c.activation_probability = pa;
  c.samples = 20000;
  c.master_seed = 7;
  return c;
}

SimConfig random_config(std::int64_t m, RandomAccessMethod method) {
  SimConfig c;
  c.scheme = RandomAccessScheme{1.0 / static_cast<double>(m), method};
  c.users = static_cast<std::size_t>(m);
  c.samples = 20000;
  c.master_seed = 7;
  return c;
}

void BM_ProtocolSim(benchmark::State& state) {
  const auto config = protocol_config(state.range(0), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.samples));
}
BENCHMARK(BM_ProtocolSim)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_RandomAccessGaps(benchmark::State& state) {
  const auto config = random_config(state.range(0), RandomAccessMethod::success_gaps);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.samples));
}
BENCHMARK(BM_RandomAccessGaps)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_RandomAccessPerSlot(benchmark::State& state) {
  const auto config = random_config(state.range(0), RandomAccessMethod::per_slot);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.samples));
}
BENCHMARK(BM_RandomAccessPerSlot)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
