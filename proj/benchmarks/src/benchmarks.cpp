#include <benchmark/benchmark.h>

#include "entroverify/channel_entropy.hpp"
#include "entroverify/channels.hpp"
#include "entroverify/conditional_entropy.hpp"
#include "entroverify/divergences.hpp"
#include "entroverify/harness.hpp"
#include "entroverify/random.hpp"
#include "entroverify/states.hpp"

namespace ev = entroverify;

namespace {

void BM_FracPower(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const ev::DensityOperator rho = ev::random_density(d, d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ev::frac_power(rho.op(), -0.3));
}
BENCHMARK(BM_FracPower)->Arg(4)->Arg(9)->Arg(16);

void BM_SandwichedRenyi(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const ev::DensityOperator rho = ev::random_density(d, d, 2);
  const ev::DensityOperator sigma = ev::random_density(d, d, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev::sandwiched_renyi(rho.op(), sigma.op(), ev::RenyiOrder(1.5)));
  }
}
BENCHMARK(BM_SandwichedRenyi)->Arg(4)->Arg(9)->Arg(16);

void BM_RenyiDown(benchmark::State& state) {
  const ev::BipartiteState rho(ev::random_density(12, 12, 4).with_dims({3, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(ev::renyi_down(rho, ev::RenyiOrder(0.75)));
}
BENCHMARK(BM_RenyiDown);

void BM_RenyiUp(benchmark::State& state) {
  const ev::BipartiteState rho(ev::random_density(6, 6, 5).with_dims({2, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(ev::renyi_up(rho, ev::RenyiOrder(0.75)));
}
BENCHMARK(BM_RenyiUp)->Unit(benchmark::kMillisecond);

void BM_DiamondDistance(benchmark::State& state) {
  const ev::QuantumChannel n = ev::random_channel(2, 2, 6);
  const ev::QuantumChannel m = ev::random_channel(2, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ev::diamond_distance(n, m));
}
BENCHMARK(BM_DiamondDistance)->Unit(benchmark::kMillisecond);

void BM_ChannelEntropy(benchmark::State& state) {
  const ev::QuantumChannel n = ev::random_channel(2, 2, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev::channel_entropy(n, ev::EntropySpec::tsallis(0.75)));
  }
}
BENCHMARK(BM_ChannelEntropy)->Unit(benchmark::kMillisecond);

void BM_ContinuityTrials(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ev::verify_conditional_continuity("renyi_lt1", {0.75}, {{2, 3}}, 100, 9));
  }
}
BENCHMARK(BM_ContinuityTrials)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
