#include <benchmark/benchmark.h>

#include "walkmeg/channel.hpp"
#include "walkmeg/momentum.hpp"
#include "walkmeg/search.hpp"
#include "walkmeg/walk.hpp"

using namespace walkmeg;

static void BM_Evolve(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  std::vector<std::uint8_t> bits(steps);
  for (std::size_t i = 0; i < steps; ++i) bits[i] = (i * 7 + 3) % 5 < 2;
  const CoinSequence seq(named_coin(NamedCoin::H), named_coin(NamedCoin::I), BitString(bits));
  for (auto _ : state) benchmark::DoNotOptimize(evolve(InitialCoinState::diagonal(), seq));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(steps));
}
BENCHMARK(BM_Evolve)->Arg(10)->Arg(20)->Arg(100)->Arg(1000);

static void BM_SequenceFidelity(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const CoinSequence seq = generate_table_sequence(steps);
  for (auto _ : state) benchmark::DoNotOptimize(sequence_fidelity(seq));
}
BENCHMARK(BM_SequenceFidelity)->Arg(10)->Arg(20);

static void BM_MomentumMap(benchmark::State& state) {
  const BitString bits = table_bits(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(momentum_averaged_map(bits));
}
BENCHMARK(BM_MomentumMap)->Arg(10)->Arg(20);

static void BM_BruteForce(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  SearchOptions options;
  options.max_listed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force(steps, named_coin(NamedCoin::H), named_coin(NamedCoin::I), options));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << steps));
}
BENCHMARK(BM_BruteForce)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
