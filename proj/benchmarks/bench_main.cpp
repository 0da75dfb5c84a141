#include <benchmark/benchmark.h>

#include "branchworlds/axioms.hpp"
#include "branchworlds/fine_graining.hpp"
#include "branchworlds/game.hpp"
#include "branchworlds/sequential.hpp"
#include "branchworlds/world_tree.hpp"

namespace bw = branchworlds;

static void BM_ValuePBorn(benchmark::State& state) {
  const bw::GameSampler sampler;
  std::vector<bw::Game> games;
  for (std::uint64_t i = 0; i < 256; ++i) games.push_back(sampler.draw(bw::Exponent::finite(2), 1, i));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bw::value_p_born(games[k++ & 255]));
}
BENCHMARK(BM_ValuePBorn);

static void BM_Symmetrize(benchmark::State& state) {
  bw::GameSampler sampler;
  sampler.max_denominator = state.range(0);
  std::vector<bw::Game> games;
  for (std::uint64_t i = 0; i < 64; ++i) games.push_back(sampler.draw(bw::Exponent::finite(2), 2, i));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bw::value_via_symmetrization(games[k++ & 63]));
}
BENCHMARK(BM_Symmetrize)->Arg(4)->Arg(8)->Arg(12);

static void BM_FrequencyDistribution(benchmark::State& state) {
  const bw::BranchSpec spec(bw::UniverseKind::pnorm(2), {bw::Rational(3), bw::Rational(7)},
                            static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bw::frequency_distribution(spec, 0, 0));
}
BENCHMARK(BM_FrequencyDistribution)->Arg(20)->Arg(60)->Arg(200);

static void BM_Enumerate(benchmark::State& state) {
  const bw::BranchSpec spec(bw::UniverseKind::pnorm(2), {bw::Rational(1), bw::Rational(2)},
                            static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bw::enumerate_sequences(spec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bw::sequence_count(spec)));
}
BENCHMARK(BM_Enumerate)->Arg(8)->Arg(12)->Arg(16);

static void BM_ReduceSequential(benchmark::State& state) {
  const bw::SequentialSampler sampler;
  std::vector<bw::SequentialGame> games;
  for (std::uint64_t i = 0; i < 64; ++i) games.push_back(sampler.draw(3, i));
  const auto universe = bw::UniverseKind::pnorm(2);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bw::reduce_sequential(games[k++ & 63], universe));
}
BENCHMARK(BM_ReduceSequential);
BENCHMARK_MAIN();
