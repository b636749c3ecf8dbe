#include <random>

#include <benchmark/benchmark.h>

#include "z4k/clifford.h"
#include "z4k/decoder.h"
#include "z4k/matching.h"
#include "z4k/noise.h"

namespace {

void BM_MwpmComplete(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  z4k::WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set_weight(i, j, static_cast<int64_t>(rng() % 1000));
  for (auto _ : state) benchmark::DoNotOptimize(z4k::mwpm(g).total_weight);
}
BENCHMARK(BM_MwpmComplete)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Decode(benchmark::State &state) {
  const int L = static_cast<int>(state.range(0));
  const double p = state.range(1) / 100.0;
  const z4k::KagomeCode code = z4k::KagomeCode::build(L);
  const z4k::Decoder decoder(code);
  z4k::Rng rng(3);
  std::vector<z4k::SyndromeConfig> syndromes;
  for (int k = 0; k < 32; ++k) syndromes.push_back(z4k::extract_syndrome(code, z4k::apply_depolarizing(code, p, rng).word));
  size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decoder.decode(syndromes[k++ % syndromes.size()]).moves);
}
BENCHMARK(BM_Decode)->Args({8, 5})->Args({16, 5})->Args({16, 12})->Unit(benchmark::kMicrosecond);

void BM_MetropolisStep(benchmark::State &state) {
  const z4k::KagomeCode code = z4k::KagomeCode::build(16);
  z4k::MetropolisChain chain(code, z4k::ThermalParams::from_lambda(3));
  z4k::Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(chain.step(rng).accepted);
}
BENCHMARK(BM_MetropolisStep);

void BM_Synthesize(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<z4k::CliffordTableau> targets;
  for (int k = 0; k < 16; ++k) targets.push_back(z4k::random_tableau(n, 10 * n + 10, rng));
  size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(z4k::synthesize(targets[k++ % targets.size()]).size());
}
BENCHMARK(BM_Synthesize)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
