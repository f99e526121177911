#include <benchmark/benchmark.h>

#include <random>

#include "eislat/arrangement.hpp"
#include "eislat/classify.hpp"
#include "eislat/f3_geom.hpp"
#include "eislat/gamma_group.hpp"
#include "eislat/linalg.hpp"

using namespace eislat;

static void BM_NearestQuotient(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  std::vector<std::pair<EisInt, EisInt>> pairs;
  for (int i = 0; i < 256; ++i) {
    EisInt den(d(rng), d(rng));
    if (den.is_zero()) den = EisInt(1L);
    pairs.emplace_back(EisInt(d(rng), d(rng)), den);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [n, m] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(nearest_quotient(n, m));
  }
}
BENCHMARK(BM_NearestQuotient);

static void BM_Hnf5x5(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-20, 20);
  EMat m(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = EisInt(d(rng), d(rng));
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf5x5);

// Null vectors W(ρ) for random words of the given maximal length.
static void BM_ReduceNull(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::vector<EVec> inputs;
  for (int i = 0; i < 64; ++i)
    inputs.push_back(gamma::random_word(rng, static_cast<std::size_t>(state.range(0))).apply(rho()));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gamma::reduce_null(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_ReduceNull)->Arg(10)->Arg(30)->Arg(60);

static void BM_EnumerateD4Theta(benchmark::State& state) {
  const Sublattice d4 = classify::d4_theta();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_norm(d4, Int(state.range(0))));
}
BENCHMARK(BM_EnumerateD4Theta)->Arg(2)->Arg(3)->Arg(6);

static void BM_ArrangementScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(arrangement::scan(state.range(0)));
}
BENCHMARK(BM_ArrangementScan)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ReducedGeneratorClosure(benchmark::State& state) {
  std::vector<f3::Mat> gens;
  for (int i = 1; i <= gamma::kReflections; ++i) gens.push_back(f3::reduce(gamma::generator(i)));
  for (auto _ : state) benchmark::DoNotOptimize(f3::bfs_closure(gens).order());
}
BENCHMARK(BM_ReducedGeneratorClosure)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
