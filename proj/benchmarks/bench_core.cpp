#include "jetinv/embedding.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/linalg.hpp"
#include "jetinv/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace jetinv;

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  jetinv::Sampler rng(1);
  const ExactMatrix m = rng.rational_matrix(n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

static void BM_InvariantBasis(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_basis(3, 2, m).dim());
  state.counters["monomials"] = static_cast<double>(monomial_count(3, 2, m).get_ui());
}
BENCHMARK(BM_InvariantBasis)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_Plucker(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  jetinv::Sampler rng(2);
  const Jet j = random_regular_jet(rng, 3, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(plucker(phi(j)).coords.size());
}
BENCHMARK(BM_Plucker)->DenseRange(2, 5);

BENCHMARK_MAIN();
