#include <benchmark/benchmark.h>

#include "borel/driver.hpp"

namespace {

std::vector<borel::MonomialIdeal> corpus(std::size_t n, borel::Exponent deg) {
  borel::FuzzRng rng(n * 100 + deg);
  std::vector<borel::MonomialIdeal> out;
  for (int k = 0; k < 16; ++k) out.push_back(borel::random_borel_fixed_ideal(rng, n, deg));
  return out;
}

void BM_Regularity(benchmark::State& state) {
  auto ideals = corpus(static_cast<std::size_t>(state.range(0)), 4);
  std::size_t k = 0;
  for (auto _ : state) {
    auto r = borel::regularity_borel(borel::Subquotient::cyclic(ideals[k++ % ideals.size()]));
    benchmark::DoNotOptimize(r.reg);
  }
}
BENCHMARK(BM_Regularity)->DenseRange(2, 5);

void BM_BettiTable(benchmark::State& state) {
  auto ideals = corpus(static_cast<std::size_t>(state.range(0)), 4);
  std::size_t k = 0;
  for (auto _ : state) {
    auto t = borel::betti_table(ideals[k++ % ideals.size()]);
    benchmark::DoNotOptimize(t.entries.size());
  }
}
BENCHMARK(BM_BettiTable)->DenseRange(2, 4);

void BM_IrreducibleDecomposition(benchmark::State& state) {
  auto ideals = corpus(static_cast<std::size_t>(state.range(0)), 4);
  std::size_t k = 0;
  for (auto _ : state) {
    auto d = borel::irreducible_decomposition(ideals[k++ % ideals.size()]);
    benchmark::DoNotOptimize(d.size());
  }
}
BENCHMARK(BM_IrreducibleDecomposition)->DenseRange(2, 5);

void BM_PrettyClean(benchmark::State& state) {
  auto ideals = corpus(static_cast<std::size_t>(state.range(0)), 4);
  std::size_t k = 0;
  for (auto _ : state) {
    auto f = borel::build_pretty_clean(borel::Subquotient::cyclic(ideals[k++ % ideals.size()]));
    benchmark::DoNotOptimize(f.steps.size());
  }
}
BENCHMARK(BM_PrettyClean)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
