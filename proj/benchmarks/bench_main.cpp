#include <benchmark/benchmark.h>

#include "ramiq/chevalley_weil.hpp"
#include "ramiq/corpus.hpp"

namespace {

using namespace ramiq;

void BM_CyclotomicMultiply(benchmark::State& state) {
  Cyclotomic a = Cyclotomic::root_of_unity(60, 7) + Cyclotomic(Rational(3, 5));
  Cyclotomic b = Cyclotomic::root_of_unity(60, 23) - Cyclotomic(2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply);

void BM_InnerProduct(benchmark::State& state) {
  auto g = FiniteGroup::cyclic(12);
  CharacterTable table = irreducible_characters(g);
  const ClassFunction& a = table.irreducibles()[3];
  const ClassFunction& b = table.irreducibles()[7];
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(a, b));
}
BENCHMARK(BM_InnerProduct);

void BM_ChiGKlein4(benchmark::State& state) {
  Scenario s = corpus_scenario("klein4_surface");
  for (auto _ : state) benchmark::DoNotOptimize(chi_g(s));
}
BENCHMARK(BM_ChiGKlein4);

}  // namespace

BENCHMARK_MAIN();
