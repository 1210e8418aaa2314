#include <benchmark/benchmark.h>

#include "qschubert/canon.hpp"

using namespace qschubert;

namespace {

Weight weight_arg(const benchmark::State& state, int rank) {
  Weight g(rank);
  for (int i = 0; i < rank; ++i) g[i] = static_cast<int>(state.range(i));
  return g;
}

void BM_LaurentProduct(benchmark::State& state) {
  Laurent x, y;
  for (int k = -8; k <= 8; ++k) {
    x += Laurent::monomial(k, k + 9);
    y += Laurent::monomial(2 * k, 3 - k);
  }
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_LaurentProduct);

void BM_BraidT(benchmark::State& state) {
  Algebra alg(RootDatum::preset("A3"));
  Element e2 = Element::generator(&alg, 1);
  for (auto _ : state) benchmark::DoNotOptimize(T_word({1, 0, 2}, e2));
}
BENCHMARK(BM_BraidT);

// Solve one slice of the longest-word frame of A3 from scratch.
void BM_SolveA3(benchmark::State& state) {
  Algebra alg(RootDatum::preset("A3"));
  const Weight deg = weight_arg(state, 3);
  for (auto _ : state) {
    PBWFrame f(alg, make_reduced_word(alg.datum(), longest_word(alg.datum())));
    benchmark::DoNotOptimize(lusztig_solve(f, deg));
  }
}
BENCHMARK(BM_SolveA3)->Args({1, 1, 1})->Args({1, 2, 1})->Args({2, 2, 2})->Unit(benchmark::kMillisecond);

void BM_SolveC2(benchmark::State& state) {
  Algebra alg(RootDatum::preset("C2"));
  const Weight deg = weight_arg(state, 2);
  for (auto _ : state) {
    PBWFrame f(alg, make_reduced_word(alg.datum(), longest_word(alg.datum())));
    benchmark::DoNotOptimize(lusztig_solve(f, deg));
  }
}
BENCHMARK(BM_SolveC2)->Args({2, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_BarMatrixDefects(benchmark::State& state) {
  Algebra alg(RootDatum::preset("A3"));
  PBWFrame f(alg, make_reduced_word(alg.datum(), longest_word(alg.datum())));
  const Weight deg{2, 2, 2};
  f.bar_matrix(deg);
  for (auto _ : state) benchmark::DoNotOptimize(bar_matrix_defects(f, deg));
}
BENCHMARK(BM_BarMatrixDefects)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  Algebra alg(RootDatum::preset("B2"));
  PBWFrame f(alg, make_reduced_word(alg.datum(), longest_word(alg.datum())));
  auto set = lusztig_solve(f, {2, 2});
  for (auto _ : state)
    for (const auto& b : set) benchmark::DoNotOptimize(verify_upper_global(b.element, &f));
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
