#include <benchmark/benchmark.h>

#include <random>

#include "vsasm/alpha.hpp"
#include "vsasm/mt.hpp"
#include "vsasm/opwords.hpp"
#include "vsasm/random.hpp"
#include "vsasm/symmetrize.hpp"

namespace {

using namespace vsasm;

void BM_PolynomialMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int terms = static_cast<int>(state.range(0));
  Polynomial a = random_polynomial(rng, 4, terms, -3, 3);
  Polynomial b = random_polynomial(rng, 4, terms, -3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMultiply)->Arg(16)->Arg(64)->Arg(256);

void BM_RationalBigSum(benchmark::State& state) {
  for (auto _ : state) {
    Rational s;
    for (int k = 1; k <= 200; ++k) s += Rational(1, k);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_RationalBigSum);

void BM_BuildR(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const int t = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_R(s, t, 1));
}
BENCHMARK(BM_BuildR)->Args({2, 3})->Args({3, 3})->Args({0, 6})->Unit(benchmark::kMillisecond);

void BM_AsymByPermutations(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Polynomial p = random_polynomial(rng, static_cast<int>(state.range(0)), 8, 0, 6);
  for (auto _ : state) benchmark::DoNotOptimize(asym_by_permutations(p, 1));
}
BENCHMARK(BM_AsymByPermutations)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GammaExpand(benchmark::State& state) {
  Polynomial r = build_R(0, 6, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_expand(r));
}
BENCHMARK(BM_GammaExpand)->Unit(benchmark::kMillisecond);

void BM_CountMT(benchmark::State& state) {
  std::vector<int> bottom;
  for (int i = 1; i <= state.range(0); ++i) bottom.push_back(2 * i);
  for (auto _ : state) benchmark::DoNotOptimize(count_mt(bottom));
}
BENCHMARK(BM_CountMT)->Arg(5)->Arg(6)->Arg(7);

void BM_AlphaEval(benchmark::State& state) {
  const std::vector<long long> k{0, 2, 5, 7, 11, 13};
  alpha_polynomial(6);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_eval(6, k));
}
BENCHMARK(BM_AlphaEval);

void BM_SymOfWord(benchmark::State& state) {
  const OperatorWord w = parse_word("PT,PS,QT,PT,QS,QT");
  for (auto _ : state) benchmark::DoNotOptimize(sym_of_word(w, 1));
}
BENCHMARK(BM_SymOfWord)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
