#include <benchmark/benchmark.h>

#include <string>

#include "keypoly/basis.hpp"
#include "keypoly/crystal.hpp"
#include "keypoly/expansion.hpp"
#include "keypoly/fillings.hpp"
#include "keypoly/generators.hpp"
#include "keypoly/module.hpp"
#include "keypoly/operators.hpp"
#include "keypoly/pipe_dream.hpp"

using namespace keypoly;

namespace {

// Index families that grow with the benchmark argument: (0, 1, ..., k) style
// weak compositions give keys with many terms.
WeakComposition staircase(int k) {
  std::vector<int> a;
  for (int i = 0; i < k; ++i) a.push_back(i);
  return WeakComposition(a);
}

void BM_KeyFillings(benchmark::State& state) {
  auto a = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(generating_polynomial(Family::KSSF, a.parts(), a.length()));
}
BENCHMARK(BM_KeyFillings)->DenseRange(3, 5);

void BM_KeyOperators(benchmark::State& state) {
  auto a = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(key_ops(a));
}
BENCHMARK(BM_KeyOperators)->DenseRange(3, 5);

void BM_KeyCompatible(benchmark::State& state) {
  auto a = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(key_via_compatible(a));
}
BENCHMARK(BM_KeyCompatible)->DenseRange(3, 5);

void BM_KeyRightKeys(benchmark::State& state) {
  auto a = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(key_via_right_keys(a));
}
BENCHMARK(BM_KeyRightKeys)->DenseRange(3, 4);

void BM_KeyRowFrank(benchmark::State& state) {
  auto a = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(key_via_row_frank(a));
}
BENCHMARK(BM_KeyRowFrank)->DenseRange(3, 4);

void BM_KeyCrystal(benchmark::State& state) {
  auto a = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(key_crystal(a).character());
}
BENCHMARK(BM_KeyCrystal)->DenseRange(3, 5);

void BM_PipeDreamsReversedTail(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  // 1 n n-1 ... 2 has a large pipe dream count.
  std::string one_line = "1";
  for (int i = n; i >= 2; --i) one_line += std::to_string(i);
  Permutation w = Permutation::parse(one_line);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pd(w));
}
BENCHMARK(BM_PipeDreamsReversedTail)->DenseRange(4, 6);

void BM_ExpandKeyToAtoms(benchmark::State& state) {
  auto a = staircase(static_cast<int>(state.range(0)));
  Polynomial p = key_ops(a);
  for (auto _ : state) benchmark::DoNotOptimize(expand(p, BasisId::Atom, a.length()));
}
BENCHMARK(BM_ExpandKeyToAtoms)->DenseRange(3, 4);

void BM_YoungKeyModuleRank(benchmark::State& state) {
  WeakComposition a({2, static_cast<int>(state.range(0)), 0});
  for (auto _ : state) benchmark::DoNotOptimize(module_rank(ykeymodule_basis(a)));
}
BENCHMARK(BM_YoungKeyModuleRank)->DenseRange(1, 3);

}  // namespace
BENCHMARK_MAIN();
