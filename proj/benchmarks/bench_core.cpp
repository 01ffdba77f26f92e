#include <benchmark/benchmark.h>

#include <algorithm>

#include "mthv/analysis.hpp"
#include "mthv/pbw.hpp"
#include "mthv/rho.hpp"
#include "mthv/tensor_shift.hpp"

using namespace mthv;

namespace {

Params sample_params() {
  Params p;
  p.c = 2;
  p.h = Scalar(5, 16);
  p.l = 1;
  p.alpha = Scalar(1, 4);
  p.beta = Scalar(1, 4);
  p.gamma = 2;
  return p;
}

// Reversed PBW order forces the most reordering work.
std::vector<Generator> reversed_word(int length) {
  std::vector<Generator> w;
  for (int i = 0; i < length; ++i)
    w.push_back(i % 2 ? Generator::h(HalfInt::from_twice(-(2 * (i % 3) + 1))) : Generator::d(i % 4 - 1));
  std::sort(w.begin(), w.end(), [](const Generator& a, const Generator& b) { return pbw_less(b, a); });
  return w;
}

void BM_StraightenCold(benchmark::State& state) {
  const auto word = reversed_word(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    clear_straighten_cache();
    benchmark::DoNotOptimize(straighten(word));
  }
}
BENCHMARK(BM_StraightenCold)->DenseRange(4, 10, 2);

void BM_StraightenWarm(benchmark::State& state) {
  const auto word = reversed_word(static_cast<int>(state.range(0)));
  straighten(word);
  for (auto _ : state) benchmark::DoNotOptimize(straighten(word));
}
BENCHMARK(BM_StraightenWarm)->DenseRange(4, 10, 2);

void BM_SingularVectors(benchmark::State& state) {
  const Params p = sample_params();
  const HalfInt level = HalfInt::from_twice(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(singular_vectors(p, level));
  state.counters["basis"] = static_cast<double>(enumerate_negative_basis(level).size());
}
BENCHMARK(BM_SingularVectors)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MaximalSubmodule(benchmark::State& state) {
  const Params p = sample_params();
  SearchOptions opt;
  opt.level_bound = HalfInt::from_twice(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_submodule_generators(p, opt));
}
BENCHMARK(BM_MaximalSubmodule)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_WMembership(benchmark::State& state) {
  const Params p = sample_params();
  const HalfInt n = HalfInt(), k = HalfInt::halves(1);
  const UEAElement P(Monomial({Generator::d(-2)}), 1);
  const ShiftedVector v(p, n, P - UEAElement(rho_eval(P, n, p)));
  const HalfInt cap = HalfInt::from_twice(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(w_membership(v, k, cap, cap));
}
BENCHMARK(BM_WMembership)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_LambdaSet(benchmark::State& state) {
  const Params p = sample_params();
  const auto qs = maximal_submodule_generators(p).generators;
  for (auto _ : state) benchmark::DoNotOptimize(lambda_set(qs, p));
}
BENCHMARK(BM_LambdaSet);

}  // namespace

BENCHMARK_MAIN();
