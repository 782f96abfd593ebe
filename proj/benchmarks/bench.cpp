#include <benchmark/benchmark.h>

#include "ntlc/enumerate.hpp"
#include "ntlc/modules.hpp"

using namespace ntlc;

namespace {

const CoxeterData& data(int n) {
  static CoxeterData d2(2), d3(3), d4(4);
  return n == 2 ? d2 : (n == 3 ? d3 : d4);
}

void BM_normal_form(benchmark::State& state) {
  const CoxeterData& d = data(2);
  Word w = {2, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(cf_normal_form(d, w));
}
BENCHMARK(BM_normal_form);

void BM_minuscule_test(benchmark::State& state) {
  const CoxeterData& d = data(static_cast<int>(state.range(0)));
  Word w = coxeter_word(d, Weight(static_cast<std::size_t>(d.rank()), '+'));
  Word ww = w;
  ww.insert(ww.end(), w.begin(), w.end());
  for (auto _ : state) benchmark::DoNotOptimize(is_minuscule(d, ww));
}
BENCHMARK(BM_minuscule_test)->Arg(2)->Arg(4);

void BM_multiply(benchmark::State& state) {
  const CoxeterData& d = data(2);
  TElement q = q_element(d);
  for (auto _ : state) benchmark::DoNotOptimize(mul(d, q, q));
}
BENCHMARK(BM_multiply);

void BM_matrix(benchmark::State& state) {
  const CoxeterData& d = data(static_cast<int>(state.range(0)));
  TElement q = q_element(d);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_of(d, q));
}
BENCHMARK(BM_matrix)->Arg(2)->Arg(3);

void BM_embed(benchmark::State& state) {
  const CoxeterData& d = data(2);
  Word w = cf_normal_form(d, {2, 1, 0, 2, 1, 0, 2, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(rank_and_embed(d, w));
}
BENCHMARK(BM_embed);

void BM_enumerate(benchmark::State& state) {
  const CoxeterData& d = data(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_minuscule(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_enumerate)->Arg(8)->Arg(12);

void BM_build_zero_chain(benchmark::State& state) {
  const CoxeterData& d = data(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(construct_C(d, "-+-", "-+-", 3));
}
BENCHMARK(BM_build_zero_chain);

void BM_module_build(benchmark::State& state) {
  const CoxeterData& d = data(2);
  for (auto _ : state) benchmark::DoNotOptimize(build_module(d, Rational(2), 3));
}
BENCHMARK(BM_module_build);

} // namespace

BENCHMARK_MAIN();
