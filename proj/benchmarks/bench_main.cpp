#include <benchmark/benchmark.h>

#include "cxosc/apply.hpp"
#include "cxosc/gaussint.hpp"
#include "cxosc/verifier.hpp"

namespace {

using namespace cxosc;

Params<Exact> exact_params() { return Params<Exact>::from_roots(Exact(1), Exact::ratio(1, 2)); }

void BM_ComposeOperators(benchmark::State& state) {
  const auto p = exact_params();
  const DiffOp<Exact> d11 = make_operator(p, Generator::D_plus_11);
  const DiffOp<Exact> d22 = make_operator(p, Generator::D_minus_22);
  for (auto _ : state) benchmark::DoNotOptimize(d11 * d22);
}
BENCHMARK(BM_ComposeOperators);

void BM_BuildCatalog(benchmark::State& state) {
  const auto p = exact_params();
  for (auto _ : state) benchmark::DoNotOptimize(OperatorCatalog<Exact>(p));
}
BENCHMARK(BM_BuildCatalog);

template <Scalar F>
void BM_ApplyHamiltonian(benchmark::State& state) {
  const auto p = Params<F>::from_roots(from_integer<F>(1), from_ratio<F>(1, 2));
  const int n = static_cast<int>(state.range(0));
  const DiffOp<F> h = make_operator(p, Generator::H);
  const ReducedFn<F> psi = build_psi(p, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(apply(p, h, psi));
}
BENCHMARK_TEMPLATE(BM_ApplyHamiltonian, Exact)->Arg(4)->Arg(10)->Arg(20);
BENCHMARK_TEMPLATE(BM_ApplyHamiltonian, Float)->Arg(4)->Arg(10)->Arg(20);

void BM_MomentTable(benchmark::State& state) {
  const auto p = exact_params();
  const int deg = static_cast<int>(state.range(0));
  for (auto _ : state) {
    MomentTable<Exact> table(p);
    for (int i = 0; i <= deg; ++i) {
      for (int j = 0; j <= deg; ++j) benchmark::DoNotOptimize(table.multiplier(i, j));
    }
  }
}
BENCHMARK(BM_MomentTable)->Arg(12)->Arg(24);

void BM_GramBlock(benchmark::State& state) {
  const auto p = exact_params();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gram_block(p, n));
}
BENCHMARK(BM_GramBlock)->Arg(4)->Arg(8);

template <Scalar F>
void BM_Suite(benchmark::State& state) {
  const auto p = Params<F>::from_roots(from_integer<F>(1), from_ratio<F>(1, 2));
  const auto suite = static_cast<Suite>(state.range(0));
  const auto relations = load_catalog(CXOSC_BENCH_DATA_DIR "/relations.rel");
  for (auto _ : state) benchmark::DoNotOptimize(run_suites(p, relations, {suite}));
  state.SetLabel(std::string(to_string(suite)));
}
BENCHMARK_TEMPLATE(BM_Suite, Exact)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Suite, Float)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
