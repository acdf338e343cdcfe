// Serial reference kernels against the OpenMP ones, and the Ext table of a
// builtin corpus computed both ways.

#include <benchmark/benchmark.h>

#include "relhom/catalog.hpp"
#include "relhom/kernels.hpp"
#include "relhom/relative.hpp"
#include "relhom/sampling.hpp"

using namespace relhom;

namespace {

constexpr Scalar kP = 3;

Matrix random_square(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_matrix(rng, kP, n, n);
}

template <Matrix (*Mul)(const Matrix&, const Matrix&)>
void bm_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_square(n, 1);
  const Matrix b = random_square(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
  state.SetComplexityN(state.range(0));
}

template <std::vector<std::size_t> (*Rref)(Matrix&)>
void bm_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_square(n, 3);
  for (auto _ : state) {
    Matrix m = a;
    benchmark::DoNotOptimize(Rref(m));
  }
}

void bm_ext_tables(benchmark::State& state) {
  const auto alg = builtin_algebra("a3rad2");
  const auto pair = classical_pair(alg);
  std::vector<Module> corpus = uniserial_quotients(alg);
  Rng rng(5);
  for (int i = 0; i < 4; ++i) corpus.push_back(random_sum(rng, corpus, 2));
  const auto mode = state.range(0) == 0 ? Execution::serial : Execution::parallel;
  for (auto _ : state) benchmark::DoNotOptimize(ext_tables(pair, corpus, 4, 5, mode));
}

}  // namespace

BENCHMARK(bm_matmul<kernels::serial::matmul>)->Name("matmul/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_matmul<kernels::matmul>)->Name("matmul/openmp")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_rref<kernels::serial::rref_inplace>)->Name("rref/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_rref<kernels::rref_inplace>)->Name("rref/openmp")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_ext_tables)->Name("ext_tables/a3rad2")->Arg(0)->Arg(1)->ArgNames({"parallel"});

BENCHMARK_MAIN();
