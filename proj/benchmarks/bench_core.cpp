#include <benchmark/benchmark.h>

#include <random>

#include "cellua/builtins.hpp"
#include "cellua/repth.hpp"

using namespace cellua;

namespace {

ExactMatrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-9, 9);
  ExactMatrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = Scalar(f, dist(rng));
  return m;
}

void BM_rank_rational(benchmark::State& state) {
  const ExactMatrix m =
      random_matrix(Field::rationals(), state.range(0), 987654321);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank_rational)->Arg(10)->Arg(25)->Arg(40);

void BM_rank_fp(benchmark::State& state) {
  const ExactMatrix m = random_matrix(Field::fp(101), state.range(0), 987654321);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank_fp)->Arg(10)->Arg(25)->Arg(40);

void BM_verify_cellular_m4(benchmark::State& state) {
  const BuiltinAlgebra b =
      build_matrix_algebra(Field::rationals(), 4, std::nullopt);
  for (auto _ : state) benchmark::DoNotOptimize(b.alg.verify_cellular().ok());
}
BENCHMARK(BM_verify_cellular_m4);

void BM_path_decomposition(benchmark::State& state) {
  const BuiltinAlgebra b = build_path_example(Field::rationals());
  for (auto _ : state)
    benchmark::DoNotOptimize(decomposition_matrix(b.alg, Side::Right));
}
BENCHMARK(BM_path_decomposition);

void BM_path_workspace(benchmark::State& state) {
  const BuiltinAlgebra b = build_path_example(Field::rationals());
  for (auto _ : state) {
    AlphaWorkspace w = build_alpha_workspace(b.alg, *b.alpha);
    benchmark::DoNotOptimize(w.levi.sub.alg.dim);
  }
}
BENCHMARK(BM_path_workspace);

} // namespace

BENCHMARK_MAIN();
