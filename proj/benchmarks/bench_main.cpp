#include <benchmark/benchmark.h>

#include "grothsp/antisymmetric.hpp"
#include "grothsp/grothendieck.hpp"
#include "grothsp/opnorms.hpp"
#include "grothsp/random.hpp"
#include "grothsp/symplectic.hpp"
#include "grothsp/tame.hpp"

namespace {

using grothsp::Matrix;

Matrix gaussian(Eigen::Index rows, Eigen::Index cols, std::uint64_t stream) {
  auto engine = grothsp::stream_engine(2024, stream);
  return grothsp::gaussian_matrix(rows, cols, engine);
}

void BM_InftyOneExact(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const Matrix a = gaussian(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(grothsp::infty_one_exact(a).value);
}
BENCHMARK(BM_InftyOneExact)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_InftyOneBounds(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const Matrix a = gaussian(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(grothsp::infty_one_bounds(a, 0, 50, 7).lower);
}
BENCHMARK(BM_InftyOneBounds)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ScalingSearch(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const Matrix a = gaussian(n, n, 3);
  grothsp::ScalingSearchOptions options;
  options.infty_one = grothsp::infty_one_exact(a).value;
  for (auto _ : state) benchmark::DoNotOptimize(grothsp::scaling_search(a, options).scaled_norm);
}
BENCHMARK(BM_ScalingSearch)->Arg(6)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_AntisymCanonical(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const Matrix g = gaussian(n, n, 4);
  const Matrix b = g - g.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(grothsp::antisym_canonical(b).mus.size());
}
BENCHMARK(BM_AntisymCanonical)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMicrosecond);

void BM_Tame(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto family = grothsp::make_family(gaussian(static_cast<Eigen::Index>(2 * n), 10, 5));
  for (auto _ : state) benchmark::DoNotOptimize(grothsp::tame(family).achieved_sum);
}
BENCHMARK(BM_Tame)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
