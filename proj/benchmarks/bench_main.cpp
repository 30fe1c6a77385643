#include <benchmark/benchmark.h>

#include <random>

#include "skewbisub/desk_oracles.hpp"
#include "skewbisub/generator.hpp"
#include "skewbisub/lovasz.hpp"
#include "skewbisub/minimizer.hpp"

using namespace skewbisub;

namespace {

const Alpha kAlpha = Alpha::parse("1/2");

void BM_Decompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<FractionalPoint> points;
  for (int i = 0; i < 64; ++i) points.push_back(random_box_point(n, kAlpha, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decompose(points[i++ % points.size()]));
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(8)->Arg(32);

void BM_Linearize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = generate_instance(n, kAlpha, 2 * n, 2, 7);
  std::mt19937_64 rng(2);
  const auto x = random_box_point(n, kAlpha, rng);
  for (auto _ : state) benchmark::DoNotOptimize(linearize(f, x));
}
BENCHMARK(BM_Linearize)->Arg(4)->Arg(16);

void BM_ConvexClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = generate_instance(n, kAlpha, 2 * n, 2, 3);
  std::mt19937_64 rng(3);
  const auto x = random_box_point(n, kAlpha, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convex_closure(f, x));
}
BENCHMARK(BM_ConvexClosure)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Minimize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = generate_instance(n, kAlpha, 2 * n, 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(f));
}
BENCHMARK(BM_Minimize)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
