#include <klmedian/frechet.hpp>
#include <klmedian/oracle.hpp>
#include <klmedian/rng.hpp>
#include <klmedian/simplify.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace klmedian;

PolygonalCurve random_curve(RngStream& rng, std::size_t m, std::size_t d) {
  std::vector<Point> verts(m);
  for (auto& v : verts) {
    v.coords.resize(d);
    for (auto& x : v.coords) x = rng.uniform_real(0.0, 1.0);
  }
  return PolygonalCurve(std::move(verts));
}

void BM_FrechetDecide(benchmark::State& state) {
  RngStream rng(1);
  const auto a = random_curve(rng, static_cast<std::size_t>(state.range(0)), 2);
  const auto b = random_curve(rng, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(decide_frechet(a, b, 0.5));
}
BENCHMARK(BM_FrechetDecide)->Arg(10)->Arg(50)->Arg(200);

void BM_FrechetDistance(benchmark::State& state) {
  RngStream rng(2);
  const auto a = random_curve(rng, static_cast<std::size_t>(state.range(0)), 2);
  const auto b = random_curve(rng, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(frechet_distance(a, b));
}
BENCHMARK(BM_FrechetDistance)->Arg(10)->Arg(50)->Arg(200);

void BM_DiscreteFrechet(benchmark::State& state) {
  RngStream rng(3);
  const auto a = random_curve(rng, static_cast<std::size_t>(state.range(0)), 2);
  const auto b = random_curve(rng, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(discrete_frechet(a, b));
}
BENCHMARK(BM_DiscreteFrechet)->Arg(10)->Arg(100)->Arg(500);

void BM_Simplify(benchmark::State& state) {
  RngStream rng(4);
  const auto t = random_curve(rng, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(simplify(t, 4));
}
BENCHMARK(BM_Simplify)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
