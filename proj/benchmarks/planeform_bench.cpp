#include <benchmark/benchmark.h>

#include <random>

#include "planeform/algorithm.hpp"
#include "planeform/oracle.hpp"
#include "planeform/polyhedra.hpp"
#include "planeform/simulator.hpp"
#include "planeform/symmetricity.hpp"

using namespace planeform;

namespace {

const Solid kSolids[] = {Solid::Tetrahedron, Solid::Octahedron, Solid::Cube,
                         Solid::Dodecahedron, Solid::Icosahedron, Solid::Icosidodecahedron};

std::vector<Vec3> shifted(std::vector<Vec3> pts, std::size_t self) {
  const Vec3 o = pts[self];
  for (auto& p : pts) p -= o;
  return pts;
}

void BM_Seb(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Configuration cfg(random_points(static_cast<int>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(seb(cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Seb)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_DetectSolid(benchmark::State& state) {
  const Solid s = kSolids[state.range(0)];
  const Configuration cfg(solid(s));
  state.SetLabel(to_string(s));
  for (auto _ : state) benchmark::DoNotOptimize(detect_symmetries(cfg));
}
BENCHMARK(BM_DetectSolid)->DenseRange(0, 5);

void BM_DetectRandom(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Configuration cfg(random_points(static_cast<int>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(detect_symmetries(cfg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DetectRandom)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_DetectSymmetricOh(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Configuration cfg(random_symmetric(simple(Family::Oh), static_cast<int>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(detect_symmetries(cfg));
  state.SetComplexityN(static_cast<std::int64_t>(cfg.size()));
}
BENCHMARK(BM_DetectSymmetricOh)->DenseRange(1, 5, 2)->Complexity();

void BM_Symmetricity(benchmark::State& state) {
  const Solid s = kSolids[state.range(0)];
  const Configuration cfg(solid(s));
  const PointGroup theta = detect_symmetries(cfg);
  state.SetLabel(to_string(s));
  for (auto _ : state) benchmark::DoNotOptimize(symmetricity(cfg, theta));
}
BENCHMARK(BM_Symmetricity)->DenseRange(0, 5);

void BM_StepSolid(benchmark::State& state) {
  const Solid s = kSolids[state.range(0)];
  const auto snapshot = shifted(solid(s), 0);
  state.SetLabel(to_string(s));
  for (auto _ : state) benchmark::DoNotOptimize(step(snapshot));
}
BENCHMARK(BM_StepSolid)->Arg(0)->Arg(1)->Arg(3)->Arg(5);

void BM_StepRandom(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto snapshot = shifted(random_points(static_cast<int>(state.range(0)), rng), 0);
  for (auto _ : state) benchmark::DoNotOptimize(step(snapshot));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StepRandom)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_RunSolid(benchmark::State& state) {
  const Solid s = kSolids[state.range(0)];
  const Configuration cfg(solid(s));
  RunOptions opts;
  opts.record_groups = false;
  state.SetLabel(to_string(s));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg, random_frames(cfg, seed++), opts));
}
BENCHMARK(BM_RunSolid)->Arg(0)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RunRandom(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const Configuration cfg(random_points(static_cast<int>(state.range(0)), rng));
  RunOptions opts;
  opts.record_groups = false;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg, random_frames(cfg, seed++), opts));
}
BENCHMARK(BM_RunRandom)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_OracleCompare(benchmark::State& state) {
  const Solid s = kSolids[state.range(0)];
  const auto pts = solid(s);
  state.SetLabel(to_string(s));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::compare(pts));
}
BENCHMARK(BM_OracleCompare)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
