#include <benchmark/benchmark.h>

#include "chebnet/baseline.hpp"
#include "chebnet/evolve.hpp"
#include "chebnet/net.hpp"
#include "chebnet/rng.hpp"

using namespace chebnet;

namespace {

Genome straight_orthogonal() {
  return straight_genome({0, 0}, 0, kPi / 2, {11, 11, 11, 11});
}

void BM_PolylineCurvature(benchmark::State& state) {
  const Vec3 a{5, 0, 0}, b{0, 5, 0}, c{-5, 0, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(polyline_curvature(a, b, c));
}
BENCHMARK(BM_PolylineCurvature);

void BM_CircleSurfaceRoots_Sphere(benchmark::State& state) {
  const SurfaceSpec hemi = SurfaceSpec::catalog("hemisphere");
  const Circle3 c = vertical_step_circle({1, 2, 9.7}, 2, Heading::of(0.3));
  for (auto _ : state) benchmark::DoNotOptimize(circle_surface_roots(hemi, c));
}
BENCHMARK(BM_CircleSurfaceRoots_Sphere);

void BM_CompassStep_Sphere(benchmark::State& state) {
  const SurfaceSpec hemi = SurfaceSpec::catalog("hemisphere");
  const Vec3 pole{0, 0, 10};
  const Vec3 left = guideline_step(hemi, pole, Heading::of(0), 2).point;
  const Vec3 up = guideline_step(hemi, pole, Heading::of(kPi / 2), 2).point;
  for (auto _ : state) benchmark::DoNotOptimize(compass_step(hemi, left, up, pole, 2));
}
BENCHMARK(BM_CompassStep_Sphere);

void BM_MapSurface_Hemisphere(benchmark::State& state) {
  const SurfaceSpec hemi = SurfaceSpec::catalog("hemisphere");
  const Genome g = straight_orthogonal();
  for (auto _ : state) benchmark::DoNotOptimize(map_surface(hemi, g, 2));
}
BENCHMARK(BM_MapSurface_Hemisphere);

void BM_FitnessEval_Hemisphere(benchmark::State& state) {
  const SurfaceSpec hemi = SurfaceSpec::catalog("hemisphere");
  GAConfig config;
  const Genome g = straight_orthogonal();
  hemi.projected_extent_area(1.0);  // warm the extent cache out of the loop
  for (auto _ : state) benchmark::DoNotOptimize(fitness_eval(hemi, g, 2, config));
}
BENCHMARK(BM_FitnessEval_Hemisphere);

void BM_FitnessEval_Expression(benchmark::State& state) {
  const SurfaceSpec hypar = SurfaceSpec::from_expression(Expr::parse("z - (x^2 - y^2)"),
                                                         Box3{-1, 1, -1, 1, -2, 2});
  GAConfig config;
  const Genome g = straight_genome({0, 0}, kPi / 4, 3 * kPi / 4, {11, 11, 11, 11});
  hypar.projected_extent_area(0.15);
  for (auto _ : state) benchmark::DoNotOptimize(fitness_eval(hypar, g, 0.3, config));
}
BENCHMARK(BM_FitnessEval_Expression);

}  // namespace

BENCHMARK_MAIN();
