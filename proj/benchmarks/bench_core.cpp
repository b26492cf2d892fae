#include <benchmark/benchmark.h>

#include <random>

#include "fhollow/canonical_rays.hpp"
#include "fhollow/classify.hpp"
#include "fhollow/fine_interior.hpp"
#include "fhollow/lattice_width.hpp"
#include "fhollow/named.hpp"
#include "fhollow/normal_form.hpp"

using namespace fhollow;

namespace {

const Polytope& sporadic_root() {
  static const Polytope p = named::axis_simplex({2, 3, 6});
  return p;
}

void BM_ConvexHull(benchmark::State& state) {
  auto pts = lattice_points(named::prism_2delta2_0_4());
  for (auto _ : state) benchmark::DoNotOptimize(Polytope::convex_hull(pts));
}
BENCHMARK(BM_ConvexHull);

void BM_CanonicalRays(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(canonical_rays(sporadic_root()));
}
BENCHMARK(BM_CanonicalRays);

void BM_FineInterior(benchmark::State& state) {
  Polytope p = dilate(sporadic_root(), Rational(2));
  for (auto _ : state) benchmark::DoNotOptimize(fine_interior(p));
}
BENCHMARK(BM_FineInterior);

void BM_FineInteriorBruteforce(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fine_interior_bruteforce(sporadic_root(), bound));
}
BENCHMARK(BM_FineInteriorBruteforce)->Arg(3)->Arg(6);

void BM_MultiplierProfile(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(multiplier_profile(sporadic_root()));
}
BENCHMARK(BM_MultiplierProfile);

void BM_MultiplierProfileFourSimplex(benchmark::State& state) {
  Polytope p = named::four_simplex_example();
  for (auto _ : state) benchmark::DoNotOptimize(multiplier_profile(p));
}
BENCHMARK(BM_MultiplierProfileFourSimplex)->Unit(benchmark::kMillisecond);

void BM_LatticeWidth(benchmark::State& state) {
  Polytope p = named::prism_2delta2_0_4();
  for (auto _ : state) benchmark::DoNotOptimize(lattice_width(p));
}
BENCHMARK(BM_LatticeWidth);

void BM_NormalForm(benchmark::State& state) {
  Polytope p = named::prism_2delta2_0_4();
  for (auto _ : state) benchmark::DoNotOptimize(affine_normal_form(p));
}
BENCHMARK(BM_NormalForm);

void BM_SubpolytopeClasses(benchmark::State& state) {
  EnumerationOptions o;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subpolytope_classes(named::axis_simplex({3, 3, 3}), o));
}
BENCHMARK(BM_SubpolytopeClasses)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClassifyPolygons(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_polygons());
}
BENCHMARK(BM_ClassifyPolygons)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
