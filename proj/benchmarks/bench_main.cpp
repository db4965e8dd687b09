#include <benchmark/benchmark.h>

#include "lstrat/fibers.hpp"
#include "lstrat/games.hpp"
#include "lstrat/lattice.hpp"
#include "lstrat/strata.hpp"

using namespace lstrat;

namespace {

Polyhedron orthant(std::size_t d) {
  Polyhedron p(d);
  for (std::size_t i = 0; i < d; ++i) p.add(make_halfspace(unit(d, i), 0));
  return p;
}

void BM_HilbertBasis(benchmark::State& state) {
  const Int k = state.range(0);
  auto cone = cone_from_generators({{1, 0}, {1, k}}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(cone, Lattice::full(2)));
}
BENCHMARK(BM_HilbertBasis)->DenseRange(1, 9, 4);

void BM_Solve(benchmark::State& state) {
  auto g = make_game({{1, 0}, {0, 1}, {2, 1}}, {orthant(2), {{0, 0}}}, std::vector<IntVec>{{0, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(solve_p_positions(g, state.range(0)));
}
BENCHMARK(BM_Solve)->Arg(20)->Arg(40)->Arg(80);

void BM_Disjointify(benchmark::State& state) {
  std::vector<TranslatedSemigroup> parts{
      {{0, 0}, AffineSemigroup(2, {{2, 0}, {0, 3}})},
      {{1, 0}, AffineSemigroup(2, {{1, 1}, {0, 2}})},
      {{0, 1}, AffineSemigroup(2, {{3, 0}, {1, 2}})},
  };
  for (auto _ : state) benchmark::DoNotOptimize(disjointify(parts, 2));
}
BENCHMARK(BM_Disjointify);

void BM_Fiber(benchmark::State& state) {
  auto q = FiniteCommMonoid::product(FiniteCommMonoid::cyclic(3), FiniteCommMonoid::truncation(1));
  MonoidMorphism phi(q, std::vector<std::size_t>(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(fiber_stratify(phi, 3));
}
BENCHMARK(BM_Fiber)->DenseRange(1, 4);

}  // namespace
BENCHMARK_MAIN();
