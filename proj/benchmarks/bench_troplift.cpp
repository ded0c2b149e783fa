#include "troplift/fixtures.hpp"
#include "troplift/lifts.hpp"
#include "troplift/membership.hpp"
#include "troplift/newton.hpp"
#include "troplift/oracle.hpp"
#include "troplift/trees.hpp"
#include "troplift/tropical.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace troplift;

static void BM_TropDetHungarian(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const TropMatrix a = random_int_matrix(rng, n, n, -50, 50);
  for (auto _ : state) benchmark::DoNotOptimize(trop_det_hungarian(a));
}
BENCHMARK(BM_TropDetHungarian)->Arg(4)->Arg(16)->Arg(64);

static void BM_TropDetEnumerate(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const TropMatrix a = random_int_matrix(rng, n, n, 0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(trop_det(a).argmin.size());
}
BENCHMARK(BM_TropDetEnumerate)->DenseRange(3, 7);

static void BM_SymTropRank(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const TropMatrix a = random_symmetric_int_matrix(rng, n, 0, 4);
  for (auto _ : state) benchmark::DoNotOptimize(sym_trop_rank(a));
}
BENCHMARK(BM_SymTropRank)->DenseRange(3, 6);

static void BM_TreeRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BicoloredTree t = random_bicolored_tree(4, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(tree_from_rank2(tree_to_matrix(t)).vertex_count());
}
BENCHMARK(BM_TreeRoundTrip)->Arg(4)->Arg(8)->Arg(16);

static void BM_PolytopeEdges(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(polytope_edges(n).size());
}
BENCHMARK(BM_PolytopeEdges)->DenseRange(3, 5);

static void BM_MemberSymCorank1(benchmark::State& state) {
  const TropMatrix m = four_cycle_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(member_sym_corank1(m, FieldMode::RPlus).verdict);
}
BENCHMARK(BM_MemberSymCorank1);

static void BM_LiftSymCorank1Real(benchmark::State& state) {
  const TropMatrix m = four_cycle_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(lift_sym_corank1(m, FieldMode::R).valid);
}
BENCHMARK(BM_LiftSymCorank1Real)->Unit(benchmark::kMillisecond);

static void BM_LiftCaterpillar(benchmark::State& state) {
  std::vector<long> d;
  for (long k = state.range(0) - 1; k >= 1; --k) d.push_back(k);
  const TropMatrix m = fixed_spine_matrix(d);
  for (auto _ : state) benchmark::DoNotOptimize(lift_sym_caterpillar(m).valid);
}
BENCHMARK(BM_LiftCaterpillar)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_DiscriminantIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_factorization_holds(n, 0, 1));
}
BENCHMARK(BM_DiscriminantIdentity)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
