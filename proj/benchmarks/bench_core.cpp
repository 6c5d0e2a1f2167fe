#include <benchmark/benchmark.h>

#include "topomani/dataset.hpp"
#include "topomani/graph.hpp"
#include "topomani/invariants.hpp"
#include "topomani/isomorphism.hpp"
#include "topomani/moves.hpp"
#include "topomani/random.hpp"
#include "topomani/represent.hpp"
#include "topomani/subdivision.hpp"
#include "topomani/surgery.hpp"

using namespace topomani;

namespace {

// A surface near the 2D vertex cap.
SimplicialComplex capped_surface(bool orientable, int count, std::uint64_t seed) {
  return random_pachner_walk(build_surface(orientable, count, seed), 200, 24, seed).complex;
}

SimplicialComplex relabel(const SimplicialComplex& c, std::uint64_t seed) {
  std::vector<Vertex> perm(c.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  Rng rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return c.relabeled(perm);
}

void BM_WalkStep2D(benchmark::State& state) {
  auto c = capped_surface(true, 2, 1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    c = random_pachner_walk(c, 1, 24, ++seed).complex;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_WalkStep2D);

void BM_WalkStep3D(benchmark::State& state) {
  auto c = random_pachner_walk(simplex_boundary(3), 200, 40, 1).complex;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    c = random_pachner_walk(c, 1, 40, ++seed).complex;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_WalkStep3D);

void BM_ManifoldCheck(benchmark::State& state) {
  const auto c = capped_surface(false, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_combinatorial_manifold(c));
}
BENCHMARK(BM_ManifoldCheck);

void BM_BettiGF2(benchmark::State& state) {
  const auto c = capped_surface(true, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(betti_gf2(c));
}
BENCHMARK(BM_BettiGF2);

void BM_WLHash(benchmark::State& state) {
  const auto g = incidence_graph(capped_surface(true, 1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(wl_hash(g));
}
BENCHMARK(BM_WLHash);

void BM_AreIsomorphicRelabeled(benchmark::State& state) {
  const auto a = capped_surface(false, 2, 5);
  const auto b = relabel(a, 6);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b));
}
BENCHMARK(BM_AreIsomorphicRelabeled);

void BM_Barycentric(benchmark::State& state) {
  const auto c = capped_surface(true, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(barycentric_subdivide(c));
}
BENCHMARK(BM_Barycentric);

void BM_RWPEHasse(benchmark::State& state) {
  const auto g = hasse_diagram(capped_surface(true, 2, 8));
  for (auto _ : state) benchmark::DoNotOptimize(encode_rwpe(g));
}
BENCHMARK(BM_RWPEHasse);

void BM_Dedup(benchmark::State& state) {
  std::vector<DatasetRecord> batch;
  for (int i = 0; i < state.range(0); ++i) {
    const auto c = random_pachner_walk(simplex_boundary(2), 30, 24, static_cast<std::uint64_t>(i)).complex;
    batch.push_back(DatasetRecord::from_complex("r" + std::to_string(i), c, "S2", {}));
  }
  for (auto _ : state) benchmark::DoNotOptimize(deduplicate(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Dedup)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
