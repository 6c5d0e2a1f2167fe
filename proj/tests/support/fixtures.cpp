#include "support/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "topomani/invariants.hpp"
#include "topomani/moves.hpp"

namespace topomani::testing {

SimplicialComplex sphere2() { return minimal_triangulation(SeedSurface::kS2); }
SimplicialComplex torus7() { return minimal_triangulation(SeedSurface::kT2); }
SimplicialComplex rp2_6() { return minimal_triangulation(SeedSurface::kRP2); }
SimplicialComplex sphere3() { return simplex_boundary(3); }

std::vector<SimplicialComplex> seed_complexes() { return {sphere2(), torus7(), rp2_6(), sphere3()}; }

SimplicialComplex random_relabel(const SimplicialComplex& complex, Rng& rng) {
  std::vector<Vertex> perm(complex.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return complex.relabeled(perm);
}

std::vector<SimplicialComplex> random_walk_pool(Rng& rng, std::size_t count, std::size_t max_vertices,
                                                std::size_t max_steps) {
  std::vector<SimplicialComplex> seeds;
  for (auto& s : seed_complexes()) {
    if (s.vertex_count() <= max_vertices) seeds.push_back(std::move(s));
  }
  std::vector<SimplicialComplex> out;
  while (out.size() < count) {
    const auto& seed = seeds[uniform_index(rng, seeds.size())];
    const auto steps = uniform_index(rng, max_steps + 1);
    out.push_back(random_pachner_walk(seed, steps, max_vertices, rng()).complex);
  }
  return out;
}

RepresentationGraph random_connected_graph(Rng& rng, std::size_t nodes, std::size_t extra) {
  RepresentationGraph g;
  for (std::size_t i = 0; i < nodes; ++i) g.nodes.push_back({Simplex{static_cast<Vertex>(i)}, NodeRole::kVertex});
  std::set<GraphEdge> edges;
  for (std::size_t i = 1; i < nodes; ++i) {
    const auto j = static_cast<NodeIndex>(uniform_index(rng, i));
    edges.insert({j, static_cast<NodeIndex>(i)});
  }
  for (std::size_t e = 0; e < extra && nodes > 1; ++e) {
    auto a = static_cast<NodeIndex>(uniform_index(rng, nodes));
    auto b = static_cast<NodeIndex>(uniform_index(rng, nodes));
    if (a == b) continue;
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

DatasetRecord make_record(const std::string& id, const SimplicialComplex& complex, const std::string& label) {
  return DatasetRecord::from_complex(id, complex, label, Provenance{});
}

}  // namespace topomani::testing
