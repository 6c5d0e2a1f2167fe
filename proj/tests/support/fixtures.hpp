#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "topomani/complex.hpp"
#include "topomani/dataset.hpp"
#include "topomani/graph.hpp"
#include "topomani/random.hpp"

namespace topomani::testing {

SimplicialComplex sphere2();  // boundary of the tetrahedron
SimplicialComplex torus7();   // seven-vertex torus
SimplicialComplex rp2_6();    // six-vertex projective plane
SimplicialComplex sphere3();  // boundary of the 4-simplex

// The four seed complexes in the order above.
std::vector<SimplicialComplex> seed_complexes();

// Applies a uniformly random vertex permutation.
SimplicialComplex random_relabel(const SimplicialComplex& complex, Rng& rng);

// Complexes reached by short random Pachner walks from the seeds, capped at
// `max_vertices` (seeds larger than the cap are skipped).
std::vector<SimplicialComplex> random_walk_pool(Rng& rng, std::size_t count, std::size_t max_vertices,
                                                std::size_t max_steps = 6);

// Connected simple graph: a random spanning tree plus `extra` random edges.
RepresentationGraph random_connected_graph(Rng& rng, std::size_t nodes, std::size_t extra);

DatasetRecord make_record(const std::string& id, const SimplicialComplex& complex,
                          const std::string& label);

}  // namespace topomani::testing
