#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topomani/complex.hpp"

namespace topomani {

struct SurfaceClass {
  bool orientable = true;
  // Genus when orientable, crosscap count otherwise.
  int genus_or_crosscaps = 0;
  std::string canonical_name;

  int euler_characteristic() const {
    return orientable ? 2 - 2 * genus_or_crosscaps : 2 - genus_or_crosscaps;
  }

  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

struct InvariantSummary {
  FVector f_vector;
  long euler_characteristic = 0;
  bool orientable = false;
  std::vector<std::size_t> betti_gf2;
};

enum class SeedSurface { kS2, kT2, kRP2 };

long euler_characteristic(const SimplicialComplex& complex);

// Faces of the link of `s`, with the original vertex labels of `complex`.
std::vector<Simplex> link_faces(const SimplicialComplex& complex, const Simplex& s);
// The link as a (re-canonicalized) complex; empty when `s` is a facet.
SimplicialComplex link(const SimplicialComplex& complex, const Simplex& s);

// Number of connected components of the 1-skeleton.
std::size_t connected_components(const SimplicialComplex& complex);

// True iff the complex is a single cycle (a triangulated circle).
bool is_cycle(const SimplicialComplex& complex);
// True iff the complex is a connected closed pure 2-complex with chi = 2.
bool is_two_sphere(const SimplicialComplex& complex);

bool is_combinatorial_manifold(const SimplicialComplex& complex);

// Throws NotAManifold unless the input is a connected combinatorial manifold.
bool is_orientable(const SimplicialComplex& complex);

std::vector<std::size_t> betti_gf2(const SimplicialComplex& complex);

SurfaceClass surface_class(bool orientable, int genus_or_crosscaps);
SurfaceClass classify_surface(const SimplicialComplex& complex);
// Parses "S2", "T2#g" or "RP2#k"; nullopt for anything else.
std::optional<SurfaceClass> parse_surface_name(std::string_view name);

InvariantSummary summarize(const SimplicialComplex& complex);

SimplicialComplex minimal_triangulation(SeedSurface seed);
// Boundary of the (d+1)-simplex: the minimal d-sphere.
SimplicialComplex simplex_boundary(int dimension);

}  // namespace topomani
