#include "topomani/surgery.hpp"

#include <algorithm>
#include <array>

#include "topomani/error.hpp"
#include "topomani/invariants.hpp"
#include "topomani/random.hpp"

namespace topomani {

namespace {

void require_closed_surface(const SimplicialComplex& m, const char* which) {
  if (m.dimension() != 2) {
    fail(ErrorCode::kUnsupportedDimension,
         std::string(which) + " must be 2-dimensional for a connected sum");
  }
  if (!is_combinatorial_manifold(m)) {
    fail(ErrorCode::kNotAManifold, std::string(which) + " is not a combinatorial surface");
  }
}

}  // namespace

SimplicialComplex connected_sum(const SimplicialComplex& m1, const SimplicialComplex& m2,
                                const Simplex& t1, const Simplex& t2) {
  require_closed_surface(m1, "first summand");
  require_closed_surface(m2, "second summand");
  if (t1.dimension() != 2 || !m1.contains(t1)) {
    fail(ErrorCode::kFaceNotPresent, "triangle " + t1.to_string() + " not in first summand");
  }
  if (t2.dimension() != 2 || !m2.contains(t2)) {
    fail(ErrorCode::kFaceNotPresent, "triangle " + t2.to_string() + " not in second summand");
  }

  std::vector<Vertex> relabel(m2.vertex_count());
  Vertex next = static_cast<Vertex>(m1.vertex_count());
  for (Vertex v = 0; v < m2.vertex_count(); ++v) {
    const int slot = t2.index_of(v);
    relabel[v] = slot >= 0 ? t1[static_cast<std::size_t>(slot)] : next++;
  }

  std::vector<Simplex> facets;
  for (const auto& f : m1.facets()) {
    if (f != t1) facets.push_back(f);
  }
  for (const auto& f : m2.facets()) {
    if (f == t2) continue;
    std::array<Vertex, 3> buf{relabel[f[0]], relabel[f[1]], relabel[f[2]]};
    facets.push_back(Simplex::from_unsorted(buf));
  }
  auto result = SimplicialComplex::from_top_faces(facets, 2);
  if (!is_combinatorial_manifold(result)) {
    fail(ErrorCode::kInternal, "connected sum did not produce a closed surface");
  }
  return result;
}

SimplicialComplex build_surface(bool orientable, int count, std::uint64_t seed) {
  if (count < 0 || (!orientable && count < 1)) {
    fail(ErrorCode::kInvalidParameter,
         "build_surface needs genus >= 0 or crosscaps >= 1, got " + std::to_string(count));
  }
  Rng rng(seed);
  const auto summand = minimal_triangulation(orientable ? SeedSurface::kT2 : SeedSurface::kRP2);
  auto surface = minimal_triangulation(SeedSurface::kS2);
  for (int i = 0; i < count; ++i) {
    const Simplex t1 = surface.facets()[uniform_index(rng, surface.facets().size())];
    const Simplex t2 = summand.facets()[uniform_index(rng, summand.facets().size())];
    surface = connected_sum(surface, summand, t1, t2);
  }
  const auto cls = classify_surface(surface);
  if (cls.orientable != orientable || cls.genus_or_crosscaps != count) {
    fail(ErrorCode::kInternal, "built surface classified as " + cls.canonical_name);
  }
  return surface;
}

}  // namespace topomani
