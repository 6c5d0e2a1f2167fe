#include "topomani/invariants.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <queue>

#include "topomani/error.hpp"

namespace topomani {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Every codimension-1 face lies in exactly two facets.
bool ridges_have_two_cofaces(const SimplicialComplex& complex) {
  const int d = complex.dimension();
  if (d < 1) return false;
  std::vector<unsigned> count(complex.face_count(d - 1), 0);
  for (const auto& facet : complex.facets()) {
    for (std::size_t i = 0; i < facet.size(); ++i) {
      ++count[complex.index_of(facet.without_index(i))];
    }
  }
  return std::all_of(count.begin(), count.end(), [](unsigned c) { return c == 2; });
}

// Rank over GF(2) of the boundary map from k-faces to (k-1)-faces.
std::size_t boundary_rank_gf2(const SimplicialComplex& complex, int k) {
  if (k < 1 || k > complex.dimension()) return 0;
  const std::size_t rows = complex.face_count(k - 1);
  const std::size_t words = (rows + 63) / 64;
  using Row = std::vector<std::uint64_t>;
  // pivots[b] holds a reduced vector whose highest set bit is b.
  std::vector<Row> pivots(rows);
  std::vector<bool> has_pivot(rows, false);
  std::size_t rank = 0;
  auto highest = [&](const Row& r) -> long {
    for (std::size_t w = words; w-- > 0;) {
      if (r[w]) return static_cast<long>(w * 64 + 63 - std::countl_zero(r[w]));
    }
    return -1;
  };
  for (const auto& face : complex.faces(k)) {
    Row r(words, 0);
    for (std::size_t i = 0; i < face.size(); ++i) {
      const auto idx = static_cast<std::size_t>(complex.index_of(face.without_index(i)));
      r[idx / 64] ^= std::uint64_t{1} << (idx % 64);
    }
    for (long b = highest(r); b >= 0; b = highest(r)) {
      if (!has_pivot[b]) {
        pivots[b] = std::move(r);
        has_pivot[b] = true;
        ++rank;
        break;
      }
      const Row& p = pivots[b];
      for (std::size_t w = 0; w < words; ++w) r[w] ^= p[w];
    }
  }
  return rank;
}

void require_manifold(const SimplicialComplex& complex) {
  if (!is_combinatorial_manifold(complex)) {
    fail(ErrorCode::kNotAManifold, "complex is not a connected combinatorial manifold");
  }
}

}  // namespace

long euler_characteristic(const SimplicialComplex& complex) {
  long chi = 0;
  for (int k = 0; k <= complex.dimension(); ++k) {
    const auto fk = static_cast<long>(complex.face_count(k));
    chi += (k % 2 == 0) ? fk : -fk;
  }
  return chi;
}

std::vector<Simplex> link_faces(const SimplicialComplex& complex, const Simplex& s) {
  if (!complex.contains(s)) fail(ErrorCode::kFaceNotPresent, "face " + s.to_string());
  std::vector<Simplex> out;
  for (int k = s.dimension() + 1; k <= complex.dimension(); ++k) {
    for (const auto& face : complex.faces(k)) {
      if (!face.contains(s)) continue;
      Simplex rest = face;
      for (Vertex v : s) rest = rest.without(v);
      out.push_back(rest);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex link(const SimplicialComplex& complex, const Simplex& s) {
  return SimplicialComplex::from_faces(link_faces(complex, s));
}

std::size_t connected_components(const SimplicialComplex& complex) {
  DisjointSets sets(complex.vertex_count());
  std::size_t components = complex.vertex_count();
  for (const auto& e : complex.faces(1)) {
    if (sets.unite(e[0], e[1])) --components;
  }
  return components;
}

bool is_cycle(const SimplicialComplex& complex) {
  if (complex.dimension() != 1 || complex.vertex_count() < 3) return false;
  std::vector<unsigned> degree(complex.vertex_count(), 0);
  for (const auto& e : complex.faces(1)) {
    ++degree[e[0]];
    ++degree[e[1]];
  }
  if (!std::all_of(degree.begin(), degree.end(), [](unsigned d) { return d == 2; })) return false;
  return connected_components(complex) == 1;
}

bool is_two_sphere(const SimplicialComplex& complex) {
  return complex.dimension() == 2 && complex.is_pure() && ridges_have_two_cofaces(complex) &&
         connected_components(complex) == 1 && euler_characteristic(complex) == 2;
}

bool is_combinatorial_manifold(const SimplicialComplex& complex) {
  const int d = complex.dimension();
  if (d != 2 && d != 3) {
    fail(ErrorCode::kUnsupportedDimension,
         "manifold check needs dimension 2 or 3, got " + std::to_string(d));
  }
  if (!complex.is_pure() || connected_components(complex) != 1) return false;
  for (Vertex v = 0; v < complex.vertex_count(); ++v) {
    const auto lk = link(complex, Simplex{v});
    if (d == 2 ? !is_cycle(lk) : !is_two_sphere(lk)) return false;
  }
  return true;
}

bool is_orientable(const SimplicialComplex& complex) {
  require_manifold(complex);
  const int d = complex.dimension();
  const auto facets = complex.facets();
  // For each ridge, the (facet, omitted position) pairs containing it.
  struct Incidence {
    std::size_t facet;
    std::size_t omitted;
  };
  std::vector<std::vector<Incidence>> by_ridge(complex.face_count(d - 1));
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (std::size_t i = 0; i < facets[f].size(); ++i) {
      by_ridge[complex.index_of(facets[f].without_index(i))].push_back({f, i});
    }
  }
  // sign[f] = +1 keeps the sorted vertex order, -1 reverses it. Dropping the
  // i-th vertex induces (-1)^i on the ridge; neighbours must disagree there.
  std::vector<int> sign(facets.size(), 0);
  std::queue<std::size_t> pending;
  sign[0] = 1;
  pending.push(0);
  while (!pending.empty()) {
    const std::size_t f = pending.front();
    pending.pop();
    for (std::size_t i = 0; i < facets[f].size(); ++i) {
      const auto& pair = by_ridge[complex.index_of(facets[f].without_index(i))];
      const Incidence& other = pair[0].facet == f ? pair[1] : pair[0];
      const int induced = sign[f] * ((i % 2) ? -1 : 1);
      const int required = -induced * ((other.omitted % 2) ? -1 : 1);
      if (sign[other.facet] == 0) {
        sign[other.facet] = required;
        pending.push(other.facet);
      } else if (sign[other.facet] != required) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> betti_gf2(const SimplicialComplex& complex) {
  const int d = complex.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(d, 0)) + 2, 0);
  for (int k = 1; k <= d; ++k) ranks[k] = boundary_rank_gf2(complex, k);
  std::vector<std::size_t> betti;
  for (int k = 0; k <= d; ++k) {
    betti.push_back(complex.face_count(k) - ranks[k] - ranks[k + 1]);
  }
  return betti;
}

SurfaceClass surface_class(bool orientable, int genus_or_crosscaps) {
  if (genus_or_crosscaps < 0 || (!orientable && genus_or_crosscaps < 1)) {
    fail(ErrorCode::kInvalidParameter,
         "invalid surface parameters count=" + std::to_string(genus_or_crosscaps));
  }
  SurfaceClass out{orientable, genus_or_crosscaps, {}};
  if (orientable) {
    out.canonical_name = genus_or_crosscaps == 0 ? "S2" : "T2#" + std::to_string(genus_or_crosscaps);
  } else {
    out.canonical_name = "RP2#" + std::to_string(genus_or_crosscaps);
  }
  return out;
}

SurfaceClass classify_surface(const SimplicialComplex& complex) {
  if (complex.dimension() != 2) {
    fail(ErrorCode::kUnsupportedDimension,
         "surface classification needs dimension 2, got " + std::to_string(complex.dimension()));
  }
  const bool orientable = is_orientable(complex);
  const long chi = euler_characteristic(complex);
  if (orientable) {
    if (chi % 2 != 0 || chi > 2) {
      fail(ErrorCode::kParityViolation,
           "orientable surface with chi=" + std::to_string(chi));
    }
    return surface_class(true, static_cast<int>((2 - chi) / 2));
  }
  if (chi > 1) fail(ErrorCode::kParityViolation, "non-orientable surface with chi=" + std::to_string(chi));
  return surface_class(false, static_cast<int>(2 - chi));
}

std::optional<SurfaceClass> parse_surface_name(std::string_view name) {
  if (name == "S2") return surface_class(true, 0);
  auto parse_count = [](std::string_view digits) -> std::optional<int> {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) return std::nullopt;
    return value;
  };
  if (name.starts_with("T2#")) {
    if (auto g = parse_count(name.substr(3))) return surface_class(true, *g);
  } else if (name.starts_with("RP2#")) {
    if (auto k = parse_count(name.substr(4))) return surface_class(false, *k);
  }
  return std::nullopt;
}

InvariantSummary summarize(const SimplicialComplex& complex) {
  InvariantSummary out;
  out.f_vector = complex.f_vector();
  out.euler_characteristic = euler_characteristic(complex);
  out.orientable = is_orientable(complex);
  out.betti_gf2 = betti_gf2(complex);
  return out;
}

SimplicialComplex simplex_boundary(int dimension) {
  if (dimension < 1 || dimension >= kMaxSimplexSize) {
    fail(ErrorCode::kUnsupportedDimension, "sphere dimension " + std::to_string(dimension));
  }
  FaceList facets;
  for (Vertex skip = 0; skip <= static_cast<Vertex>(dimension + 1); ++skip) {
    std::vector<Vertex> face;
    for (Vertex v = 0; v <= static_cast<Vertex>(dimension + 1); ++v) {
      if (v != skip) face.push_back(v);
    }
    facets.push_back(std::move(face));
  }
  return SimplicialComplex::from_top_faces(facets, dimension);
}

SimplicialComplex minimal_triangulation(SeedSurface seed) {
  switch (seed) {
    case SeedSurface::kS2:
      return simplex_boundary(2);
    case SeedSurface::kT2: {
      // Seven-vertex torus: translates of {0,1,3} and {0,2,3} modulo 7.
      FaceList faces;
      for (Vertex i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
      }
      return SimplicialComplex::from_top_faces(faces, 2);
    }
    case SeedSurface::kRP2:
      // Six-vertex projective plane (antipodal quotient of the icosahedron).
      return SimplicialComplex::from_top_faces(
          FaceList{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                   {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}},
          2);
  }
  fail(ErrorCode::kInvalidParameter, "unknown seed surface");
}

}  // namespace topomani
