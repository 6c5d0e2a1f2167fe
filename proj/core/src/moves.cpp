#include "topomani/moves.hpp"

#include <algorithm>
#include <array>

#include "topomani/error.hpp"
#include "topomani/invariants.hpp"
#include "topomani/random.hpp"

namespace topomani {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kM13: return "M13";
    case MoveKind::kM31: return "M31";
    case MoveKind::kM22: return "M22";
    case MoveKind::kM14: return "M14";
    case MoveKind::kM41: return "M41";
    case MoveKind::kM23: return "M23";
    case MoveKind::kM32: return "M32";
  }
  return "?";
}

std::optional<MoveKind> parse_move_kind(std::string_view name) {
  for (auto kind : {MoveKind::kM13, MoveKind::kM31, MoveKind::kM22, MoveKind::kM14,
                    MoveKind::kM41, MoveKind::kM23, MoveKind::kM32}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

bool is_growth_move(MoveKind kind) { return kind == MoveKind::kM13 || kind == MoveKind::kM14; }

namespace {

int dimension_of(MoveKind kind) {
  switch (kind) {
    case MoveKind::kM13:
    case MoveKind::kM31:
    case MoveKind::kM22:
      return 2;
    default:
      return 3;
  }
}

// Anchor dimension each kind acts on, given the complex dimension d.
int anchor_dimension(MoveKind kind, int d) {
  switch (kind) {
    case MoveKind::kM13:
    case MoveKind::kM14: return d;
    case MoveKind::kM31:
    case MoveKind::kM41: return 0;
    case MoveKind::kM22: return 1;
    case MoveKind::kM23: return 2;
    case MoveKind::kM32: return 1;
  }
  return -1;
}

// Facets containing each face, indexed by (dimension, position in faces(k)).
class CofacetIndex {
 public:
  explicit CofacetIndex(const SimplicialComplex& complex) : complex_(complex) {
    const int d = complex.dimension();
    for (int k = 0; k <= d; ++k) by_face_[k].resize(complex.face_count(k));
    const auto facets = complex.facets();
    for (std::size_t f = 0; f < facets.size(); ++f) {
      const auto& facet = facets[f];
      const unsigned n = static_cast<unsigned>(facet.size());
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::array<Vertex, kMaxSimplexSize> buf{};
        std::size_t len = 0;
        for (unsigned i = 0; i < n; ++i) {
          if (mask & (1u << i)) buf[len++] = facet[i];
        }
        const Simplex face(std::span<const Vertex>(buf.data(), len));
        by_face_[len - 1][complex.index_of(face)].push_back(static_cast<std::uint32_t>(f));
      }
    }
  }

  std::vector<Simplex> cofacets(const Simplex& s) const {
    std::vector<Simplex> out;
    const long idx = complex_.index_of(s);
    if (idx < 0) return out;
    for (auto f : by_face_[s.dimension()][idx]) out.push_back(complex_.facets()[f]);
    return out;
  }

 private:
  const SimplicialComplex& complex_;
  std::array<std::vector<std::vector<std::uint32_t>>, kMaxSimplexSize> by_face_{};
};

MoveCheck invalid(Simplex blocking, const char* reason) {
  MoveCheck out;
  out.blocking_face = blocking;
  out.reason = reason;
  return out;
}

MoveCheck valid(std::vector<Simplex> removed, std::vector<Simplex> added) {
  MoveCheck out;
  out.plan = MovePlan{std::move(removed), std::move(added)};
  return out;
}

// Vertices of `faces` other than those of `excluded`, sorted and unique.
std::vector<Vertex> opposite_vertices(const std::vector<Simplex>& faces, const Simplex& excluded) {
  std::vector<Vertex> out;
  for (const auto& f : faces) {
    for (Vertex v : f) {
      if (!excluded.contains(v)) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MoveCheck check_indexed(const SimplicialComplex& complex, const CofacetIndex& index,
                        const MoveDescriptor& move) {
  const int d = complex.dimension();
  const Simplex& anchor = move.anchor;
  if (dimension_of(move.kind) != d) {
    return invalid(anchor, "move kind does not match complex dimension");
  }
  if (anchor.dimension() != anchor_dimension(move.kind, d)) {
    return invalid(anchor, "anchor has the wrong dimension for this move");
  }
  if (!complex.contains(anchor)) {
    fail(ErrorCode::kFaceNotPresent, "anchor " + anchor.to_string() + " not in complex");
  }
  const auto star = index.cofacets(anchor);

  switch (move.kind) {
    case MoveKind::kM13:
    case MoveKind::kM14: {
      const Vertex fresh = static_cast<Vertex>(complex.vertex_count());
      std::vector<Simplex> added;
      for (std::size_t i = 0; i < anchor.size(); ++i) added.push_back(anchor.without_index(i).with(fresh));
      return valid({anchor}, std::move(added));
    }
    case MoveKind::kM31:
    case MoveKind::kM41: {
      if (star.size() != static_cast<std::size_t>(d + 1)) {
        return invalid(anchor, "vertex does not have exactly d+1 incident facets");
      }
      const auto rim = opposite_vertices(star, anchor);
      if (rim.size() != static_cast<std::size_t>(d + 1)) {
        return invalid(anchor, "vertex link is not the boundary of a simplex");
      }
      const Simplex replacement{std::span<const Vertex>(rim)};
      if (complex.contains(replacement)) {
        return invalid(replacement, "replacement facet already present");
      }
      return valid(star, {replacement});
    }
    case MoveKind::kM22: {
      if (star.size() != 2) return invalid(anchor, "edge not in exactly two triangles");
      const auto apex = opposite_vertices(star, anchor);
      const Simplex flipped{apex[0], apex[1]};
      if (complex.contains(flipped)) return invalid(flipped, "flipped edge already present");
      return valid(star, {flipped.with(anchor[0]), flipped.with(anchor[1])});
    }
    case MoveKind::kM23: {
      if (star.size() != 2) return invalid(anchor, "triangle not in exactly two tetrahedra");
      const auto apex = opposite_vertices(star, anchor);
      const Simplex spine{apex[0], apex[1]};
      if (complex.contains(spine)) return invalid(spine, "new edge already present");
      std::vector<Simplex> added;
      for (std::size_t i = 0; i < anchor.size(); ++i) {
        added.push_back(anchor.without_index(i).with(apex[0]).with(apex[1]));
      }
      return valid(star, std::move(added));
    }
    case MoveKind::kM32: {
      if (star.size() != 3) return invalid(anchor, "edge not in exactly three tetrahedra");
      const auto rim = opposite_vertices(star, anchor);
      if (rim.size() != 3) return invalid(anchor, "edge link is not a triangle boundary");
      const Simplex triangle{std::span<const Vertex>(rim)};
      if (complex.contains(triangle)) return invalid(triangle, "new triangle already present");
      return valid(star, {triangle.with(anchor[0]), triangle.with(anchor[1])});
    }
  }
  return invalid(anchor, "unknown move kind");
}

std::vector<MoveDescriptor> enumerate_indexed(const SimplicialComplex& complex,
                                              const CofacetIndex& index) {
  const int d = complex.dimension();
  std::vector<MoveKind> kinds = d == 2
      ? std::vector<MoveKind>{MoveKind::kM13, MoveKind::kM31, MoveKind::kM22}
      : std::vector<MoveKind>{MoveKind::kM14, MoveKind::kM41, MoveKind::kM23, MoveKind::kM32};
  std::vector<MoveDescriptor> out;
  for (auto kind : kinds) {
    for (const auto& anchor : complex.faces(anchor_dimension(kind, d))) {
      MoveDescriptor move{kind, anchor};
      if (check_indexed(complex, index, move).valid()) out.push_back(move);
    }
  }
  // Faces are already sorted within a dimension, and kinds are visited in
  // enum order, so `out` is sorted.
  return out;
}

SimplicialComplex apply_plan(const SimplicialComplex& complex, const MovePlan& plan) {
  std::vector<Simplex> facets;
  facets.reserve(complex.facets().size() + plan.added.size());
  for (const auto& f : complex.facets()) {
    if (std::find(plan.removed.begin(), plan.removed.end(), f) == plan.removed.end()) {
      facets.push_back(f);
    }
  }
  facets.insert(facets.end(), plan.added.begin(), plan.added.end());
  return SimplicialComplex::from_top_faces(facets, complex.dimension());
}

void require_surface_or_threefold(const SimplicialComplex& complex) {
  if (!is_combinatorial_manifold(complex)) {
    fail(ErrorCode::kNotAManifold, "Pachner moves need a combinatorial manifold");
  }
}

}  // namespace

MoveCheck check_move(const SimplicialComplex& complex, const MoveDescriptor& move) {
  return check_indexed(complex, CofacetIndex(complex), move);
}

std::vector<MoveDescriptor> enumerate_valid_moves(const SimplicialComplex& complex) {
  require_surface_or_threefold(complex);
  return enumerate_indexed(complex, CofacetIndex(complex));
}

SimplicialComplex apply_pachner(const SimplicialComplex& complex, const MoveDescriptor& move) {
  const auto check = check_move(complex, move);
  if (!check.valid()) {
    fail(ErrorCode::kInvalidMove, std::string(to_string(move.kind)) + " on " +
                                      move.anchor.to_string() + ": " + check.reason +
                                      " (blocking face " + check.blocking_face.to_string() + ")");
  }
  return apply_plan(complex, *check.plan);
}

WalkResult random_pachner_walk(const SimplicialComplex& complex, std::size_t steps,
                               std::size_t max_vertices, std::uint64_t seed) {
  require_surface_or_threefold(complex);
  if (max_vertices < complex.vertex_count()) {
    fail(ErrorCode::kInvalidParameter, "max_vertices below current vertex count");
  }
  Rng rng(seed);
  WalkResult result{complex, 0};
  for (; result.steps_taken < steps; ++result.steps_taken) {
    const CofacetIndex index(result.complex);
    auto moves = enumerate_indexed(result.complex, index);
    if (result.complex.vertex_count() >= max_vertices) {
      std::erase_if(moves, [](const MoveDescriptor& m) { return is_growth_move(m.kind); });
    }
    if (moves.empty()) break;
    const auto& move = moves[uniform_index(rng, moves.size())];
    result.complex = apply_plan(result.complex, *check_indexed(result.complex, index, move).plan);
  }
  return result;
}

}  // namespace topomani
