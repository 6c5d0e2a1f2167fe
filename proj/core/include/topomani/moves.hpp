#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "topomani/complex.hpp"

namespace topomani {

// Bistellar (Pachner) move kinds. The first three act on surfaces, the rest
// on 3-manifolds. Enumeration order is the sort order of valid-move lists.
enum class MoveKind : std::uint8_t { kM13, kM31, kM22, kM14, kM41, kM23, kM32 };

std::string_view to_string(MoveKind kind);
std::optional<MoveKind> parse_move_kind(std::string_view name);
bool is_growth_move(MoveKind kind);

struct MoveDescriptor {
  MoveKind kind;
  Simplex anchor;

  friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
  friend auto operator<=>(const MoveDescriptor&, const MoveDescriptor&) = default;
};

// What a move does to the facet set. The fresh vertex (growth moves only) is
// numbered vertex_count(), so `added` refers to it directly.
struct MovePlan {
  std::vector<Simplex> removed;
  std::vector<Simplex> added;
};

// Either a plan, or the face that blocks the move (an existing face the
// move would have to create, or the anchor itself when it has the wrong
// shape).
struct MoveCheck {
  std::optional<MovePlan> plan;
  Simplex blocking_face;
  const char* reason = "";

  bool valid() const { return plan.has_value(); }
};

MoveCheck check_move(const SimplicialComplex& complex, const MoveDescriptor& move);

// All moves whose preconditions hold, sorted by kind then anchor.
std::vector<MoveDescriptor> enumerate_valid_moves(const SimplicialComplex& complex);

// Throws InvalidMove (naming the blocking face) or FaceNotPresent.
SimplicialComplex apply_pachner(const SimplicialComplex& complex, const MoveDescriptor& move);

struct WalkResult {
  SimplicialComplex complex;
  std::size_t steps_taken = 0;
};

// Applies `steps` uniformly chosen valid moves. Growth moves are excluded
// while the vertex count equals `max_vertices`; the walk stops early if no
// move remains.
WalkResult random_pachner_walk(const SimplicialComplex& complex, std::size_t steps,
                               std::size_t max_vertices, std::uint64_t seed);

}  // namespace topomani
