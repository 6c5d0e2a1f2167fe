#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "topomani/simplex.hpp"

namespace topomani {

using FaceList = std::vector<std::vector<Vertex>>;

/// Per-dimension simplex counts (f0, f1, ..., fd).
struct FVector {
  std::vector<std::size_t> counts;

  std::size_t operator[](std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
  std::size_t size() const noexcept { return counts.size(); }
  std::string to_string() const;

  friend bool operator==(const FVector&, const FVector&) = default;
  friend auto operator<=>(const FVector&, const FVector&) = default;
};

/// An immutable, downward-closed simplicial complex with dense vertex labels.
///
/// Every constructor canonicalizes: the vertex ids that occur are renumbered
/// 0..n-1 preserving their relative order, and faces are stored per
/// dimension in sorted order. Dimension is the largest face dimension (-1
/// for the empty complex, which only arises as a link).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Closure of a list of top faces, each with exactly dimension+1 distinct
  // vertices. Repeated top faces are collapsed; `duplicates_collapsed`
  // reports whether that happened.
  static SimplicialComplex from_top_faces(const FaceList& top_faces, int dimension,
                                          bool* duplicates_collapsed = nullptr);
  static SimplicialComplex from_top_faces(std::span<const Simplex> top_faces, int dimension,
                                          bool* duplicates_collapsed = nullptr);

  // Closure of an arbitrary (possibly mixed-dimension) face list. Empty
  // input yields the empty complex.
  static SimplicialComplex from_faces(std::span<const Simplex> faces);

  int dimension() const noexcept { return dimension_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  bool empty() const noexcept { return dimension_ < 0; }

  std::span<const Simplex> faces(int k) const;
  std::span<const Simplex> facets() const { return faces(dimension_); }
  std::size_t face_count(int k) const { return faces(k).size(); }
  std::size_t total_face_count() const;

  bool contains(const Simplex& s) const;
  // Position of s within faces(s.dimension()), or -1.
  long index_of(const Simplex& s) const;

  // Faces not contained in any larger face.
  std::vector<Simplex> maximal_faces() const;
  bool is_pure() const;

  FVector f_vector() const;

  // Top faces as plain vertex lists, sorted; the dataset serialization form.
  FaceList top_face_lists() const;

  // Applies `relabel[v]` to every vertex and re-canonicalizes. `relabel`
  // must be injective on 0..vertex_count-1.
  SimplicialComplex relabeled(std::span<const Vertex> relabel) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  static SimplicialComplex build(std::vector<Simplex> generators);

  int dimension_ = -1;
  std::size_t vertex_count_ = 0;
  std::array<std::vector<Simplex>, kMaxSimplexSize> faces_{};
};

}  // namespace topomani
