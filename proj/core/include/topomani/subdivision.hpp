#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "topomani/complex.hpp"

namespace topomani {

enum class SubdivisionKind { kStellarOne, kGradedStellar, kTopStellar, kBarycentric };

struct SubdivisionScheme {
  SubdivisionKind kind = SubdivisionKind::kBarycentric;
  std::optional<std::size_t> target_vertices;  // kGradedStellar
  std::optional<double> proportion;            // kTopStellar

  static SubdivisionScheme stellar_one() { return {SubdivisionKind::kStellarOne, {}, {}}; }
  static SubdivisionScheme graded(std::size_t n) { return {SubdivisionKind::kGradedStellar, n, {}}; }
  static SubdivisionScheme top(double p) { return {SubdivisionKind::kTopStellar, {}, p}; }
  static SubdivisionScheme barycentric() { return {SubdivisionKind::kBarycentric, {}, {}}; }

  // "stellar", "graded-16", "top-0.75", "barycentric".
  std::string name() const;
  // Inverse of name(); nullopt for anything unrecognized.
  static std::optional<SubdivisionScheme> parse(std::string_view name);
  // Throws InvalidParameter when a parameter is missing or out of range.
  void validate() const;
};

// Cones a fresh vertex over the boundary of the maximal face `s`.
SimplicialComplex stellar_subdivide(const SimplicialComplex& complex, const Simplex& s);

// Stellar-subdivides uniformly random facets until there are exactly n vertices.
SimplicialComplex graded_stellar(const SimplicialComplex& complex, std::size_t n,
                                 std::uint64_t seed);

// Subdivides ceil(p * #facets) facets of the current facet set, each once.
SimplicialComplex top_stellar(const SimplicialComplex& complex, double p, std::uint64_t seed);

// Flag complex of the face poset. The barycentre of a simplex gets the id of
// its position in dimension-major, lexicographic order.
SimplicialComplex barycentric_subdivide(const SimplicialComplex& complex);

// Dispatches on the scheme; a single stellar step picks a random facet.
SimplicialComplex subdivide(const SimplicialComplex& complex, const SubdivisionScheme& scheme,
                            std::uint64_t seed);

}  // namespace topomani
