#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "topomani/complex.hpp"
#include "topomani/dataset.hpp"
#include "topomani/graph.hpp"
#include "topomani/hash128.hpp"

namespace topomani {

using WLDigest = Digest128;

// Stable 1-WL colouring: per-node colours plus the number of refinement
// rounds it took for the colour partition to stop splitting.
struct WLColoring {
  std::vector<Digest128> colors;
  std::size_t rounds = 0;
};

// Initial colours are (role, dimension); each round hashes a node's colour
// with the sorted multiset of its neighbours' colours.
WLColoring wl_refine(const RepresentationGraph& graph);

// Hash of the sorted stable colour multiset and the round count.
WLDigest wl_hash(const RepresentationGraph& graph);

// Exact: searches for a vertex bijection mapping faces onto faces, with
// candidates restricted to equal stable WL colours of the incidence graphs.
bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

struct DedupReport {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t fvector_groups = 0;
  std::size_t wl_subsets = 0;
  // Records settled as unique by stage 1 (alone in their f-vector group)
  // and by stage 2 (alone in their WL subset).
  std::size_t unique_by_fvector = 0;
  std::size_t unique_by_wl = 0;
  std::size_t exact_checks = 0;
  std::size_t removed_isomorphic = 0;
  std::size_t capped_subsets = 0;
  std::size_t removed_group_cap = 0;

  std::size_t removed() const { return removed_isomorphic + removed_group_cap; }
  std::string to_json() const;
};

struct DedupResult {
  std::vector<DatasetRecord> kept;
  DedupReport report;
};

inline constexpr std::size_t kDefaultMaxGroup = 5;

// Three-stage filter: group by f-vector, split by WL digest of the incidence
// graph, then pairwise exact checks inside subsets of at most `max_group`
// records. Larger subsets keep only their first record in serialized order.
// Survivors keep their input order.
DedupResult deduplicate(std::span<const DatasetRecord> batch, std::size_t max_group = kDefaultMaxGroup,
                        std::size_t jobs = 1);

}  // namespace topomani
