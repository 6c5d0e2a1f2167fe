#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "topomani/dataset.hpp"
#include "topomani/isomorphism.hpp"
#include "topomani/subdivision.hpp"

namespace topomani {

inline constexpr std::size_t kMaxVertices2D = 24;
inline constexpr std::size_t kMaxVertices3D = 40;
inline constexpr std::size_t kDefaultEvalPerClass = 100;
inline constexpr std::size_t kDefaultMinClassSize = 100;

// Canonical surface name of a closed surface ("S2", "T2#g", "RP2#k").
std::string label_2d(const SimplicialComplex& complex);

// Drops every record whose label occurs fewer than `min_size` times.
std::vector<DatasetRecord> filter_min_class_size(std::span<const DatasetRecord> records,
                                                 std::size_t min_size);

struct BalanceConfig {
  // Per-class target unless overridden in class_targets.
  std::size_t target = 2500;
  // Explicit targets; 2D classes listed here but missing from the seeds are
  // created by connected sums.
  std::map<std::string, std::size_t> class_targets;
  std::size_t max_vertices = kMaxVertices2D;
  std::size_t max_group = kDefaultMaxGroup;
  // Generation/deduplication alternations.
  std::size_t rounds = 5;
  // Walk length per generated sample, as a multiple of the parent's facet count.
  double steps_factor = 2.0;
  std::size_t jobs = 1;

  void validate() const;
};

struct BalanceResult {
  std::vector<DatasetRecord> records;
  // Classes that missed their target when the rounds ran out.
  std::map<std::string, std::size_t> shortfall;
  std::size_t rounds_run = 0;
  std::vector<DedupReport> dedup_reports;
  // Seeds dropped for exceeding max_vertices.
  std::size_t seeds_over_cap = 0;

  bool target_reached() const { return shortfall.empty(); }
  std::string report_json() const;
};

// Alternates Pachner-walk generation and deduplication until every class
// reaches its target or the rounds are used up. Surface labels are recomputed
// for every generated record; 3-manifold labels are inherited from the parent.
BalanceResult balance_dataset(std::span<const DatasetRecord> seeds, const BalanceConfig& config,
                              std::uint64_t master_seed);

struct VariantSet {
  std::string name;
  SubdivisionScheme scheme;
  std::vector<DatasetRecord> records;
};

// graded-16 .. graded-20, top-0.75, top-1, barycentric. Without the graded
// part this is the three-variant grid used for the balanced datasets.
std::vector<SubdivisionScheme> default_variant_grid(bool include_graded = true);

// Samples up to `per_class` records per class and subdivides them. A graded(n)
// variant only draws from records with fewer than n vertices and is omitted
// when there are none; the barycentric variant takes the largest records
// (most vertices, then most facets).
std::vector<VariantSet> make_eval_variants(std::span<const DatasetRecord> records,
                                           std::span<const SubdivisionScheme> which,
                                           std::size_t per_class, std::uint64_t seed,
                                           std::size_t jobs = 1);

struct SplitRatios {
  double train = 0.6;
  double val = 0.2;
  double test = 0.2;
};

// Shuffled assignment with largest-remainder rounding of the split sizes.
// With `stratify`, the rounding is done per class.
std::vector<DatasetRecord> split_dataset(std::span<const DatasetRecord> records,
                                         const SplitRatios& ratios, std::uint64_t seed,
                                         bool stratify = false);

// Split sizes for n records by largest remainder; ties go to the earlier split.
std::array<std::size_t, 3> split_sizes(std::size_t n, const SplitRatios& ratios);

enum class EcMode { kChi, kChiOrientability };

// Majority label per Euler characteristic (and orientability) bucket learned
// on `train`, scored by balanced accuracy on `eval`.
double ec_baseline(std::span<const DatasetRecord> train, std::span<const DatasetRecord> eval,
                   EcMode mode = EcMode::kChiOrientability);

// Macro-averaged per-class recall over the classes present in `truth`.
double balanced_accuracy(std::span<const std::string> truth, std::span<const std::string> predicted);

}  // namespace topomani
