#include "topomani/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <json.hpp>

#include "topomani/error.hpp"
#include "topomani/invariants.hpp"
#include "topomani/moves.hpp"
#include "topomani/parallel.hpp"
#include "topomani/random.hpp"
#include "topomani/surgery.hpp"

namespace topomani {

std::string label_2d(const SimplicialComplex& complex) {
  return classify_surface(complex).canonical_name;
}

std::vector<DatasetRecord> filter_min_class_size(std::span<const DatasetRecord> records,
                                                 std::size_t min_size) {
  if (min_size == 0) fail(ErrorCode::kInvalidParameter, "min_size must be >= 1");
  std::map<std::string, std::size_t> counts;
  for (const auto& r : records) ++counts[r.label];
  std::vector<DatasetRecord> out;
  for (const auto& r : records) {
    if (counts[r.label] >= min_size) out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Balancing

void BalanceConfig::validate() const {
  if (target == 0) fail(ErrorCode::kInvalidParameter, "target must be >= 1");
  for (const auto& [label, t] : class_targets) {
    if (t == 0) fail(ErrorCode::kInvalidParameter, "target for " + label + " must be >= 1");
  }
  if (rounds == 0) fail(ErrorCode::kInvalidParameter, "rounds must be >= 1");
  if (max_group == 0) fail(ErrorCode::kInvalidParameter, "max_group must be >= 1");
  if (!(steps_factor > 0.0)) fail(ErrorCode::kInvalidParameter, "steps_factor must be positive");
}

std::string BalanceResult::report_json() const {
  nlohmann::ordered_json j;
  j["records"] = records.size();
  j["rounds_run"] = rounds_run;
  j["target_reached"] = target_reached();
  j["shortfall"] = shortfall;
  j["seeds_over_cap"] = seeds_over_cap;
  auto dedup = nlohmann::ordered_json::array();
  for (const auto& r : dedup_reports) dedup.push_back(nlohmann::ordered_json::parse(r.to_json()));
  j["dedup"] = std::move(dedup);
  return j.dump();
}

namespace {

struct Candidate {
  std::string id;
  std::size_t parent;
  std::uint64_t seed;
};

std::map<std::string, std::size_t> class_counts(const std::vector<DatasetRecord>& records) {
  std::map<std::string, std::size_t> counts;
  for (const auto& r : records) ++counts[r.label];
  return counts;
}

// Keeps at most `target(label)` records per class, earliest first.
template <typename TargetFn>
std::vector<DatasetRecord> trim_to_targets(std::vector<DatasetRecord> records, TargetFn target) {
  std::map<std::string, std::size_t> seen;
  std::vector<DatasetRecord> out;
  for (auto& r : records) {
    if (seen[r.label]++ < target(r.label)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

BalanceResult balance_dataset(std::span<const DatasetRecord> seeds, const BalanceConfig& config,
                              std::uint64_t master_seed) {
  config.validate();
  BalanceResult result;

  std::vector<DatasetRecord> pool;
  int dimension = 0;
  for (const auto& s : seeds) {
    if (dimension == 0) dimension = s.dimension;
    if (s.dimension != dimension) fail(ErrorCode::kInvalidParameter, "seeds mix dimensions");
    const auto c = s.complex();
    if (c.vertex_count() > config.max_vertices) {
      ++result.seeds_over_cap;
      continue;
    }
    DatasetRecord r = s;
    if (dimension == 2) r.label = label_2d(c);
    pool.push_back(std::move(r));
  }
  if (dimension == 0) dimension = 2;

  std::set<std::string> classes;
  for (const auto& r : pool) classes.insert(r.label);
  for (const auto& [label, t] : config.class_targets) {
    if (classes.count(label)) continue;
    classes.insert(label);
    if (dimension != 2) continue;
    const auto surface = parse_surface_name(label);
    if (!surface) fail(ErrorCode::kInvalidParameter, "unknown surface class " + label);
    const auto seed = derive_seed(master_seed, label, "connected-sum");
    const auto built = build_surface(surface->orientable, surface->genus_or_crosscaps, seed);
    if (built.vertex_count() > config.max_vertices) continue;
    pool.push_back(DatasetRecord::from_complex(
        label + ":sum", built, label, Provenance{ProvenanceKind::kConnectedSum, std::nullopt, seed}));
  }

  auto target_of = [&](const std::string& label) {
    auto it = config.class_targets.find(label);
    return it == config.class_targets.end() ? config.target : it->second;
  };

  for (std::size_t round = 1; round <= config.rounds; ++round) {
    const auto counts = class_counts(pool);
    bool done = true;
    for (const auto& label : classes) {
      if (counts.count(label) ? counts.at(label) < target_of(label) : true) done = false;
    }
    if (done) break;
    result.rounds_run = round;

    std::map<std::string, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < pool.size(); ++i) members[pool[i].label].push_back(i);

    std::vector<Candidate> candidates;
    for (const auto& label : classes) {
      auto it = members.find(label);
      if (it == members.end()) continue;
      const std::size_t have = it->second.size();
      const std::size_t want = target_of(label);
      if (have >= want) continue;
      // Oversample: walks from small seeds often land on known triangulations.
      const std::size_t deficit = 2 * (want - have);
      Rng rng(derive_seed(master_seed, label + "/round-" + std::to_string(round), "balance"));
      for (std::size_t k = 0; k < deficit; ++k) {
        Candidate c;
        c.id = label + ":g" + std::to_string(round) + "." + std::to_string(k);
        c.parent = it->second[uniform_index(rng, it->second.size())];
        c.seed = derive_seed(master_seed, c.id, "pachner-walk");
        candidates.push_back(std::move(c));
      }
    }

    std::vector<DatasetRecord> generated(candidates.size());
    parallel_for(candidates.size(), config.jobs, [&](std::size_t k) {
      const auto& c = candidates[k];
      const auto& parent = pool[c.parent];
      const auto complex = parent.complex();
      const auto steps = static_cast<std::size_t>(
          std::max(1.0, std::round(config.steps_factor * static_cast<double>(complex.facets().size()))));
      const auto walk = random_pachner_walk(complex, steps, config.max_vertices, c.seed);
      std::string label = parent.label;
      if (dimension == 2) {
        label = label_2d(walk.complex);
        if (label != parent.label) {
          fail(ErrorCode::kInternal, "Pachner walk changed surface class of " + parent.id);
        }
      }
      generated[k] = DatasetRecord::from_complex(
          c.id, walk.complex, std::move(label),
          Provenance{ProvenanceKind::kPachner, parent.id, c.seed});
    });

    pool.insert(pool.end(), std::make_move_iterator(generated.begin()),
                std::make_move_iterator(generated.end()));
    auto dedup = deduplicate(pool, config.max_group, config.jobs);
    result.dedup_reports.push_back(dedup.report);
    pool = trim_to_targets(std::move(dedup.kept), target_of);
  }

  const auto counts = class_counts(pool);
  for (const auto& label : classes) {
    const std::size_t have = counts.count(label) ? counts.at(label) : 0;
    if (have < target_of(label)) result.shortfall[label] = target_of(label) - have;
  }
  result.records = std::move(pool);
  return result;
}

// ---------------------------------------------------------------------------
// Evaluation variants

std::vector<SubdivisionScheme> default_variant_grid(bool include_graded) {
  std::vector<SubdivisionScheme> grid;
  if (include_graded) {
    for (std::size_t n = 16; n <= 20; ++n) grid.push_back(SubdivisionScheme::graded(n));
  }
  grid.push_back(SubdivisionScheme::top(0.75));
  grid.push_back(SubdivisionScheme::top(1.0));
  grid.push_back(SubdivisionScheme::barycentric());
  return grid;
}

std::vector<VariantSet> make_eval_variants(std::span<const DatasetRecord> records,
                                           std::span<const SubdivisionScheme> which,
                                           std::size_t per_class, std::uint64_t seed,
                                           std::size_t jobs) {
  if (per_class == 0) fail(ErrorCode::kInvalidParameter, "per_class must be >= 1");
  std::vector<SimplicialComplex> complexes(records.size());
  parallel_for(records.size(), jobs, [&](std::size_t i) { complexes[i] = records[i].complex(); });

  std::vector<VariantSet> out;
  for (const auto& scheme : which) {
    scheme.validate();
    const std::string name = scheme.name();
    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (scheme.kind == SubdivisionKind::kGradedStellar &&
          complexes[i].vertex_count() >= *scheme.target_vertices) {
        continue;
      }
      by_class[records[i].label].push_back(i);
    }
    if (by_class.empty()) continue;

    std::vector<std::size_t> chosen;
    for (auto& [label, members] : by_class) {
      if (scheme.kind == SubdivisionKind::kBarycentric) {
        std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
          const auto ka = std::make_pair(complexes[a].vertex_count(), complexes[a].facets().size());
          const auto kb = std::make_pair(complexes[b].vertex_count(), complexes[b].facets().size());
          return ka > kb;
        });
      } else {
        Rng rng(derive_seed(seed, label, name));
        std::shuffle(members.begin(), members.end(), rng);
      }
      const std::size_t take = std::min(per_class, members.size());
      chosen.insert(chosen.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(take));
    }

    VariantSet set{name, scheme, std::vector<DatasetRecord>(chosen.size())};
    parallel_for(chosen.size(), jobs, [&](std::size_t k) {
      const auto& source = records[chosen[k]];
      const auto op_seed = derive_seed(seed, source.id, name);
      auto record = DatasetRecord::from_complex(
          source.id + "@" + name, subdivide(complexes[chosen[k]], scheme, op_seed), source.label,
          Provenance{ProvenanceKind::kSubdivision, source.id, op_seed});
      record.split = source.split;
      set.records[k] = std::move(record);
    });
    out.push_back(std::move(set));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Splits

std::array<std::size_t, 3> split_sizes(std::size_t n, const SplitRatios& ratios) {
  const std::array<double, 3> r{ratios.train, ratios.val, ratios.test};
  if (std::any_of(r.begin(), r.end(), [](double x) { return !(x >= 0.0); }) ||
      std::abs(r[0] + r[1] + r[2] - 1.0) > 1e-9) {
    fail(ErrorCode::kInvalidParameter, "split ratios must be non-negative and sum to 1");
  }
  std::array<std::size_t, 3> sizes{};
  std::array<double, 3> remainder{};
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double exact = r[k] * static_cast<double>(n);
    // The epsilon keeps exact products such as 0.6 * 10 from flooring down.
    sizes[k] = static_cast<std::size_t>(std::floor(exact + 1e-9));
    remainder[k] = exact - static_cast<double>(sizes[k]);
    assigned += sizes[k];
  }
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) ++sizes[order[k % 3]];
  return sizes;
}

std::vector<DatasetRecord> split_dataset(std::span<const DatasetRecord> records,
                                         const SplitRatios& ratios, std::uint64_t seed,
                                         bool stratify) {
  std::vector<DatasetRecord> out(records.begin(), records.end());
  std::map<std::string, std::vector<std::size_t>> strata;
  for (std::size_t i = 0; i < out.size(); ++i) strata[stratify ? out[i].label : std::string()].push_back(i);
  for (auto& [label, members] : strata) {
    Rng rng(derive_seed(seed, label, "split"));
    std::shuffle(members.begin(), members.end(), rng);
    const auto sizes = split_sizes(members.size(), ratios);
    std::size_t pos = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t m = 0; m < sizes[k]; ++m) out[members[pos++]].split = static_cast<Split>(k);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Euler-characteristic baseline

double balanced_accuracy(std::span<const std::string> truth, std::span<const std::string> predicted) {
  if (truth.size() != predicted.size()) fail(ErrorCode::kInvalidParameter, "label count mismatch");
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_class;  // (hits, total)
  for (std::size_t i = 0; i < truth.size(); ++i) {
    auto& [hits, total] = per_class[truth[i]];
    ++total;
    if (predicted[i] == truth[i]) ++hits;
  }
  if (per_class.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& [label, counts] : per_class) {
    sum += static_cast<double>(counts.first) / static_cast<double>(counts.second);
  }
  return sum / static_cast<double>(per_class.size());
}

namespace {

using Bucket = std::pair<long, int>;

Bucket bucket_of(const DatasetRecord& record, EcMode mode) {
  const auto c = record.complex();
  const int orient = mode == EcMode::kChiOrientability ? (is_orientable(c) ? 1 : 0) : -1;
  return {euler_characteristic(c), orient};
}

// Most frequent label; ties go to the lexicographically smallest.
std::string majority(const std::map<std::string, std::size_t>& counts) {
  std::string best;
  std::size_t best_count = 0;
  for (const auto& [label, n] : counts) {
    if (n > best_count) {
      best = label;
      best_count = n;
    }
  }
  return best;
}

}  // namespace

double ec_baseline(std::span<const DatasetRecord> train, std::span<const DatasetRecord> eval,
                   EcMode mode) {
  if (train.empty()) fail(ErrorCode::kEmptyTrain, "EC baseline needs training records");
  std::map<Bucket, std::map<std::string, std::size_t>> votes;
  std::map<std::string, std::size_t> overall;
  for (const auto& r : train) {
    ++votes[bucket_of(r, mode)][r.label];
    ++overall[r.label];
  }
  std::map<Bucket, std::string> model;
  for (const auto& [bucket, counts] : votes) model[bucket] = majority(counts);
  const std::string fallback = majority(overall);

  std::vector<std::string> truth, predicted;
  for (const auto& r : eval) {
    truth.push_back(r.label);
    auto it = model.find(bucket_of(r, mode));
    predicted.push_back(it == model.end() ? fallback : it->second);
  }
  return balanced_accuracy(truth, predicted);
}

}  // namespace topomani
