#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "topomani/graph.hpp"

namespace topomani {

enum class EncodingKind { kRandom, kDegree, kRwpe, kMomentCurve };

std::string_view to_string(EncodingKind kind);
std::optional<EncodingKind> parse_encoding_kind(std::string_view name);

inline constexpr std::size_t kDefaultRandomFeatureDim = 8;
inline constexpr std::size_t kDefaultRwpeSteps = 8;

/// Row-major node features; row i belongs to node i of the graph.
struct FeatureMatrix {
  EncodingKind kind = EncodingKind::kRandom;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  std::vector<double> row(std::size_t r) const;
};

// i.i.d. uniform entries in [0, 1).
FeatureMatrix encode_random(const RepresentationGraph& graph, std::size_t k, std::uint64_t seed);

// Single column of total node degrees.
FeatureMatrix encode_degree(const RepresentationGraph& graph);

// Return probabilities of the random walk P = D^-1 A after 1..steps steps.
// Direction is ignored. Throws IsolatedNode on a degree-0 node.
FeatureMatrix encode_rwpe(const RepresentationGraph& graph, std::size_t steps = kDefaultRwpeSteps);

// Node i gets t = i/(n-1) and features t^1 .. t^(2d+1).
FeatureMatrix encode_moment_curve(const RepresentationGraph& graph, int manifold_dim);

}  // namespace topomani
