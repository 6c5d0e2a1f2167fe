#include "topomani/represent.hpp"

#include <cmath>
#include <random>

#include "topomani/error.hpp"
#include "topomani/random.hpp"

namespace topomani {

std::string_view to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::kRandom: return "r";
    case EncodingKind::kDegree: return "d";
    case EncodingKind::kRwpe: return "rwpe";
    case EncodingKind::kMomentCurve: return "mc";
  }
  return "?";
}

std::optional<EncodingKind> parse_encoding_kind(std::string_view name) {
  for (auto kind : {EncodingKind::kRandom, EncodingKind::kDegree, EncodingKind::kRwpe,
                    EncodingKind::kMomentCurve}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::vector<double> FeatureMatrix::row(std::size_t r) const {
  return {values.begin() + static_cast<std::ptrdiff_t>(r * cols),
          values.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols)};
}

namespace {

FeatureMatrix shaped(EncodingKind kind, std::size_t rows, std::size_t cols) {
  return FeatureMatrix{kind, rows, cols, std::vector<double>(rows * cols, 0.0)};
}

}  // namespace

FeatureMatrix encode_random(const RepresentationGraph& graph, std::size_t k, std::uint64_t seed) {
  if (k == 0) fail(ErrorCode::kInvalidParameter, "random feature dimension must be >= 1");
  auto out = shaped(EncodingKind::kRandom, graph.node_count(), k);
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& x : out.values) x = unit(rng);
  return out;
}

FeatureMatrix encode_degree(const RepresentationGraph& graph) {
  auto out = shaped(EncodingKind::kDegree, graph.node_count(), 1);
  const auto deg = graph.degrees();
  for (std::size_t i = 0; i < deg.size(); ++i) out.values[i] = static_cast<double>(deg[i]);
  return out;
}

FeatureMatrix encode_rwpe(const RepresentationGraph& graph, std::size_t steps) {
  if (steps == 0) fail(ErrorCode::kInvalidParameter, "random walk needs at least one step");
  const std::size_t n = graph.node_count();
  const auto adj = graph.adjacency();
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].empty()) fail(ErrorCode::kIsolatedNode, "node " + std::to_string(i) + " has degree 0");
  }
  auto out = shaped(EncodingKind::kRwpe, n, steps);
  // Push the distribution of a walker started at `start` through the sparse
  // transition matrix and read back its mass at `start`.
  std::vector<double> mass(n), next(n);
  for (std::size_t start = 0; start < n; ++start) {
    std::fill(mass.begin(), mass.end(), 0.0);
    mass[start] = 1.0;
    for (std::size_t step = 0; step < steps; ++step) {
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t u = 0; u < n; ++u) {
        if (mass[u] == 0.0) continue;
        const double share = mass[u] / static_cast<double>(adj[u].size());
        for (NodeIndex v : adj[u]) next[v] += share;
      }
      std::swap(mass, next);
      out.at(start, step) = mass[start];
    }
  }
  return out;
}

FeatureMatrix encode_moment_curve(const RepresentationGraph& graph, int manifold_dim) {
  if (manifold_dim != 2 && manifold_dim != 3) {
    fail(ErrorCode::kInvalidParameter, "moment curve needs manifold dimension 2 or 3");
  }
  const std::size_t n = graph.node_count();
  if (n < 2) fail(ErrorCode::kInvalidParameter, "moment curve needs at least two nodes");
  const auto width = static_cast<std::size_t>(2 * manifold_dim + 1);
  auto out = shaped(EncodingKind::kMomentCurve, n, width);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    double power = 1.0;
    for (std::size_t c = 0; c < width; ++c) {
      power *= t;
      out.at(i, c) = power;
    }
  }
  return out;
}

}  // namespace topomani
