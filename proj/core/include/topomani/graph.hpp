#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "topomani/complex.hpp"

namespace topomani {

enum class GraphKind { kSkeleton, kDual, kHasse, kIncidence };
enum class NodeRole { kVertex, kFace, kFacet };

std::string_view to_string(GraphKind kind);
std::string_view to_string(NodeRole role);

struct GraphNode {
  Simplex simplex;
  NodeRole role = NodeRole::kVertex;

  int dimension() const { return simplex.dimension(); }
};

using NodeIndex = std::uint32_t;
using GraphEdge = std::pair<NodeIndex, NodeIndex>;

/// A graph view of a triangulation.
///
/// Nodes are in canonical order (ascending dimension, then lexicographic
/// source simplex). Edges are unique and loop-free; for directed Hasse
/// diagrams each edge runs from a simplex to one of its codimension-1 faces.
struct RepresentationGraph {
  GraphKind kind = GraphKind::kSkeleton;
  bool directed = false;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;

  std::size_t node_count() const { return nodes.size(); }
  // Neighbour lists ignoring direction.
  std::vector<std::vector<NodeIndex>> adjacency() const;
  // Total (in + out) degree per node.
  std::vector<std::size_t> degrees() const;
};

RepresentationGraph skeleton_graph(const SimplicialComplex& complex);
// Throws NotAManifold for anything but a closed combinatorial manifold.
RepresentationGraph dual_graph(const SimplicialComplex& complex);
RepresentationGraph hasse_diagram(const SimplicialComplex& complex, bool directed = false);
// Bipartite vertex/face membership graph over all faces of dimension >= 1.
RepresentationGraph incidence_graph(const SimplicialComplex& complex);

}  // namespace topomani
