#include "topomani/graph.hpp"

#include <algorithm>

#include "topomani/error.hpp"
#include "topomani/invariants.hpp"

namespace topomani {

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kSkeleton: return "skeleton";
    case GraphKind::kDual: return "dual";
    case GraphKind::kHasse: return "hasse";
    case GraphKind::kIncidence: return "incidence";
  }
  return "?";
}

std::string_view to_string(NodeRole role) {
  switch (role) {
    case NodeRole::kVertex: return "vertex";
    case NodeRole::kFace: return "face";
    case NodeRole::kFacet: return "facet";
  }
  return "?";
}

std::vector<std::vector<NodeIndex>> RepresentationGraph::adjacency() const {
  std::vector<std::vector<NodeIndex>> adj(nodes.size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<std::size_t> RepresentationGraph::degrees() const {
  std::vector<std::size_t> deg(nodes.size(), 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

namespace {

// Node offsets of each dimension when nodes list every face in canonical order.
struct FaceNumbering {
  explicit FaceNumbering(const SimplicialComplex& complex) : complex(complex) {
    offset.assign(static_cast<std::size_t>(std::max(complex.dimension(), 0)) + 2, 0);
    for (int k = 0; k <= complex.dimension(); ++k) {
      offset[k + 1] = offset[k] + complex.face_count(k);
    }
  }
  NodeIndex operator()(const Simplex& s) const {
    return static_cast<NodeIndex>(offset[s.dimension()] + complex.index_of(s));
  }

  const SimplicialComplex& complex;
  std::vector<std::size_t> offset;
};

std::vector<GraphNode> face_nodes(const SimplicialComplex& complex) {
  std::vector<GraphNode> nodes;
  for (int k = 0; k <= complex.dimension(); ++k) {
    for (const auto& s : complex.faces(k)) {
      nodes.push_back({s, k == 0 ? NodeRole::kVertex : NodeRole::kFace});
    }
  }
  return nodes;
}

void sort_edges(std::vector<GraphEdge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

}  // namespace

RepresentationGraph skeleton_graph(const SimplicialComplex& complex) {
  RepresentationGraph g;
  g.kind = GraphKind::kSkeleton;
  for (const auto& v : complex.faces(0)) g.nodes.push_back({v, NodeRole::kVertex});
  for (const auto& e : complex.faces(1)) g.edges.emplace_back(e[0], e[1]);
  return g;
}

RepresentationGraph dual_graph(const SimplicialComplex& complex) {
  if (!is_combinatorial_manifold(complex)) {
    fail(ErrorCode::kNotAManifold, "dual graph needs a closed combinatorial manifold");
  }
  RepresentationGraph g;
  g.kind = GraphKind::kDual;
  const auto facets = complex.facets();
  const int d = complex.dimension();
  std::vector<std::vector<NodeIndex>> by_ridge(complex.face_count(d - 1));
  for (std::size_t f = 0; f < facets.size(); ++f) {
    g.nodes.push_back({facets[f], NodeRole::kFacet});
    for (std::size_t i = 0; i < facets[f].size(); ++i) {
      by_ridge[complex.index_of(facets[f].without_index(i))].push_back(static_cast<NodeIndex>(f));
    }
  }
  for (const auto& pair : by_ridge) {
    g.edges.emplace_back(std::min(pair[0], pair[1]), std::max(pair[0], pair[1]));
  }
  sort_edges(g.edges);
  return g;
}

RepresentationGraph hasse_diagram(const SimplicialComplex& complex, bool directed) {
  RepresentationGraph g;
  g.kind = GraphKind::kHasse;
  g.directed = directed;
  g.nodes = face_nodes(complex);
  const FaceNumbering number(complex);
  for (int k = 1; k <= complex.dimension(); ++k) {
    for (const auto& s : complex.faces(k)) {
      const NodeIndex from = number(s);
      for (std::size_t i = 0; i < s.size(); ++i) {
        const NodeIndex to = number(s.without_index(i));
        g.edges.emplace_back(directed ? from : std::min(from, to), directed ? to : std::max(from, to));
      }
    }
  }
  sort_edges(g.edges);
  return g;
}

RepresentationGraph incidence_graph(const SimplicialComplex& complex) {
  RepresentationGraph g;
  g.kind = GraphKind::kIncidence;
  g.nodes = face_nodes(complex);
  const FaceNumbering number(complex);
  for (int k = 1; k <= complex.dimension(); ++k) {
    for (const auto& s : complex.faces(k)) {
      const NodeIndex face = number(s);
      for (Vertex v : s) g.edges.emplace_back(static_cast<NodeIndex>(v), face);
    }
  }
  sort_edges(g.edges);
  return g;
}

}  // namespace topomani
