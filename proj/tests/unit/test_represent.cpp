#include <doctest.h>

#include <cmath>
#include <set>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "topomani/error.hpp"
#include "topomani/graph.hpp"
#include "topomani/represent.hpp"

using namespace topomani;
using namespace topomani::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

RepresentationGraph plain_graph(std::size_t n, std::vector<GraphEdge> edges) {
  RepresentationGraph g;
  for (std::size_t i = 0; i < n; ++i) g.nodes.push_back({Simplex{static_cast<Vertex>(i)}, NodeRole::kVertex});
  g.edges = std::move(edges);
  return g;
}

RepresentationGraph complete_graph(std::size_t n) {
  std::vector<GraphEdge> edges;
  for (NodeIndex a = 0; a < n; ++a) {
    for (NodeIndex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return plain_graph(n, std::move(edges));
}

void check_well_formed(const RepresentationGraph& g) {
  std::set<GraphEdge> seen;
  for (const auto& [a, b] : g.edges) {
    CHECK(a != b);
    CHECK(a < g.node_count());
    CHECK(b < g.node_count());
    const GraphEdge key = g.directed ? GraphEdge{a, b} : GraphEdge{std::min(a, b), std::max(a, b)};
    CHECK(seen.insert(key).second);
  }
  for (std::size_t i = 1; i < g.node_count(); ++i) CHECK(g.nodes[i - 1].simplex < g.nodes[i].simplex);
}

std::size_t hasse_edge_count(const SimplicialComplex& c) {
  std::size_t edges = 0;
  for (int k = 1; k <= c.dimension(); ++k) edges += static_cast<std::size_t>(k + 1) * c.face_count(k);
  return edges;
}

}  // namespace

TEST_CASE("skeleton graphs") {
  const auto k4 = skeleton_graph(sphere2());
  CHECK(k4.node_count() == 4);
  CHECK(k4.edges.size() == 6);
  CHECK(skeleton_graph(torus7()).edges.size() == 21);
  CHECK(skeleton_graph(sphere3()).edges.size() == 10);
  check_well_formed(k4);
}

TEST_CASE("dual graphs") {
  const auto d = dual_graph(sphere2());
  CHECK(d.node_count() == 4);
  CHECK(d.edges.size() == 6);
  const auto d3 = dual_graph(sphere3());
  CHECK(d3.node_count() == 5);
  CHECK(d3.edges.size() == 10);
  for (auto role : {d.nodes[0].role, d3.nodes[0].role}) CHECK(role == NodeRole::kFacet);

  Rng rng(3);
  for (const auto& c : random_walk_pool(rng, 20, 14)) {
    const auto g = dual_graph(c);
    check_well_formed(g);
    for (auto deg : g.degrees()) CHECK(deg == static_cast<std::size_t>(c.dimension() + 1));
  }
  const auto open = SimplicialComplex::from_top_faces(FaceList{{0, 1, 2}}, 2);
  CHECK(code_of([&] { dual_graph(open); }) == ErrorCode::kNotAManifold);
}

TEST_CASE("Hasse diagrams") {
  const auto h = hasse_diagram(sphere2());
  CHECK(h.node_count() == 14);
  CHECK(h.edges.size() == 24);
  const auto tri = SimplicialComplex::from_top_faces(FaceList{{0, 1, 2}}, 2);
  CHECK(hasse_diagram(tri).node_count() == 7);
  CHECK(hasse_diagram(tri).edges.size() == 9);
  const auto h3 = hasse_diagram(sphere3());
  CHECK(h3.node_count() == 30);
  CHECK(h3.edges.size() == 70);

  const auto directed = hasse_diagram(sphere2(), true);
  CHECK(directed.directed);
  for (const auto& [a, b] : directed.edges) {
    CHECK(directed.nodes[a].dimension() == directed.nodes[b].dimension() + 1);
    CHECK(directed.nodes[a].simplex.contains(directed.nodes[b].simplex));
  }

  Rng rng(9);
  for (const auto& c : random_walk_pool(rng, 15, 12)) {
    const auto g = hasse_diagram(c);
    check_well_formed(g);
    CHECK(g.node_count() == c.total_face_count());
    CHECK(g.edges.size() == hasse_edge_count(c));
    for (auto deg : g.degrees()) CHECK(deg >= 1);
    for (auto deg : skeleton_graph(c).degrees()) CHECK(deg >= 1);
  }
}

TEST_CASE("incidence graphs") {
  const auto g = incidence_graph(sphere2());
  CHECK(g.node_count() == 14);
  CHECK(g.edges.size() == 24);
  const auto tri = incidence_graph(SimplicialComplex::from_top_faces(FaceList{{1, 2, 3}}, 2));
  CHECK(tri.node_count() == 7);
  CHECK(tri.edges.size() == 9);
  std::set<std::pair<NodeRole, int>> classes;
  for (const auto& n : g.nodes) classes.insert({n.role, n.dimension()});
  CHECK(classes.size() == 3);
}

TEST_CASE("random features") {
  const auto g = hasse_diagram(torus7());
  const auto r = encode_random(g, kDefaultRandomFeatureDim, 5);
  CHECK(r.rows == g.node_count());
  CHECK(r.cols == 8);
  for (double x : r.values) {
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
  }
  CHECK(encode_random(g, 8, 5).values == r.values);
  CHECK(encode_random(g, 8, 6).values != r.values);
  CHECK(code_of([&] { encode_random(g, 0, 1); }) == ErrorCode::kInvalidParameter);
}

TEST_CASE("degree features") {
  const auto k4 = encode_degree(skeleton_graph(sphere2()));
  CHECK(k4.cols == 1);
  for (double x : k4.values) CHECK(x == 3.0);
  const auto h = hasse_diagram(sphere2(), true);
  const auto hd = encode_degree(h);
  for (std::size_t i = 0; i < h.node_count(); ++i) {
    if (h.nodes[i].role == NodeRole::kVertex) CHECK(hd.at(i, 0) == 3.0);
  }
}

TEST_CASE("random walk positional encoding") {
  const auto k3 = encode_rwpe(complete_graph(3), 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(k3.row(i) == std::vector<double>{0.0, 0.5, 0.25});
  }
  const auto k4 = encode_rwpe(complete_graph(4), 1);
  for (double x : k4.values) CHECK(x == 0.0);
  const auto p2 = encode_rwpe(plain_graph(2, {{0, 1}}), 2);
  CHECK(p2.row(0) == std::vector<double>{0.0, 1.0});
  CHECK(p2.row(1) == std::vector<double>{0.0, 1.0});

  CHECK(code_of([] { encode_rwpe(plain_graph(3, {{0, 1}}), 2); }) == ErrorCode::kIsolatedNode);
  CHECK(code_of([] { encode_rwpe(complete_graph(3), 0); }) == ErrorCode::kInvalidParameter);

  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + uniform_index(rng, 60);
    const auto g = random_connected_graph(rng, n, uniform_index(rng, 2 * n));
    const auto fast = encode_rwpe(g, 8);
    const auto dense = dense_rwpe(g, 8);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t s = 0; s < 8; ++s) {
        CHECK(std::abs(fast.at(i, s) - dense[i][s]) <= 1e-10);
        CHECK(fast.at(i, s) >= 0.0);
        CHECK(fast.at(i, s) <= 1.0);
      }
    }
  }
  // Direction is ignored.
  CHECK(encode_rwpe(hasse_diagram(sphere2(), true)).values == encode_rwpe(hasse_diagram(sphere2())).values);
}

TEST_CASE("moment curve features") {
  const auto g = plain_graph(5, {});
  const auto mc = encode_moment_curve(g, 2);
  CHECK(mc.cols == 5);
  CHECK(mc.row(2) == std::vector<double>{0.5, 0.25, 0.125, 0.0625, 0.03125});
  for (double x : mc.row(0)) CHECK(x == 0.0);
  for (double x : mc.row(4)) CHECK(x == 1.0);
  for (std::size_t i = 1; i + 1 < 5; ++i) {
    for (std::size_t c = 1; c < mc.cols; ++c) CHECK(mc.at(i, c) < mc.at(i, c - 1));
  }
  CHECK(encode_moment_curve(g, 3).cols == 7);
  CHECK(code_of([] { encode_moment_curve(plain_graph(1, {}), 2); }) == ErrorCode::kInvalidParameter);
  CHECK(code_of([&] { encode_moment_curve(g, 4); }) == ErrorCode::kInvalidParameter);
}

TEST_CASE("encoding names") {
  for (auto kind : {EncodingKind::kRandom, EncodingKind::kDegree, EncodingKind::kRwpe, EncodingKind::kMomentCurve}) {
    CHECK(parse_encoding_kind(to_string(kind)) == kind);
  }
  CHECK(to_string(EncodingKind::kMomentCurve) == "mc");
  CHECK_FALSE(parse_encoding_kind("lap").has_value());
}
