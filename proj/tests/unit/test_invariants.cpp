#include <doctest.h>

#include <map>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "topomani/error.hpp"
#include "topomani/invariants.hpp"

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

long alternating(const std::vector<std::size_t>& v) {
  long sum = 0;
  for (std::size_t k = 0; k < v.size(); ++k) sum += (k % 2 ? -1 : 1) * static_cast<long>(v[k]);
  return sum;
}

SimplicialComplex disjoint_spheres() {
  return SimplicialComplex::from_top_faces(
      FaceList{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}}, 2);
}

}  // namespace

TEST_CASE("f-vectors and Euler characteristics of the seeds") {
  CHECK(sphere2().f_vector() == FVector{{4, 6, 4}});
  CHECK(sphere3().f_vector() == FVector{{5, 10, 10, 5}});
  CHECK(rp2_6().f_vector() == FVector{{6, 15, 10}});
  CHECK(torus7().f_vector() == FVector{{7, 21, 14}});
  CHECK(euler_characteristic(sphere2()) == 2);
  CHECK(euler_characteristic(sphere3()) == 0);
  CHECK(euler_characteristic(torus7()) == 0);
  CHECK(euler_characteristic(rp2_6()) == 1);
}

TEST_CASE("links") {
  const auto s2 = sphere2();
  for (Vertex v = 0; v < 4; ++v) {
    const auto lk = link(s2, Simplex{v});
    CHECK(lk.f_vector() == FVector{{3, 3}});
    CHECK(is_cycle(lk));
  }
  const auto s3 = sphere3();
  for (Vertex v = 0; v < 5; ++v) CHECK(link(s3, Simplex{v}).f_vector() == FVector{{4, 6, 4}});

  const auto edge_link = link(s2, Simplex{0, 1});
  CHECK(edge_link.f_vector() == FVector{{2}});
  CHECK(link_faces(s2, Simplex{0, 1}) == std::vector<Simplex>{Simplex{2}, Simplex{3}});
  CHECK(link(s2, Simplex{0, 1, 2}).empty());
  CHECK(code_of([&] { link(s2, Simplex{0, 9}); }) == ErrorCode::kFaceNotPresent);
}

TEST_CASE("combinatorial manifold recognition") {
  for (const auto& c : seed_complexes()) CHECK(is_combinatorial_manifold(c));
  CHECK_FALSE(is_combinatorial_manifold(disjoint_spheres()));
  CHECK_FALSE(is_combinatorial_manifold(SimplicialComplex::from_top_faces(FaceList{{1, 2, 3}, {1, 2, 4}}, 2)));
  // Two tetrahedron boundaries sharing a vertex: pinched, link of the shared
  // vertex is two circles.
  const auto pinched = SimplicialComplex::from_top_faces(
      FaceList{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}}, 2);
  CHECK_FALSE(is_combinatorial_manifold(pinched));
  const auto path = SimplicialComplex::from_top_faces(FaceList{{0, 1}, {1, 2}}, 1);
  CHECK(code_of([&] { is_combinatorial_manifold(path); }) == ErrorCode::kUnsupportedDimension);
}

TEST_CASE("orientability agrees with the brute-force oracle") {
  CHECK(brute_force_orientable(sphere2()));
  CHECK(brute_force_orientable(torus7()));
  CHECK_FALSE(brute_force_orientable(rp2_6()));
  CHECK(brute_force_orientable(sphere3()));

  CHECK(is_orientable(sphere2()));
  CHECK(is_orientable(torus7()));
  CHECK_FALSE(is_orientable(rp2_6()));
  CHECK(is_orientable(sphere3()));
  CHECK(code_of([] { is_orientable(disjoint_spheres()); }) == ErrorCode::kNotAManifold);

  Rng rng(3);
  for (const auto& c : random_walk_pool(rng, 30, 9, 4)) {
    if (c.facets().size() > 16) continue;
    CHECK(is_orientable(c) == brute_force_orientable(c));
  }
}

TEST_CASE("GF(2) Betti numbers") {
  // Frozen from dense_betti_gf2.
  CHECK(dense_betti_gf2(sphere2()) == std::vector<std::size_t>{1, 0, 1});
  CHECK(dense_betti_gf2(rp2_6()) == std::vector<std::size_t>{1, 1, 1});
  CHECK(dense_betti_gf2(sphere3()) == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK(dense_betti_gf2(torus7()) == std::vector<std::size_t>{1, 2, 1});

  CHECK(betti_gf2(sphere2()) == std::vector<std::size_t>{1, 0, 1});
  CHECK(betti_gf2(rp2_6()) == std::vector<std::size_t>{1, 1, 1});
  CHECK(betti_gf2(sphere3()) == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK(betti_gf2(torus7()) == std::vector<std::size_t>{1, 2, 1});
  CHECK(betti_gf2(disjoint_spheres()) == std::vector<std::size_t>{2, 0, 2});
}

TEST_CASE("Betti properties on random complexes") {
  Rng rng(17);
  for (const auto& c : random_walk_pool(rng, 60, 16, 10)) {
    const auto b = betti_gf2(c);
    CHECK(b == dense_betti_gf2(c));
    CHECK(alternating(b) == euler_characteristic(c));
    CHECK(b[0] == connected_components(c));
  }
}

TEST_CASE("surface classification") {
  CHECK(classify_surface(sphere2()) == surface_class(true, 0));
  CHECK(classify_surface(sphere2()).canonical_name == "S2");
  CHECK(classify_surface(torus7()).canonical_name == "T2#1");
  const auto rp2 = classify_surface(rp2_6());
  CHECK_FALSE(rp2.orientable);
  CHECK(rp2.genus_or_crosscaps == 1);
  CHECK(rp2.canonical_name == "RP2#1");
  CHECK(code_of([] { classify_surface(sphere3()); }) == ErrorCode::kUnsupportedDimension);
  CHECK(code_of([] { classify_surface(disjoint_spheres()); }) == ErrorCode::kNotAManifold);
}

TEST_CASE("classification is invariant under relabeling") {
  Rng rng(5);
  for (const auto& c : random_walk_pool(rng, 40, 14, 8)) {
    if (c.dimension() != 2) continue;
    CHECK(classify_surface(random_relabel(c, rng)) == classify_surface(c));
  }
}

TEST_CASE("surface names parse back") {
  for (const std::string name : {"S2", "T2#1", "T2#4", "RP2#1", "RP2#7"}) {
    const auto parsed = parse_surface_name(name);
    REQUIRE(parsed);
    CHECK(parsed->canonical_name == name);
  }
  CHECK_FALSE(parse_surface_name("T2#0"));
  CHECK_FALSE(parse_surface_name("RP2#"));
  CHECK_FALSE(parse_surface_name("K2"));
  CHECK(surface_class(false, 2).euler_characteristic() == 0);
  CHECK(surface_class(true, 3).euler_characteristic() == -4);
}

TEST_CASE("closed manifold identities") {
  Rng rng(23);
  for (const auto& c : random_walk_pool(rng, 60, 20, 12)) {
    const auto f = c.f_vector();
    std::map<Simplex, int> ridge_count;
    for (const auto& facet : c.facets()) {
      for (std::size_t i = 0; i < facet.size(); ++i) ++ridge_count[facet.without_index(i)];
    }
    for (const auto& [ridge, n] : ridge_count) CHECK(n == 2);
    if (c.dimension() == 2) {
      CHECK(3 * f[2] == 2 * f[1]);
    } else {
      CHECK(euler_characteristic(c) == 0);
    }
  }
}

TEST_CASE("summary bundles the invariants") {
  const auto s = summarize(rp2_6());
  CHECK(s.f_vector == FVector{{6, 15, 10}});
  CHECK(s.euler_characteristic == 1);
  CHECK_FALSE(s.orientable);
  CHECK(s.betti_gf2 == std::vector<std::size_t>{1, 1, 1});
}
