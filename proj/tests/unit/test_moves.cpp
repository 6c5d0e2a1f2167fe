#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "topomani/error.hpp"
#include "topomani/invariants.hpp"
#include "topomani/isomorphism.hpp"
#include "topomani/moves.hpp"

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

std::vector<long> fdiff(const SimplicialComplex& after, const SimplicialComplex& before) {
  std::vector<long> out;
  for (std::size_t k = 0; k < after.f_vector().counts.size(); ++k) {
    out.push_back(static_cast<long>(after.f_vector()[k]) - static_cast<long>(before.f_vector()[k]));
  }
  return out;
}

std::vector<long> expected_delta(MoveKind kind) {
  switch (kind) {
    case MoveKind::kM13: return {1, 3, 2};
    case MoveKind::kM31: return {-1, -3, -2};
    case MoveKind::kM22: return {0, 0, 0};
    case MoveKind::kM14: return {1, 4, 6, 3};
    case MoveKind::kM41: return {-1, -4, -6, -3};
    case MoveKind::kM23: return {0, 1, 2, 1};
    case MoveKind::kM32: return {0, -1, -2, -1};
  }
  return {};
}

}  // namespace

TEST_CASE("move names") {
  for (auto kind : {MoveKind::kM13, MoveKind::kM31, MoveKind::kM22, MoveKind::kM14, MoveKind::kM41,
                    MoveKind::kM23, MoveKind::kM32}) {
    CHECK(parse_move_kind(to_string(kind)) == kind);
  }
  CHECK_FALSE(parse_move_kind("M99").has_value());
  CHECK(is_growth_move(MoveKind::kM13));
  CHECK(is_growth_move(MoveKind::kM14));
  CHECK_FALSE(is_growth_move(MoveKind::kM22));
}

TEST_CASE("valid moves on the seeds") {
  const auto s2_moves = enumerate_valid_moves(sphere2());
  CHECK(s2_moves.size() == 4);
  for (const auto& m : s2_moves) CHECK(m.kind == MoveKind::kM13);

  const auto s3_moves = enumerate_valid_moves(sphere3());
  CHECK(s3_moves.size() == 5);
  for (const auto& m : s3_moves) CHECK(m.kind == MoveKind::kM14);

  for (const auto& m : enumerate_valid_moves(torus7())) CHECK(m.kind != MoveKind::kM31);
  CHECK(std::is_sorted(s2_moves.begin(), s2_moves.end()));

  const auto bad = SimplicialComplex::from_top_faces(FaceList{{0, 1, 2}, {0, 1, 3}}, 2);
  CHECK(code_of([&] { enumerate_valid_moves(bad); }) == ErrorCode::kNotAManifold);
}

TEST_CASE("moves on the tetrahedron boundary") {
  const auto s2 = sphere2();
  const auto grown = apply_pachner(s2, {MoveKind::kM13, Simplex{0, 1, 2}});
  CHECK(grown.f_vector() == FVector{{5, 9, 6}});
  CHECK(euler_characteristic(grown) == 2);
  CHECK(grown.contains(Simplex{0, 1, 4}));

  try {
    apply_pachner(s2, {MoveKind::kM22, Simplex{0, 1}});
    FAIL("expected InvalidMove");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidMove);
    CHECK(std::string(e.what()).find("{2,3}") != std::string::npos);
  }
  CHECK(check_move(s2, {MoveKind::kM31, Simplex{0}}).blocking_face == Simplex{1, 2, 3});
  CHECK(code_of([&] { apply_pachner(s2, {MoveKind::kM13, Simplex{0, 1, 7}}); }) ==
        ErrorCode::kFaceNotPresent);
  CHECK(code_of([&] { apply_pachner(s2, {MoveKind::kM14, Simplex{0, 1, 2}}); }) ==
        ErrorCode::kInvalidMove);
}

TEST_CASE("moves and their inverses") {
  const auto s2 = sphere2();
  const auto grown = apply_pachner(s2, {MoveKind::kM13, Simplex{1, 2, 3}});
  const auto back = apply_pachner(grown, {MoveKind::kM31, Simplex{4}});
  CHECK(are_isomorphic(back, s2));
  CHECK(brute_force_isomorphic(back, s2));

  // After one M13 the edge {1,2} sits in triangles {0,1,2} and {1,2,4}.
  const auto flipped = apply_pachner(grown, {MoveKind::kM22, Simplex{1, 2}});
  CHECK(flipped.contains(Simplex{0, 4}));
  CHECK_FALSE(flipped.contains(Simplex{1, 2}));
  CHECK(flipped.f_vector() == grown.f_vector());
  const auto unflipped = apply_pachner(flipped, {MoveKind::kM22, Simplex{0, 4}});
  CHECK(unflipped == grown);

  const auto s3 = sphere3();
  const auto g3 = apply_pachner(s3, {MoveKind::kM14, Simplex{0, 1, 2, 3}});
  CHECK(g3.f_vector() == FVector{{6, 14, 16, 8}});
  CHECK(are_isomorphic(apply_pachner(g3, {MoveKind::kM41, Simplex{5}}), s3));

  // {0,1,2} lies in {0,1,2,4} and {0,1,2,5}; {4,5} is new.
  const auto m23 = apply_pachner(g3, {MoveKind::kM23, Simplex{0, 1, 2}});
  CHECK(fdiff(m23, g3) == expected_delta(MoveKind::kM23));
  CHECK(m23.contains(Simplex{4, 5}));
  const auto m32 = apply_pachner(m23, {MoveKind::kM32, Simplex{4, 5}});
  CHECK(m32 == g3);
  CHECK(are_isomorphic(apply_pachner(m32, {MoveKind::kM41, Simplex{5}}), s3));
}

TEST_CASE("every valid move preserves invariants and matches its f-vector delta") {
  Rng rng(11);
  auto pool = random_walk_pool(rng, 30, 12);
  for (const auto& seed : seed_complexes()) pool.push_back(seed);
  std::size_t applied = 0;
  for (const auto& c : pool) {
    const auto chi = euler_characteristic(c);
    const auto orient = is_orientable(c);
    const auto betti = betti_gf2(c);
    for (const auto& m : enumerate_valid_moves(c)) {
      const auto next = apply_pachner(c, m);
      ++applied;
      CHECK(is_combinatorial_manifold(next));
      CHECK(euler_characteristic(next) == chi);
      CHECK(is_orientable(next) == orient);
      CHECK(betti_gf2(next) == betti);
      CHECK(fdiff(next, c) == expected_delta(m.kind));
    }
  }
  CHECK(applied > 200);
}

TEST_CASE("enumerated moves are exactly those that apply") {
  Rng rng(5);
  for (const auto& c : random_walk_pool(rng, 10, 10)) {
    const auto valid = enumerate_valid_moves(c);
    const auto d = c.dimension();
    std::vector<MoveKind> kinds = d == 2 ? std::vector{MoveKind::kM13, MoveKind::kM31, MoveKind::kM22}
                                         : std::vector{MoveKind::kM14, MoveKind::kM41, MoveKind::kM23,
                                                       MoveKind::kM32};
    std::size_t ok = 0;
    for (auto kind : kinds) {
      for (int k = 0; k <= d; ++k) {
        for (const auto& s : c.faces(k)) {
          bool applies = true;
          try {
            apply_pachner(c, {kind, s});
          } catch (const Error&) {
            applies = false;
          }
          if (applies) {
            ++ok;
            CHECK(std::binary_search(valid.begin(), valid.end(), MoveDescriptor{kind, s}));
          }
        }
      }
    }
    CHECK(ok == valid.size());
  }
}

TEST_CASE("random walks") {
  const auto s2 = sphere2();
  const auto still = random_pachner_walk(s2, 0, 24, 3);
  CHECK(still.complex == s2);
  CHECK(still.steps_taken == 0);

  const auto w = random_pachner_walk(s2, 50, 24, 7);
  CHECK(w.steps_taken == 50);
  CHECK(classify_surface(w.complex).canonical_name == "S2");

  const auto t = random_pachner_walk(torus7(), 100, 24, 1);
  CHECK(euler_characteristic(t.complex) == 0);
  CHECK(is_orientable(t.complex));
  CHECK(t.complex.vertex_count() <= 24);

  CHECK(random_pachner_walk(torus7(), 40, 24, 9).complex == random_pachner_walk(torus7(), 40, 24, 9).complex);

  // The cap binds: a long walk on a tight cap never grows past it.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto c = sphere2();
    for (int i = 0; i < 40; ++i) {
      c = random_pachner_walk(c, 1, 6, seed * 100 + static_cast<std::uint64_t>(i)).complex;
      CHECK(c.vertex_count() <= 6);
    }
  }
  const auto three = random_pachner_walk(sphere3(), 60, 9, 4);
  CHECK(three.complex.vertex_count() <= 9);
  CHECK(is_combinatorial_manifold(three.complex));

  CHECK(code_of([&] { random_pachner_walk(torus7(), 1, 6, 0); }) == ErrorCode::kInvalidParameter);
}

TEST_CASE("a capped tetrahedron boundary has no move left") {
  // At 4 vertices with cap 4 only growth moves exist, so the walk stops at once.
  const auto w = random_pachner_walk(sphere2(), 10, 4, 1);
  CHECK(w.steps_taken == 0);
  CHECK(w.complex == sphere2());
}
