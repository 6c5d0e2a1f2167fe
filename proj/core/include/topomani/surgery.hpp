#pragma once

#include <cstdint>

#include "topomani/complex.hpp"

namespace topomani {

// Connected sum of two closed surfaces: removes triangle t1 from m1 and t2
// from m2, identifies the vertices of t2 with those of t1 in sorted order and
// renumbers the rest of m2 with fresh ids.
SimplicialComplex connected_sum(const SimplicialComplex& m1, const SimplicialComplex& m2,
                                const Simplex& t1, const Simplex& t2);

// Sphere with `count` handles (orientable) or `count` crosscaps, assembled by
// iterated connected sums of the minimal torus / projective plane onto the
// boundary of the tetrahedron. Gluing triangles are drawn from `seed`.
SimplicialComplex build_surface(bool orientable, int count, std::uint64_t seed);

}  // namespace topomani
