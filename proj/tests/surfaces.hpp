#pragma once
// Hand-built surfaces and small admissible samples shared by several test files.

#include "spherecheck/normal.hpp"
#include "spherecheck/triangulation.hpp"

#include <random>
#include <utility>
#include <vector>

namespace testsurf {

using spherecheck::SurfaceVector;
using spherecheck::Triangulation;

// Two triangles and an octagon of type 3 in the one-tetrahedron sphere.
SurfaceVector octagon_sphere();

// Two copies of the vertex link of the one-tetrahedron sphere, tubed along edge 01.
SurfaceVector tubed_links();

// Every admissible vector with small coordinates on small closed manifolds, plus octagon and
// annulus variants; `count` of them sampled with rng.
std::vector<std::pair<Triangulation, SurfaceVector>> small_admissible(std::mt19937& rng, size_t count);

}  // namespace testsurf
