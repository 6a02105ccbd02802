#pragma once

#include "spherecheck/triangulation.hpp"

#include <random>
#include <string>

namespace fixtures {

using spherecheck::Triangulation;

// One-vertex, one-tetrahedron three-sphere: faces 1,2 glued together, faces 0,3 glued together.
inline const char* kOneTetSphere =
    "tri 1\n"
    "tet T\n"
    "glue T 0 T 3 3012\n"
    "glue T 1 T 2 0213\n";

inline Triangulation one_tet_sphere() { return Triangulation::parse(kOneTetSphere); }

inline Triangulation single_tet() { return Triangulation::parse("tri 1\ntet A\n"); }

inline Triangulation lens_4_1() {
    return Triangulation::parse("tri 1\ntet A\nglue A 0 A 1 1230\nglue A 2 A 3 1230\n");
}

inline Triangulation lens_5_2() {
    return Triangulation::parse("tri 1\ntet A\nglue A 0 A 1 1230\nglue A 2 A 3 2031\n");
}

// Boundary of the 4-simplex: tetrahedron Fk omits vertex k of {0..4}.
Triangulation simplex_boundary();

// Disjoint union with the tetrahedra of b renamed by a suffix.
Triangulation disjoint_union(const Triangulation& a, const Triangulation& b, const std::string& suffix);

// Rename every tetrahedron by applying a fixed prefix.
Triangulation renamed(const Triangulation& t, const std::string& prefix);

// Relabel the vertices of each tetrahedron by a random permutation (odd gluings are preserved).
Triangulation random_relabel(const Triangulation& t, std::mt19937& rng);

// Random closed triangulation with n tetrahedra (not necessarily a manifold).
Triangulation random_closed(int n, std::mt19937& rng);

}  // namespace fixtures
