#pragma once

#include "spherecheck/integer.hpp"
#include "spherecheck/normal.hpp"
#include "spherecheck/triangulation.hpp"

#include <array>
#include <optional>
#include <vector>

namespace spherecheck {

// {x >= 0 : equations * x = 0}. Coordinates in one quad group may not be nonzero together.
struct SolutionCone {
    int dim = 0;
    std::vector<std::vector<Integer>> equations;
    std::vector<std::array<int, 3>> quad_groups;
};

struct VertexSolution {
    std::vector<Integer> ray;
    bool admissible = true;
};

// Matching equations in standard coordinates (7 per tetrahedron).
SolutionCone normal_cone(const Triangulation& t);
// Standard coordinates plus a final octagon coefficient for an octagon of `type` in `tet`;
// the quads of `tet` are forced to zero.
SolutionCone octagon_cone(const Triangulation& t, int tet, int type);

bool satisfies(const SolutionCone& cone, const std::vector<Integer>& x);
bool is_admissible_ray(const SolutionCone& cone, const std::vector<Integer>& x);

// Extremal rays by double description in exact arithmetic, primitive and sorted.
// With `admissible_only`, rays violating a quad group are discarded during the
// construction, which yields exactly the admissible extremal rays.
std::vector<VertexSolution> vertex_solutions(const SolutionCone& cone, bool admissible_only = false);

// Admissible vertex solutions of the normal cone as surface vectors.
std::vector<SurfaceVector> normal_vertex_surfaces(const Triangulation& t);
// Octagon vertex solutions with octagon coefficient one, over every tetrahedron and type.
std::vector<SurfaceVector> octagon_vertex_surfaces(const Triangulation& t);

// Connected non-vertex-linking normal spheres among vertex solutions, or failing that among
// pairwise sums; sorted by weight then canonical order.
std::vector<SurfaceVector> normal_sphere_candidates(const Triangulation& t);
std::optional<SurfaceVector> find_nontrivial_normal_sphere(const Triangulation& t);

// Connected almost normal spheres: octagon vertex solutions, octagon plus normal vertex sums,
// and annuli tubing two parallel disks of a normal surface of euler characteristic 4.
std::vector<SurfaceVector> almost_sphere_candidates(const Triangulation& t);
std::optional<SurfaceVector> find_almost_normal_sphere(const Triangulation& t);

}  // namespace spherecheck
