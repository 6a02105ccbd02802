#pragma once

#include "spherecheck/normal.hpp"
#include "spherecheck/triangulation.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace spherecheck {

struct CrushObstructed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tetrahedron name -> quad type 1..3, or 0 to keep the tetrahedron.
using Polarization = std::map<std::string, int>;

// Deletes `tet`, identifying each face s with face theta(s), theta = (0a)(bc), by the
// reflection swapping s and theta(s). Gluings that run through the deleted tetrahedron
// are followed until they leave it.
Triangulation crush_quad(const Triangulation& t, const std::string& tet, int a);

// Quad type of v in each tetrahedron (0 where there is none). v must be a connected
// normal sphere that is not a vertex link.
Polarization polarization_of(const Triangulation& t, const SurfaceVector& v);

// Crushes every tetrahedron with a nonzero entry, in name order.
Triangulation crush_polarization(const Triangulation& t, const Polarization& p);

}  // namespace spherecheck
