#pragma once

#include "spherecheck/integer.hpp"
#include "spherecheck/skeleton.hpp"
#include "spherecheck/triangulation.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spherecheck {

// Disk types per tetrahedron: 0..3 triangle cutting off vertex t, 4..6 quad of type 1..3.
inline constexpr int kDiskTypes = 7;
inline constexpr int quad_disk(int a) { return 3 + a; }
inline constexpr bool is_quad_disk(int d) { return d >= 4; }

// Partner of x under the quad partition {0,a} | {b,c}.
int quad_partner(int a, int x);
// Vertex cut off by disk type d in face f, or -1 when d misses the face.
int disk_arc(int d, int f);
// Number of times disk type d crosses tetrahedron edge e (0 or 1).
int disk_crossings(int d, int e);
// Octagon of type a: crossings of edge e (1 or 2) and the two arcs in face f.
int octagon_crossings(int a, int e);
std::array<int, 2> octagon_arcs(int a, int f);

enum class AlmostKind { Octagon, Annulus };

struct DiskRef {
    int type = 0;
    Integer index;
    bool operator==(const DiskRef&) const = default;
};

struct AlmostPiece {
    AlmostKind kind = AlmostKind::Octagon;
    std::string tet;
    int octagon_type = 0;  // 1..3
    DiskRef disk1, disk2;  // annulus: tubed copies, disk1 nearer the tube edge's low endpoint
    int tube_edge = -1;    // annulus: tetrahedron edge 0..5
    bool operator==(const AlmostPiece&) const = default;
};

struct SurfaceVector {
    std::vector<Integer> coords;
    std::optional<AlmostPiece> almost;

    SurfaceVector() = default;
    explicit SurfaceVector(int tets) : coords(static_cast<size_t>(7) * tets) {}

    int tets() const { return static_cast<int>(coords.size() / 7); }
    Integer& at(int tet, int type) { return coords[static_cast<size_t>(7) * tet + type]; }
    const Integer& at(int tet, int type) const { return coords[static_cast<size_t>(7) * tet + type]; }
    bool is_zero() const;
    bool operator==(const SurfaceVector&) const = default;
};

// Canonical total order: coordinates lexicographically, then the almost piece.
int compare(const SurfaceVector& a, const SurfaceVector& b);
std::string format_coords(const SurfaceVector& v);
std::string format_almost(const AlmostPiece& p);

struct AdmissibilityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Throws std::invalid_argument on a dimension mismatch.
AdmissibilityReport check_admissible(const Triangulation& t, const SurfaceVector& v);

// Arcs of type `vertex` in face `face` of `tet` (including the octagon's contribution).
Integer arc_count(const SurfaceVector& v, int tet, int face, int vertex, int almost_tet);
// Crossings of tetrahedron edge e of `tet` (including the octagon's contribution).
Integer edge_crossings(const SurfaceVector& v, int tet, int edge, int almost_tet);
// Position of a disk copy along tetrahedron edge `edge`, counted from its low endpoint:
// triangles at the low end, then the crossing quads, then triangles at the high end.
// Empty if the copy does not exist or misses the edge.
std::optional<Integer> disk_edge_position(const SurfaceVector& v, int tet, const DiskRef& d, int edge);
// Index of the tetrahedron carrying the almost piece, or -1.
int almost_tet_index(const Triangulation& t, const SurfaceVector& v);

struct WeightEuler {
    Integer weight;
    Integer euler;
};

// Throws std::invalid_argument for inadmissible input.
WeightEuler weight_euler(const Triangulation& t, const SurfaceVector& v);

SurfaceVector vertex_link_vector(const Triangulation& t, const Skeleton& s, int vertex_class);
std::optional<int> is_vertex_link(const Triangulation& t, const SurfaceVector& v);
// Multiplicity of each vertex class when v is a sum of vertex links.
std::optional<std::map<int, Integer>> vertex_link_multiplicities(const Triangulation& t, const SurfaceVector& v);

SurfaceVector haken_sum(const Triangulation& t, const SurfaceVector& f, const SurfaceVector& g);

// A normal arc in face `face` of the model tetrahedron cutting off `vertex`.
struct NormalArc {
    int face;
    int vertex;
    bool operator==(const NormalArc&) const = default;
};

using NormalCurve = std::vector<NormalArc>;

enum class CurveKind { Triangle, Quad, Octagon, Long };

struct CurveClass {
    CurveKind kind;
    int type;  // triangle vertex, quad or octagon type; 0 for long curves
    std::array<int, 6> edge_counts;
};

struct NormalCurveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

CurveClass classify_normal_curve(const NormalCurve& c);

struct SurfaceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Component {
    SurfaceVector surface;
    Integer multiplicity;
};

// Explicit reconstruction; components sorted canonically.
std::vector<Component> decompose_components(const Triangulation& t, const SurfaceVector& v);

// Convenience: admissible, one component of multiplicity one, euler 2.
bool is_connected_sphere(const Triangulation& t, const SurfaceVector& v);

}  // namespace spherecheck
