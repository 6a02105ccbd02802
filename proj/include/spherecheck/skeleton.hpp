#pragma once

#include "spherecheck/triangulation.hpp"

#include <array>
#include <optional>
#include <vector>

namespace spherecheck {

// Edge e of a tetrahedron joins kEdgeVertices[e][0] < kEdgeVertices[e][1].
inline constexpr int kEdgeVertices[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
int edge_index(int a, int b);

struct EdgeSlot {
    int tet;
    int edge;
    int sign;  // +1 when the slot's low-to-high direction agrees with the class representative
};

struct EdgeClass {
    std::vector<EdgeSlot> slots;   // slots[0] is the representative
    bool reversed_self = false;    // identified with itself in reverse
    bool boundary = false;
    int tail = -1, head = -1;      // vertex classes at the representative's low and high ends
    int valency() const { return static_cast<int>(slots.size()); }
};

struct FaceClass {
    int tet, face;                 // representative slot
    std::optional<Gluing> other;   // second slot, perm maps representative labels to it
};

enum class LinkKind { Sphere, Disk, Other };

struct VertexLinkSummary {
    long euler = 0;
    int boundary_components = 0;
    LinkKind kind = LinkKind::Other;
};

struct VertexClass {
    std::vector<std::pair<int, int>> slots;  // (tet, vertex)
    VertexLinkSummary link;
};

class Skeleton {
public:
    explicit Skeleton(const Triangulation& t);

    const std::vector<EdgeClass>& edges() const { return edges_; }
    const std::vector<FaceClass>& faces() const { return faces_; }
    const std::vector<VertexClass>& vertices() const { return vertices_; }

    int edge_of(int tet, int edge) const { return edge_of_[tet][edge]; }
    int edge_sign(int tet, int edge) const { return edge_sign_[tet][edge]; }
    int face_of(int tet, int face) const { return face_of_[tet][face]; }
    int vertex_of(int tet, int v) const { return vertex_of_[tet][v]; }

private:
    std::vector<EdgeClass> edges_;
    std::vector<FaceClass> faces_;
    std::vector<VertexClass> vertices_;
    std::vector<std::array<int, 6>> edge_of_, edge_sign_;
    std::vector<std::array<int, 4>> face_of_, vertex_of_;
};

// Every vertex link a sphere or disk and no edge identified with itself in reverse.
// The empty triangulation qualifies.
bool is_three_manifold(const Triangulation& t);
bool is_three_manifold(const Skeleton& s);

}  // namespace spherecheck
