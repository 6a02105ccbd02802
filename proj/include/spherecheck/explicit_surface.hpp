#pragma once

#include "spherecheck/normal.hpp"
#include "spherecheck/skeleton.hpp"
#include "spherecheck/triangulation.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace spherecheck {

struct NonSeparatingSurface : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Positional realization of a surface: ordered points on each edge class and
// arcs in each face class joining (face, side, point) nodes. A side of a face
// class is named by the opposite vertex in the representative slot's labels.
class ExplicitSurface {
public:
    static constexpr size_t kDefaultMaxPoints = 2'000'000;

    struct Node {
        int face, side, point;
        bool operator==(const Node&) const = default;
    };
    struct Arc {
        Node a, b;
        int comp;  // face-region component for the catalogue check
        bool alive = true;
        bool original = true;
    };
    // One arc of a curve on the boundary of a tetrahedron, in that tetrahedron's labels.
    struct SlotArc {
        int face, in_side, out_side, in_point, out_point, arc;
    };
    struct TetCurve {
        int tet;
        std::vector<SlotArc> arcs;
    };
    struct SimpleCurve {
        int face, comp;
    };

    // Throws SurfaceTooLarge when the realization would exceed max_points points.
    ExplicitSurface(const Triangulation& t, const SurfaceVector& v, size_t max_points = kDefaultMaxPoints);

    const Triangulation& triangulation() const { return tri_; }
    const Skeleton& skeleton() const { return skel_; }
    const SurfaceVector& source() const { return src_; }
    int almost_tet() const { return atet_; }

    // Alive points on edge class e, ordered from its tail.
    const std::vector<int>& edge_points(int e) const { return order_[e]; }
    int point_edge(int p) const { return point_edge_[p]; }
    int point_position(int p) const { return pos_[p]; }
    bool point_alive(int p) const { return pos_[p] >= 0; }
    long live_points() const;
    // Point of tetrahedron edge `edge` at position k counted from tetrahedron vertex `from`.
    int point_at(int tet, int edge, int from, long k) const;

    const std::vector<Arc>& arcs() const { return arcs_; }
    long live_arcs() const;
    int arc_at(const Node& n) const;
    const std::vector<std::pair<int, int>>& occurrences(int e) const { return occ_[e]; }
    int side_edge(int face, int side) const { return side_edge_[face][side]; }

    // Curves on the boundary of each tetrahedron, traced through arcs and corners.
    std::vector<TetCurve> trace() const;
    static NormalCurve as_normal_curve(const TetCurve& c, bool& bent);

    // Side labels: parity of crossings along the 1-skeleton from a base vertex.
    // Throws NonSeparatingSurface when the parities are inconsistent.
    void compute_labels();
    int vertex_label(int v) const { return vlabel_[v]; }
    int label_after(int p) const { return after_[p]; }
    int label_before_first(int e) const { return vlabel_[skel_.edges()[e].tail]; }

    struct MergeStats {
        int new_arcs = 0;
        int simple_curves = 0;
        int removed_points = 0;
    };
    // Pushes the surface across each segment (p, q) of consecutive points: both points
    // vanish and the arcs meeting them are joined in every face around the edge. Closed
    // loops that result are simple curves; they are kept when `keep_simple` is set.
    MergeStats merge_segments(const std::vector<std::pair<int, int>>& segments, bool keep_simple);
    const std::vector<SimpleCurve>& simple_curves() const { return simple_; }
    void clear_simple_curves() { simple_.clear(); }

    // Components of the face regions swept so far must match the catalogue: at most three
    // surface arcs, at most one remaining feature, and lone regions still hold a normal arc.
    int catalogue_violations();

private:
    static std::uint64_t key(int face, int side, int point) {
        return (static_cast<std::uint64_t>(face * 4 + side) << 32) | static_cast<std::uint32_t>(point);
    }
    int new_arc(const Node& a, const Node& b, int comp, bool original);
    int comp_find(int c);

    Triangulation tri_;
    Skeleton skel_;
    SurfaceVector src_;
    int atet_ = -1;
    std::vector<std::vector<int>> order_;
    std::vector<int> point_edge_, pos_;
    std::vector<std::vector<std::pair<int, int>>> occ_;  // edge class -> (face class, side)
    std::vector<std::array<int, 4>> side_edge_;           // face class, side -> edge class
    std::vector<Arc> arcs_;
    std::unordered_map<std::uint64_t, int> node_arc_;
    std::vector<SimpleCurve> simple_;
    std::vector<int> comp_parent_, comp_weight_;
    std::vector<int> vlabel_, after_;
};

}  // namespace spherecheck
