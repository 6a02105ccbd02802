#include "spherecheck/normal.hpp"

#include <sstream>

namespace spherecheck {

int quad_partner(int a, int x) {
    if (x == 0) return a;
    if (x == a) return 0;
    return 6 - a - x;
}

int disk_arc(int d, int f) {
    if (d < 4) return d == f ? -1 : d;
    return quad_partner(d - 3, f);
}

int disk_crossings(int d, int e) {
    int i = kEdgeVertices[e][0], j = kEdgeVertices[e][1];
    if (d < 4) return (i == d || j == d) ? 1 : 0;
    return quad_partner(d - 3, i) == j ? 0 : 1;
}

int octagon_crossings(int a, int e) {
    int i = kEdgeVertices[e][0], j = kEdgeVertices[e][1];
    return quad_partner(a, i) == j ? 2 : 1;
}

std::array<int, 2> octagon_arcs(int a, int f) {
    std::array<int, 2> out{};
    int k = 0, skip = quad_partner(a, f);
    for (int x = 0; x < 4; ++x)
        if (x != f && x != skip) out[k++] = x;
    return out;
}

bool SurfaceVector::is_zero() const {
    if (almost) return false;
    for (const auto& c : coords)
        if (sgn(c) != 0) return false;
    return true;
}

namespace {

int compare_disk(const DiskRef& a, const DiskRef& b) {
    if (a.type != b.type) return a.type < b.type ? -1 : 1;
    int c = cmp(a.index, b.index);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string disk_token(const DiskRef& d) {
    std::string s = d.type < 4 ? "t" + std::to_string(d.type) : "q" + std::to_string(d.type - 3);
    return s + ":" + d.index.get_str();
}

}  // namespace

int compare(const SurfaceVector& a, const SurfaceVector& b) {
    if (int c = compare_vectors(a.coords, b.coords)) return c;
    if (a.almost.has_value() != b.almost.has_value()) return a.almost ? 1 : -1;
    if (!a.almost) return 0;
    const auto &x = *a.almost, &y = *b.almost;
    if (x.kind != y.kind) return x.kind == AlmostKind::Octagon ? -1 : 1;
    if (x.tet != y.tet) return x.tet < y.tet ? -1 : 1;
    if (x.octagon_type != y.octagon_type) return x.octagon_type < y.octagon_type ? -1 : 1;
    if (int c = compare_disk(x.disk1, y.disk1)) return c;
    if (int c = compare_disk(x.disk2, y.disk2)) return c;
    if (x.tube_edge != y.tube_edge) return x.tube_edge < y.tube_edge ? -1 : 1;
    return 0;
}

std::string format_coords(const SurfaceVector& v) {
    std::string s;
    for (size_t i = 0; i < v.coords.size(); ++i) {
        if (i) s += ' ';
        s += v.coords[i].get_str();
    }
    return s;
}

std::string format_almost(const AlmostPiece& p) {
    if (p.kind == AlmostKind::Octagon) return "octagon " + p.tet + " " + std::to_string(p.octagon_type);
    std::string e;
    if (p.tube_edge >= 0 && p.tube_edge < 6)
        e = std::to_string(kEdgeVertices[p.tube_edge][0]) + std::to_string(kEdgeVertices[p.tube_edge][1]);
    return "annulus " + p.tet + " " + disk_token(p.disk1) + " " + disk_token(p.disk2) + " " + e;
}

int almost_tet_index(const Triangulation& t, const SurfaceVector& v) {
    if (!v.almost) return -1;
    return t.index_of(v.almost->tet);
}

Integer arc_count(const SurfaceVector& v, int tet, int face, int vertex, int almost_tet) {
    Integer total = 0;
    for (int d = 0; d < kDiskTypes; ++d)
        if (disk_arc(d, face) == vertex) total += v.at(tet, d);
    if (tet == almost_tet && v.almost && v.almost->kind == AlmostKind::Octagon) {
        auto arcs = octagon_arcs(v.almost->octagon_type, face);
        if (arcs[0] == vertex || arcs[1] == vertex) total += 1;
    }
    return total;
}

Integer edge_crossings(const SurfaceVector& v, int tet, int edge, int almost_tet) {
    Integer total = 0;
    for (int d = 0; d < kDiskTypes; ++d)
        if (disk_crossings(d, edge)) total += v.at(tet, d);
    if (tet == almost_tet && v.almost && v.almost->kind == AlmostKind::Octagon)
        total += octagon_crossings(v.almost->octagon_type, edge);
    return total;
}

std::optional<Integer> disk_edge_position(const SurfaceVector& v, int tet, const DiskRef& d, int edge) {
    if (d.type < 0 || d.type >= kDiskTypes || edge < 0 || edge > 5) return std::nullopt;
    if (!disk_crossings(d.type, edge)) return std::nullopt;
    if (sgn(d.index) < 0 || d.index >= v.at(tet, d.type)) return std::nullopt;
    int i = kEdgeVertices[edge][0];
    if (d.type == i) return d.index;
    Integer quads = 0;
    for (int q = 4; q < kDiskTypes; ++q)
        if (disk_crossings(q, edge)) quads += v.at(tet, q);
    if (is_quad_disk(d.type)) return v.at(tet, i) + d.index;
    return v.at(tet, i) + quads + d.index;
}

AdmissibilityReport check_admissible(const Triangulation& t, const SurfaceVector& v) {
    if (v.coords.size() != static_cast<size_t>(7) * t.size())
        throw std::invalid_argument("surface vector has " + std::to_string(v.coords.size()) +
                                    " coordinates, expected " + std::to_string(7 * t.size()));
    AdmissibilityReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.violations.push_back(std::move(msg));
    };
    for (int a = 0; a < t.size(); ++a) {
        for (int d = 0; d < kDiskTypes; ++d)
            if (sgn(v.at(a, d)) < 0) fail("negative coordinate in " + t.name(a));
        int quads = 0;
        for (int q = 4; q < kDiskTypes; ++q) quads += sgn(v.at(a, q)) != 0;
        if (quads > 1) fail("quad condition violated in " + t.name(a));
    }
    int atet = -1;
    if (v.almost) {
        const AlmostPiece& p = *v.almost;
        atet = t.index_of(p.tet);
        if (atet < 0) {
            fail("almost normal piece names unknown tetrahedron '" + p.tet + "'");
        } else if (p.kind == AlmostKind::Octagon) {
            if (p.octagon_type < 1 || p.octagon_type > 3) fail("octagon type out of range");
            for (int q = 4; q < kDiskTypes; ++q)
                if (sgn(v.at(atet, q)) != 0) fail("quad shares tetrahedron " + p.tet + " with the octagon");
        } else {
            auto p1 = disk_edge_position(v, atet, p.disk1, p.tube_edge);
            auto p2 = disk_edge_position(v, atet, p.disk2, p.tube_edge);
            if (!p1 || !p2)
                fail("annulus disk does not exist or misses the tube edge");
            else if (*p2 - *p1 != 1)
                fail("annulus disks are not consecutive along the tube edge (in low-to-high order)");
        }
    }
    for (const auto& pr : t.pairings())
        for (int x = 0; x < 4; ++x) {
            if (x == pr.face_a) continue;
            if (arc_count(v, pr.tet_a, pr.face_a, x, atet) != arc_count(v, pr.tet_b, pr.face_b, pr.perm[x], atet))
                fail("matching equation fails across " + t.name(pr.tet_a) + ":" + std::to_string(pr.face_a) + " / " +
                     t.name(pr.tet_b) + ":" + std::to_string(pr.face_b) + " arc " + std::to_string(x));
        }
    return r;
}

WeightEuler weight_euler(const Triangulation& t, const SurfaceVector& v) {
    auto rep = check_admissible(t, v);
    if (!rep.ok) throw std::invalid_argument("weight_euler: " + rep.violations.front());
    Skeleton s(t);
    int atet = almost_tet_index(t, v);
    WeightEuler out{0, 0};
    for (const auto& e : s.edges()) {
        Integer sum = 0;
        for (const auto& slot : e.slots) sum += edge_crossings(v, slot.tet, slot.edge, atet);
        Integer per = sum / e.valency();
        if (per * e.valency() != sum) throw std::logic_error("edge crossings disagree around an edge");
        out.weight += per;
    }
    Integer arcs = 0;
    for (const auto& f : s.faces())
        for (int x = 0; x < 4; ++x)
            if (x != f.face) arcs += arc_count(v, f.tet, f.face, x, atet);
    Integer faces = 0;
    for (const auto& c : v.coords) faces += c;
    if (v.almost && v.almost->kind == AlmostKind::Octagon) faces += 1;
    out.euler = faces - arcs + out.weight;
    if (v.almost && v.almost->kind == AlmostKind::Annulus) out.euler -= 2;
    return out;
}

SurfaceVector vertex_link_vector(const Triangulation& t, const Skeleton& s, int vertex_class) {
    SurfaceVector v(t.size());
    for (auto [a, x] : s.vertices()[vertex_class].slots) v.at(a, x) += 1;
    return v;
}

std::optional<std::map<int, Integer>> vertex_link_multiplicities(const Triangulation& t, const SurfaceVector& v) {
    if (v.almost || v.coords.size() != static_cast<size_t>(7) * t.size()) return std::nullopt;
    for (int a = 0; a < t.size(); ++a)
        for (int q = 4; q < kDiskTypes; ++q)
            if (sgn(v.at(a, q)) != 0) return std::nullopt;
    Skeleton s(t);
    std::map<int, Integer> out;
    for (int c = 0; c < static_cast<int>(s.vertices().size()); ++c) {
        const auto& slots = s.vertices()[c].slots;
        Integer m = v.at(slots[0].first, slots[0].second);
        for (auto [a, x] : slots)
            if (v.at(a, x) != m) return std::nullopt;
        if (sgn(m) != 0) out[c] = m;
    }
    return out;
}

std::optional<int> is_vertex_link(const Triangulation& t, const SurfaceVector& v) {
    auto m = vertex_link_multiplicities(t, v);
    if (!m || m->size() != 1 || m->begin()->second != 1) return std::nullopt;
    return m->begin()->first;
}

SurfaceVector haken_sum(const Triangulation& t, const SurfaceVector& f, const SurfaceVector& g) {
    const size_t dim = static_cast<size_t>(7) * t.size();
    if (f.coords.size() != dim || g.coords.size() != dim) throw std::invalid_argument("haken_sum: dimension mismatch");
    if (f.almost && g.almost) throw std::invalid_argument("haken_sum: both summands carry an almost normal piece");
    const auto& almost = f.almost ? f.almost : g.almost;
    if (almost && almost->kind == AlmostKind::Annulus)
        throw std::invalid_argument("haken_sum: sums with an annulus piece are not supported");
    SurfaceVector s(t.size());
    for (size_t i = 0; i < dim; ++i) s.coords[i] = f.coords[i] + g.coords[i];
    s.almost = almost;
    int atet = almost_tet_index(t, s);
    for (int a = 0; a < t.size(); ++a) {
        int quads = 0;
        for (int q = 4; q < kDiskTypes; ++q) quads += sgn(s.at(a, q)) != 0;
        if (quads > 1 || (a == atet && quads > 0))
            throw std::invalid_argument("haken_sum: quad condition fails in " + t.name(a));
    }
    return s;
}

CurveClass classify_normal_curve(const NormalCurve& c) {
    const int n = static_cast<int>(c.size());
    if (n < 3) throw NormalCurveError("normal curve needs at least three arcs");
    for (const auto& a : c)
        if (a.face < 0 || a.face > 3 || a.vertex < 0 || a.vertex > 3 || a.face == a.vertex)
            throw NormalCurveError("invalid normal arc");
    CurveClass out{CurveKind::Long, 0, {0, 0, 0, 0, 0, 0}};
    for (int i = 0; i < n; ++i) {
        const auto& a = c[i];
        const auto& b = c[(i + 1) % n];
        const auto& prev = c[(i + n - 1) % n];
        if (a.face == b.face) throw NormalCurveError("consecutive arcs lie in the same face");
        if (prev.face == b.face) throw NormalCurveError("arc enters and leaves through the same edge");
        int x = -1, y = -1;
        for (int k = 0; k < 4; ++k)
            if (k != a.face && k != b.face) (x < 0 ? x : y) = k;
        bool a_ok = (a.vertex == x || a.vertex == y), b_ok = (b.vertex == x || b.vertex == y);
        if (!a_ok || !b_ok) throw NormalCurveError("consecutive arcs do not share an edge endpoint");
        out.edge_counts[edge_index(x, y)] += 1;
    }
    int maxc = 0;
    for (int k : out.edge_counts) maxc = std::max(maxc, k);
    if (maxc <= 1) {
        if (n == 3 && c[0].vertex == c[1].vertex && c[1].vertex == c[2].vertex) {
            out.kind = CurveKind::Triangle;
            out.type = c[0].vertex;
        } else if (n == 4) {
            for (int a = 1; a <= 3; ++a) {
                bool match = true;
                for (int e = 0; e < 6; ++e) match = match && out.edge_counts[e] == disk_crossings(quad_disk(a), e);
                if (match) {
                    out.kind = CurveKind::Quad;
                    out.type = a;
                }
            }
        }
        return out;
    }
    if (n == 8)
        for (int a = 1; a <= 3; ++a) {
            bool ok = true;
            for (int e = 0; e < 6; ++e) ok = ok && out.edge_counts[e] == octagon_crossings(a, e);
            if (ok) {
                out.kind = CurveKind::Octagon;
                out.type = a;
            }
        }
    return out;
}

}  // namespace spherecheck
