#include "spherecheck/crush.hpp"

#include <set>

namespace spherecheck {

namespace {

Perm4 theta(int a) {
    int b = -1, c = -1;
    for (int x = 1; x < 4; ++x)
        if (x != a) (b < 0 ? b : c) = x;
    return Perm4::transposition(0, a) * Perm4::transposition(b, c);
}

}  // namespace

Triangulation crush_quad(const Triangulation& t, const std::string& tet, int a) {
    const int tau = t.index_of(tet);
    if (tau < 0) throw std::invalid_argument("crush_quad: unknown tetrahedron '" + tet + "'");
    if (a < 1 || a > 3) throw std::invalid_argument("crush_quad: quad type must be 1, 2 or 3");
    for (int f = 0; f < 4; ++f)
        if (!t.adjacent(tau, f)) throw std::invalid_argument("crush_quad: tetrahedron " + tet + " has a free face");
    const Perm4 th = theta(a);

    Triangulation::Builder b;
    for (int i = 0; i < t.size(); ++i)
        if (i != tau) b.add_tet(t.name(i));
    std::set<std::pair<int, int>> done;
    for (const auto& p : t.pairings()) {
        if (p.tet_a == tau || p.tet_b == tau) continue;
        b.glue(t.name(p.tet_a), p.face_a, t.name(p.tet_b), p.face_b, p.perm);
    }
    for (int j = 0; j < t.size(); ++j) {
        if (j == tau) continue;
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.adjacent(j, f);
            if (!g || g->tet != tau || done.count({j, f})) continue;
            // Walk: enter tau through face s, cross to theta(s), leave through its partner.
            Perm4 acc = g->perm;  // labels of j -> labels of tau
            int s = g->face;
            std::set<int> seen;
            for (;;) {
                if (!seen.insert(s).second) throw CrushObstructed("crushing " + tet + ": a gluing chain never leaves the tetrahedron");
                int s2 = th[s];
                acc = Perm4::transposition(s, s2) * acc;
                const auto& out = *t.adjacent(tau, s2);
                acc = out.perm * acc;
                if (out.tet != tau) {
                    if (out.tet == j && out.face == f)
                        throw CrushObstructed("crushing " + tet + ": a face of " + t.name(j) + " would be glued to itself");
                    done.insert({j, f});
                    done.insert({out.tet, out.face});
                    b.glue(t.name(j), f, t.name(out.tet), out.face, acc);
                    break;
                }
                s = out.face;
            }
        }
    }
    return b.build();
}

Polarization polarization_of(const Triangulation& t, const SurfaceVector& v) {
    if (v.almost) throw std::invalid_argument("polarization_of: surface is not normal");
    if (!check_admissible(t, v).ok) throw std::invalid_argument("polarization_of: surface is not admissible");
    if (is_vertex_link(t, v)) throw std::invalid_argument("polarization_of: surface is a vertex link");
    if (!is_connected_sphere(t, v)) throw std::invalid_argument("polarization_of: surface is not a connected sphere");
    Polarization p;
    for (int i = 0; i < t.size(); ++i) {
        int type = 0;
        for (int q = 1; q <= 3; ++q)
            if (sgn(v.at(i, quad_disk(q))) != 0) type = q;
        p[t.name(i)] = type;
    }
    return p;
}

Triangulation crush_polarization(const Triangulation& t, const Polarization& p) {
    for (const auto& n : t.names())
        if (!p.count(n)) throw std::invalid_argument("crush_polarization: no entry for tetrahedron " + n);
    if (p.size() != t.names().size()) throw std::invalid_argument("crush_polarization: entry for an unknown tetrahedron");
    Triangulation cur = t;
    for (const auto& n : t.names()) {
        int a = p.at(n);
        if (a < 0 || a > 3) throw std::invalid_argument("crush_polarization: quad type out of range");
        if (a != 0) cur = crush_quad(cur, n, a);
    }
    return cur;
}

}  // namespace spherecheck
