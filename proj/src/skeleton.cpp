#include "spherecheck/skeleton.hpp"

#include "spherecheck/detail/union_find.hpp"

#include <map>
#include <set>

namespace spherecheck {

int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[a][b];
}

Skeleton::Skeleton(const Triangulation& t) {
    const int n = t.size();
    edge_of_.assign(n, {});
    edge_sign_.assign(n, {});
    face_of_.assign(n, {});
    vertex_of_.assign(n, {});

    detail::ParityUnionFind euf(6 * n);
    std::set<int> conflicted;
    detail::UnionFind vuf(4 * n);
    for (int a = 0; a < n; ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.adjacent(a, f);
            if (!g) continue;
            const Perm4& p = g->perm;
            for (int e = 0; e < 6; ++e) {
                int i = kEdgeVertices[e][0], j = kEdgeVertices[e][1];
                if (i == f || j == f) continue;
                int pi = p[i], pj = p[j];
                if (!euf.unite(6 * a + e, 6 * g->tet + edge_index(pi, pj), pi < pj ? 0 : 1))
                    conflicted.insert(6 * a + e);
            }
            for (int v = 0; v < 4; ++v)
                if (v != f) vuf.unite(4 * a + v, 4 * g->tet + p[v]);
        }

    std::map<int, int> eroot;
    for (int s = 0; s < 6 * n; ++s) {
        int r = euf.find(s);
        auto [it, fresh] = eroot.try_emplace(r, static_cast<int>(edges_.size()));
        if (fresh) edges_.emplace_back();
        EdgeClass& ec = edges_[it->second];
        int sign = (euf.parity(s) == euf.parity(ec.slots.empty() ? s : 6 * ec.slots[0].tet + ec.slots[0].edge)) ? 1 : -1;
        ec.slots.push_back({s / 6, s % 6, sign});
        edge_of_[s / 6][s % 6] = it->second;
        edge_sign_[s / 6][s % 6] = sign;
    }
    for (int s : conflicted) edges_[edge_of_[s / 6][s % 6]].reversed_self = true;

    std::map<int, int> vroot;
    for (int s = 0; s < 4 * n; ++s) {
        int r = vuf.find(s);
        auto [it, fresh] = vroot.try_emplace(r, static_cast<int>(vertices_.size()));
        if (fresh) vertices_.emplace_back();
        vertices_[it->second].slots.push_back({s / 4, s % 4});
        vertex_of_[s / 4][s % 4] = it->second;
    }

    for (int a = 0; a < n; ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.adjacent(a, f);
            if (g && std::pair(g->tet, g->face) < std::pair(a, f)) {
                face_of_[a][f] = face_of_[g->tet][g->face];
                continue;
            }
            face_of_[a][f] = static_cast<int>(faces_.size());
            faces_.push_back({a, f, g});
        }

    for (auto& ec : edges_) {
        const auto& r = ec.slots[0];
        ec.tail = vertex_of_[r.tet][kEdgeVertices[r.edge][0]];
        ec.head = vertex_of_[r.tet][kEdgeVertices[r.edge][1]];
        for (const auto& s : ec.slots)
            for (int f = 0; f < 4; ++f)
                if (f != kEdgeVertices[s.edge][0] && f != kEdgeVertices[s.edge][1] && !t.adjacent(s.tet, f))
                    ec.boundary = true;
    }

    // Vertex links: triangles are vertex slots, link vertices are edge ends (tet, v, w).
    detail::UnionFind luf(16 * n);
    for (int a = 0; a < n; ++a)
        for (int v = 0; v < 4; ++v)
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                const auto& g = t.adjacent(a, f);
                int w[2], k = 0;
                for (int x = 0; x < 4; ++x)
                    if (x != v && x != f) w[k++] = x;
                if (g)
                    for (int x : w) luf.unite(16 * a + 4 * v + x, 16 * g->tet + 4 * g->perm[v] + g->perm[x]);
            }
    for (auto& vc : vertices_) {
        long tris = static_cast<long>(vc.slots.size());
        long glued = 0, bnd = 0;
        std::set<int> lverts;
        std::vector<int> bends;
        for (auto [a, v] : vc.slots)
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                if (t.adjacent(a, f)) {
                    ++glued;
                } else {
                    ++bnd;
                    for (int x = 0; x < 4; ++x)
                        if (x != v && x != f) bends.push_back(16 * a + 4 * v + x);
                }
            }
        for (auto [a, v] : vc.slots)
            for (int x = 0; x < 4; ++x)
                if (x != v) lverts.insert(luf.find(16 * a + 4 * v + x));
        // Boundary components: boundary link edges joined at shared link vertices.
        detail::UnionFind comp(static_cast<int>(bends.size()));
        std::map<int, int> first;
        for (int i = 0; i < static_cast<int>(bends.size()); ++i) {
            if (i % 2 == 1) comp.unite(i - 1, i);
            auto [it, fresh] = first.try_emplace(luf.find(bends[i]), i);
            if (!fresh) comp.unite(it->second, i);
        }
        std::set<int> roots;
        for (int i = 0; i < static_cast<int>(bends.size()); ++i) roots.insert(comp.find(i));
        vc.link.euler = static_cast<long>(lverts.size()) - (glued / 2 + bnd) + tris;
        vc.link.boundary_components = static_cast<int>(roots.size());
        if (bnd == 0 && vc.link.euler == 2)
            vc.link.kind = LinkKind::Sphere;
        else if (bnd > 0 && vc.link.euler == 1 && vc.link.boundary_components == 1)
            vc.link.kind = LinkKind::Disk;
        else
            vc.link.kind = LinkKind::Other;
    }
}

bool is_three_manifold(const Skeleton& s) {
    for (const auto& e : s.edges())
        if (e.reversed_self) return false;
    for (const auto& v : s.vertices())
        if (v.link.kind == LinkKind::Other) return false;
    return true;
}

bool is_three_manifold(const Triangulation& t) { return is_three_manifold(Skeleton(t)); }

}  // namespace spherecheck
