#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace fixtures {

using spherecheck::Perm4;

Triangulation simplex_boundary() {
    std::array<std::array<int, 4>, 5> verts;
    for (int k = 0; k < 5; ++k) {
        int n = 0;
        for (int x = 0; x < 5; ++x)
            if (x != k) verts[k][n++] = x;
        if (k % 2 == 1) std::swap(verts[k][0], verts[k][1]);
    }
    auto local = [&](int k, int g) {
        return static_cast<int>(std::find(verts[k].begin(), verts[k].end(), g) - verts[k].begin());
    };
    Triangulation::Builder b;
    for (int k = 0; k < 5; ++k) b.add_tet("F" + std::to_string(k));
    for (int k = 0; k < 5; ++k)
        for (int f = 0; f < 4; ++f) {
            int x = verts[k][f];
            if (x < k) continue;
            int img[4];
            for (int i = 0; i < 4; ++i) img[i] = (i == f) ? local(x, k) : local(x, verts[k][i]);
            b.glue("F" + std::to_string(k), f, "F" + std::to_string(x), local(x, k),
                   Perm4(img[0], img[1], img[2], img[3]));
        }
    return b.build();
}

Triangulation disjoint_union(const Triangulation& a, const Triangulation& c, const std::string& suffix) {
    Triangulation::Builder b;
    for (const auto& n : a.names()) b.add_tet(n);
    for (const auto& n : c.names()) b.add_tet(n + suffix);
    for (const auto& p : a.pairings()) b.glue(a.name(p.tet_a), p.face_a, a.name(p.tet_b), p.face_b, p.perm);
    for (const auto& p : c.pairings())
        b.glue(c.name(p.tet_a) + suffix, p.face_a, c.name(p.tet_b) + suffix, p.face_b, p.perm);
    return b.build();
}

Triangulation renamed(const Triangulation& t, const std::string& prefix) {
    Triangulation::Builder b;
    for (const auto& n : t.names()) b.add_tet(prefix + n);
    for (const auto& p : t.pairings())
        b.glue(prefix + t.name(p.tet_a), p.face_a, prefix + t.name(p.tet_b), p.face_b, p.perm);
    return b.build();
}

Triangulation random_relabel(const Triangulation& t, std::mt19937& rng) {
    std::vector<Perm4> all;
    std::array<int, 4> a{0, 1, 2, 3};
    do all.push_back(Perm4(a[0], a[1], a[2], a[3]));
    while (std::next_permutation(a.begin(), a.end()));
    const int parity = static_cast<int>(rng() % 2);
    std::vector<Perm4> pool;
    for (const auto& p : all)
        if ((p.is_odd() ? 1 : 0) == parity) pool.push_back(p);
    std::vector<Perm4> sigma(t.size());
    for (auto& s : sigma) s = pool[rng() % pool.size()];
    Triangulation::Builder b;
    for (const auto& n : t.names()) b.add_tet(n);
    for (const auto& p : t.pairings())
        b.glue(t.name(p.tet_a), sigma[p.tet_a][p.face_a], t.name(p.tet_b), sigma[p.tet_b][p.face_b],
               sigma[p.tet_b] * p.perm * sigma[p.tet_a].inverse());
    return b.build();
}

Triangulation random_closed(int n, std::mt19937& rng) {
    std::vector<int> slots(4 * n);
    for (int i = 0; i < 4 * n; ++i) slots[i] = i;
    std::shuffle(slots.begin(), slots.end(), rng);
    Triangulation::Builder b;
    for (int i = 0; i < n; ++i) b.add_tet("T" + std::to_string(i));
    for (int i = 0; i < 4 * n; i += 2) {
        int sa = slots[i], sb = slots[i + 1];
        int fa = sa % 4, fb = sb % 4;
        std::vector<Perm4> ok;
        std::array<int, 4> a{0, 1, 2, 3};
        do {
            Perm4 p(a[0], a[1], a[2], a[3]);
            if (p.is_odd() && p[fa] == fb) ok.push_back(p);
        } while (std::next_permutation(a.begin(), a.end()));
        b.glue("T" + std::to_string(sa / 4), fa, "T" + std::to_string(sb / 4), fb, ok[rng() % ok.size()]);
    }
    return b.build();
}

}  // namespace fixtures
