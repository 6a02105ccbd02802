#include "surfaces.hpp"

#include "fixtures.hpp"

#include "spherecheck/skeleton.hpp"

#include <algorithm>

namespace testsurf {

using namespace spherecheck;

SurfaceVector octagon_sphere() {
    SurfaceVector v(1);
    v.at(0, 0) = 1;
    v.at(0, 3) = 1;
    v.almost = AlmostPiece{AlmostKind::Octagon, "T", 3, {}, {}, -1};
    return v;
}

SurfaceVector tubed_links() {
    SurfaceVector v(1);
    for (int i = 0; i < 4; ++i) v.at(0, i) = 2;
    v.almost = AlmostPiece{AlmostKind::Annulus, "T", 0, {0, 0}, {0, 1}, 0};
    return v;
}

namespace {

// Annulus variants: each pair of consecutive disks along each edge of each tetrahedron.
void add_annuli(const Triangulation& t, const SurfaceVector& v, std::vector<std::pair<Triangulation, SurfaceVector>>& out) {
    for (int a = 0; a < t.size(); ++a)
        for (int e = 0; e < 6; ++e)
            for (int d1 = 0; d1 < kDiskTypes; ++d1)
                for (int d2 = 0; d2 < kDiskTypes; ++d2) {
                    if (!disk_crossings(d1, e) || !disk_crossings(d2, e)) continue;
                    for (long i1 = 0; i1 < v.at(a, d1); ++i1)
                        for (long i2 = 0; i2 < v.at(a, d2); ++i2) {
                            SurfaceVector w = v;
                            w.almost = AlmostPiece{AlmostKind::Annulus, t.name(a), 0, {d1, i1}, {d2, i2}, e};
                            if (check_admissible(t, w).ok) out.push_back({t, w});
                        }
                }
}

void box(const Triangulation& t, int tri_max, int quad_max, std::vector<std::pair<Triangulation, SurfaceVector>>& out) {
    const int n = t.size();
    // Per tetrahedron: triangle counts in [0, tri_max]^4 and one quad type in [0, quad_max].
    std::vector<std::array<int, 7>> local;
    std::array<int, 7> c{};
    for (int m = 0;; ++m) {
        int x = m;
        for (int i = 0; i < 4; ++i) {
            c[i] = x % (tri_max + 1);
            x /= tri_max + 1;
        }
        if (x > 0) break;
        for (int q = 0; q <= 3; ++q)
            for (int k = (q == 0 ? 0 : 1); k <= (q == 0 ? 0 : quad_max); ++k) {
                auto d = c;
                d[4] = d[5] = d[6] = 0;
                if (q) d[3 + q] = k;
                local.push_back(d);
            }
    }
    std::vector<size_t> idx(n, 0);
    for (;;) {
        SurfaceVector v(n);
        for (int a = 0; a < n; ++a)
            for (int d = 0; d < 7; ++d) v.at(a, d) = local[idx[a]][d];
        if (!v.is_zero() && check_admissible(t, v).ok) {
            out.push_back({t, v});
            add_annuli(t, v, out);
        }
        for (int a = 0; a < n; ++a) {
            SurfaceVector w = v;
            bool quad_free = true;
            for (int q = 4; q < 7; ++q) quad_free &= sgn(w.at(a, q)) == 0;
            if (!quad_free) continue;
            for (int type = 1; type <= 3; ++type) {
                w.almost = AlmostPiece{AlmostKind::Octagon, t.name(a), type, {}, {}, -1};
                if (check_admissible(t, w).ok) out.push_back({t, w});
            }
        }
        int a = 0;
        while (a < n && ++idx[a] == local.size()) idx[a++] = 0;
        if (a == n) break;
    }
}

}  // namespace

std::vector<std::pair<Triangulation, SurfaceVector>> small_admissible(std::mt19937& rng, size_t count) {
    std::vector<std::pair<Triangulation, SurfaceVector>> all;
    for (const auto& t : closed_census(1)) box(t, 2, 2, all);
    std::vector<Triangulation> two;
    for (const auto& t : closed_census(2))
        if (is_three_manifold(t)) two.push_back(t);
    std::mt19937 pick(7);
    std::shuffle(two.begin(), two.end(), pick);
    for (size_t i = 0; i < 8 && i < two.size(); ++i) box(two[i], 1, 1, all);
    std::shuffle(all.begin(), all.end(), rng);
    if (all.size() > count) all.resize(count);
    return all;
}

}  // namespace testsurf
