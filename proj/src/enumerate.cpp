#include "spherecheck/enumerate.hpp"

#include "spherecheck/skeleton.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace spherecheck {

namespace {

class Bits {
public:
    explicit Bits(int n = 0) : w_((n + 63) / 64, 0) {}
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    Bits operator&(const Bits& o) const {
        Bits r;
        r.w_.resize(w_.size());
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }

private:
    std::vector<std::uint64_t> w_;
};

struct Ray {
    std::vector<Integer> v;
    Bits zero;
};

Bits zero_set(const std::vector<Integer>& v) {
    Bits b(static_cast<int>(v.size()));
    for (size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) == 0) b.set(static_cast<int>(i));
    return b;
}

void make_primitive(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Integer s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) s += a[i] * b[i];
    return s;
}

// Adds the matching equations of t into `rows` for a cone whose first 7n columns are standard
// coordinates; `oct_col` is the octagon column or -1.
void matching_rows(const Triangulation& t, int dim, int oct_tet, int oct_type, int oct_col,
                   std::vector<std::vector<Integer>>& rows) {
    for (const auto& pr : t.pairings())
        for (int x = 0; x < 4; ++x) {
            if (x == pr.face_a) continue;
            std::vector<Integer> row(dim);
            int y = pr.perm[x];
            for (int d = 0; d < kDiskTypes; ++d) {
                if (disk_arc(d, pr.face_a) == x) row[7 * pr.tet_a + d] += 1;
                if (disk_arc(d, pr.face_b) == y) row[7 * pr.tet_b + d] -= 1;
            }
            if (oct_col >= 0) {
                auto in = [&](int face, int v) {
                    auto a = octagon_arcs(oct_type, face);
                    return a[0] == v || a[1] == v;
                };
                if (pr.tet_a == oct_tet && in(pr.face_a, x)) row[oct_col] += 1;
                if (pr.tet_b == oct_tet && in(pr.face_b, y)) row[oct_col] -= 1;
            }
            bool nonzero = std::any_of(row.begin(), row.end(), [](const Integer& c) { return sgn(c) != 0; });
            if (nonzero && std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(std::move(row));
        }
}

SurfaceVector to_surface(const Triangulation& t, const std::vector<Integer>& ray) {
    SurfaceVector v(t.size());
    std::copy(ray.begin(), ray.begin() + 7 * t.size(), v.coords.begin());
    return v;
}

bool sphere_check(const Triangulation& t, const SurfaceVector& v) {
    try {
        return is_connected_sphere(t, v);
    } catch (const SurfaceTooLarge&) {
        return false;
    }
}

void require_closed_manifold(const Triangulation& t) {
    if (!t.is_closed()) throw TriangulationError("sphere search needs a closed triangulation");
    if (!is_three_manifold(t)) throw TriangulationError("sphere search needs a 3-manifold triangulation");
}

void sort_candidates(const Triangulation& t, std::vector<SurfaceVector>& c) {
    std::vector<std::pair<Integer, SurfaceVector>> keyed;
    for (auto& v : c) keyed.push_back({weight_euler(t, v).weight, std::move(v)});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return compare(a.second, b.second) < 0;
    });
    c.clear();
    for (auto& [w, v] : keyed)
        if (c.empty() || !(c.back() == v)) c.push_back(std::move(v));
}

// Sum of two vectors if it still satisfies the quad condition (and, with an octagon, keeps its
// tetrahedron quad-free).
std::optional<SurfaceVector> compatible_sum(const Triangulation& t, const SurfaceVector& f, const SurfaceVector& g) {
    try {
        return haken_sum(t, f, g);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace

SolutionCone normal_cone(const Triangulation& t) {
    SolutionCone c;
    c.dim = 7 * t.size();
    matching_rows(t, c.dim, -1, 0, -1, c.equations);
    for (int a = 0; a < t.size(); ++a) c.quad_groups.push_back({7 * a + 4, 7 * a + 5, 7 * a + 6});
    return c;
}

SolutionCone octagon_cone(const Triangulation& t, int tet, int type) {
    if (tet < 0 || tet >= t.size() || type < 1 || type > 3) throw std::invalid_argument("octagon_cone: bad placement");
    SolutionCone c;
    c.dim = 7 * t.size() + 1;
    matching_rows(t, c.dim, tet, type, c.dim - 1, c.equations);
    for (int q = 4; q < 7; ++q) {
        std::vector<Integer> row(c.dim);
        row[7 * tet + q] = 1;
        c.equations.push_back(std::move(row));
    }
    for (int a = 0; a < t.size(); ++a)
        if (a != tet) c.quad_groups.push_back({7 * a + 4, 7 * a + 5, 7 * a + 6});
    return c;
}

bool satisfies(const SolutionCone& cone, const std::vector<Integer>& x) {
    if (static_cast<int>(x.size()) != cone.dim) return false;
    for (const auto& c : x)
        if (sgn(c) < 0) return false;
    for (const auto& row : cone.equations)
        if (sgn(dot(row, x)) != 0) return false;
    return true;
}

bool is_admissible_ray(const SolutionCone& cone, const std::vector<Integer>& x) {
    for (const auto& g : cone.quad_groups) {
        int nz = 0;
        for (int i : g) nz += sgn(x[i]) != 0;
        if (nz > 1) return false;
    }
    return true;
}

std::vector<VertexSolution> vertex_solutions(const SolutionCone& cone, bool admissible_only) {
    std::vector<Ray> rays;
    for (int i = 0; i < cone.dim; ++i) {
        std::vector<Integer> v(cone.dim);
        v[i] = 1;
        Bits z = zero_set(v);
        rays.push_back({std::move(v), std::move(z)});
    }
    for (const auto& row : cone.equations) {
        std::vector<Integer> val(rays.size());
        std::vector<size_t> pos, neg;
        std::vector<Ray> next;
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(row, rays[i].v);
            int s = sgn(val[i]);
            if (s > 0)
                pos.push_back(i);
            else if (s < 0)
                neg.push_back(i);
            else
                next.push_back(rays[i]);
        }
        for (size_t p : pos)
            for (size_t n : neg) {
                Bits common = rays[p].zero & rays[n].zero;
                bool adjacent = true;
                for (size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != n && common.subset_of(rays[r].zero)) adjacent = false;
                if (!adjacent) continue;
                std::vector<Integer> w(cone.dim);
                for (int i = 0; i < cone.dim; ++i) w[i] = val[p] * rays[n].v[i] - val[n] * rays[p].v[i];
                make_primitive(w);
                if (admissible_only && !is_admissible_ray(cone, w)) continue;
                Bits z = zero_set(w);
                next.push_back({std::move(w), std::move(z)});
            }
        rays = std::move(next);
    }
    std::vector<std::vector<Integer>> out;
    for (auto& r : rays)
        if (!admissible_only || is_admissible_ray(cone, r.v)) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare_vectors(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<VertexSolution> sols;
    for (auto& v : out) {
        bool adm = is_admissible_ray(cone, v);
        sols.push_back({std::move(v), adm});
    }
    return sols;
}

std::vector<SurfaceVector> normal_vertex_surfaces(const Triangulation& t) {
    std::vector<SurfaceVector> out;
    for (const auto& s : vertex_solutions(normal_cone(t), true)) out.push_back(to_surface(t, s.ray));
    return out;
}

std::vector<SurfaceVector> octagon_vertex_surfaces(const Triangulation& t) {
    std::vector<SurfaceVector> out;
    for (int a = 0; a < t.size(); ++a)
        for (int type = 1; type <= 3; ++type)
            for (const auto& s : vertex_solutions(octagon_cone(t, a, type), true)) {
                if (s.ray.back() != 1) continue;
                SurfaceVector v = to_surface(t, s.ray);
                v.almost = AlmostPiece{AlmostKind::Octagon, t.name(a), type, {}, {}, -1};
                out.push_back(std::move(v));
            }
    return out;
}

std::vector<SurfaceVector> normal_sphere_candidates(const Triangulation& t) {
    require_closed_manifold(t);
    std::vector<SurfaceVector> found;
    auto verts = normal_vertex_surfaces(t);
    auto good = [&](const SurfaceVector& v) { return !is_vertex_link(t, v) && sphere_check(t, v); };
    for (const auto& v : verts)
        if (good(v)) found.push_back(v);
    if (found.empty()) {
        std::vector<Integer> euler;
        for (const auto& v : verts) euler.push_back(weight_euler(t, v).euler);
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i; j < verts.size(); ++j) {
                if (euler[i] + euler[j] != 2) continue;
                auto s = compatible_sum(t, verts[i], verts[j]);
                if (s && good(*s)) found.push_back(*s);
            }
    }
    sort_candidates(t, found);
    return found;
}

std::optional<SurfaceVector> find_nontrivial_normal_sphere(const Triangulation& t) {
    auto c = normal_sphere_candidates(t);
    if (c.empty()) return std::nullopt;
    return c.front();
}

std::vector<SurfaceVector> almost_sphere_candidates(const Triangulation& t) {
    require_closed_manifold(t);
    std::vector<SurfaceVector> found;
    auto octs = octagon_vertex_surfaces(t);
    auto verts = normal_vertex_surfaces(t);
    std::vector<Integer> ve;
    for (const auto& v : verts) ve.push_back(weight_euler(t, v).euler);
    for (const auto& o : octs) {
        if (sphere_check(t, o)) {
            found.push_back(o);
            continue;
        }
        Integer oe = weight_euler(t, o).euler;
        for (size_t j = 0; j < verts.size(); ++j) {
            if (oe + ve[j] != 2) continue;
            auto s = compatible_sum(t, o, verts[j]);
            if (s && sphere_check(t, *s)) found.push_back(*s);
        }
    }
    // Normal surfaces with two sphere components, tubed together between adjacent parallel disks.
    std::vector<SurfaceVector> pairs;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (ve[i] == 4) pairs.push_back(verts[i]);
        for (size_t j = i; j < verts.size(); ++j) {
            if (ve[i] + ve[j] != 4) continue;
            auto s = compatible_sum(t, verts[i], verts[j]);
            if (s) pairs.push_back(*s);
        }
    }
    for (const auto& v : pairs) {
        std::vector<Component> comps;
        try {
            comps = decompose_components(t, v);
        } catch (const SurfaceTooLarge&) {
            continue;
        }
        Integer pieces = 0;
        for (const auto& c : comps) pieces += c.multiplicity;
        if (pieces != 2) continue;
        for (int a = 0; a < t.size(); ++a)
            for (int e = 0; e < 6; ++e) {
                // Disks along edge e from its low endpoint.
                std::vector<DiskRef> order;
                int low = kEdgeVertices[e][0], high = kEdgeVertices[e][1];
                for (long k = 0; k < v.at(a, low); ++k) order.push_back({low, k});
                for (int q = 4; q < kDiskTypes; ++q)
                    if (disk_crossings(q, e))
                        for (long k = 0; k < v.at(a, q); ++k) order.push_back({q, k});
                for (long k = 0; k < v.at(a, high); ++k) order.push_back({high, k});
                for (size_t k = 0; k + 1 < order.size(); ++k) {
                    SurfaceVector w = v;
                    w.almost = AlmostPiece{AlmostKind::Annulus, t.name(a), 0, order[k], order[k + 1], e};
                    if (check_admissible(t, w).ok && sphere_check(t, w)) found.push_back(std::move(w));
                }
            }
    }
    sort_candidates(t, found);
    return found;
}

std::optional<SurfaceVector> find_almost_normal_sphere(const Triangulation& t) {
    auto c = almost_sphere_candidates(t);
    if (c.empty()) return std::nullopt;
    return c.front();
}

}  // namespace spherecheck
