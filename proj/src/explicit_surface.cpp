#include "spherecheck/explicit_surface.hpp"

#include "spherecheck/detail/union_find.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <map>
#include <unordered_set>

namespace spherecheck {

namespace {

int other_two(int f, int m, int which) {
    int k = 0;
    for (int x = 0; x < 4; ++x)
        if (x != f && x != m) {
            if (k == which) return x;
            ++k;
        }
    return -1;
}

long to_long(const Integer& x, size_t cap) {
    if (!x.fits_slong_p() || x > static_cast<long>(cap))
        throw SurfaceTooLarge("surface too large for explicit realization");
    return x.get_si();
}

}  // namespace

ExplicitSurface::ExplicitSurface(const Triangulation& t, const SurfaceVector& v, size_t max_points)
    : tri_(t), skel_(t), src_(v) {
    auto rep = check_admissible(t, v);
    if (!rep.ok) throw std::invalid_argument("explicit realization of an inadmissible vector: " + rep.violations.front());
    atet_ = almost_tet_index(t, v);
    const int ne = static_cast<int>(skel_.edges().size());
    order_.assign(ne, {});
    occ_.assign(ne, {});
    size_t total = 0;
    for (int e = 0; e < ne; ++e) {
        const auto& r = skel_.edges()[e].slots[0];
        long n = to_long(edge_crossings(v, r.tet, r.edge, atet_), max_points);
        total += static_cast<size_t>(n);
        if (total > max_points) throw SurfaceTooLarge("surface too large for explicit realization");
        for (long k = 0; k < n; ++k) {
            int id = static_cast<int>(point_edge_.size());
            point_edge_.push_back(e);
            pos_.push_back(static_cast<int>(k));
            order_[e].push_back(id);
        }
    }
    const int nf = static_cast<int>(skel_.faces().size());
    side_edge_.assign(nf, {-1, -1, -1, -1});
    for (int F = 0; F < nf; ++F) {
        const auto& fc = skel_.faces()[F];
        for (int m = 0; m < 4; ++m) {
            if (m == fc.face) continue;
            int e = skel_.edge_of(fc.tet, edge_index(other_two(fc.face, m, 0), other_two(fc.face, m, 1)));
            side_edge_[F][m] = e;
            occ_[e].push_back({F, m});
        }
    }
    for (int F = 0; F < nf; ++F) {
        const auto& fc = skel_.faces()[F];
        for (int x = 0; x < 4; ++x) {
            if (x == fc.face) continue;
            int y = other_two(fc.face, x, 0), z = other_two(fc.face, x, 1);
            long c = to_long(arc_count(v, fc.tet, fc.face, x, atet_), max_points);
            for (long k = 0; k < c; ++k) {
                int p1 = point_at(fc.tet, edge_index(x, y), x, k);
                int p2 = point_at(fc.tet, edge_index(x, z), x, k);
                comp_parent_.push_back(static_cast<int>(comp_parent_.size()));
                comp_weight_.push_back(1);
                new_arc({F, z, p1}, {F, y, p2}, static_cast<int>(comp_parent_.size()) - 1, true);
            }
        }
    }
}

long ExplicitSurface::live_points() const {
    long n = 0;
    for (const auto& o : order_) n += static_cast<long>(o.size());
    return n;
}

long ExplicitSurface::live_arcs() const {
    return static_cast<long>(node_arc_.size() / 2);
}

int ExplicitSurface::point_at(int tet, int edge, int from, long k) const {
    int e = skel_.edge_of(tet, edge);
    long n = static_cast<long>(order_[e].size());
    long low = (from == kEdgeVertices[edge][0]) ? k : n - 1 - k;
    long idx = skel_.edge_sign(tet, edge) > 0 ? low : n - 1 - low;
    if (idx < 0 || idx >= n) throw std::logic_error("point position out of range");
    return order_[e][idx];
}

int ExplicitSurface::arc_at(const Node& n) const {
    auto it = node_arc_.find(key(n.face, n.side, n.point));
    return it == node_arc_.end() ? -1 : it->second;
}

int ExplicitSurface::new_arc(const Node& a, const Node& b, int comp, bool original) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({a, b, comp, true, original});
    node_arc_[key(a.face, a.side, a.point)] = id;
    node_arc_[key(b.face, b.side, b.point)] = id;
    return id;
}

int ExplicitSurface::comp_find(int c) {
    while (comp_parent_[c] != c) {
        comp_parent_[c] = comp_parent_[comp_parent_[c]];
        c = comp_parent_[c];
    }
    return c;
}

std::vector<ExplicitSurface::TetCurve> ExplicitSurface::trace() const {
    std::vector<TetCurve> out;
    for (int t = 0; t < tri_.size(); ++t) {
        // Slot side <-> class side for each face of t.
        std::array<Perm4, 4> to_class;
        std::array<int, 4> cls;
        for (int f = 0; f < 4; ++f) {
            cls[f] = skel_.face_of(t, f);
            const auto& fc = skel_.faces()[cls[f]];
            to_class[f] = (fc.tet == t && fc.face == f) ? Perm4() : fc.other->perm.inverse();
        }
        std::unordered_set<std::uint64_t> seen;
        for (int f = 0; f < 4; ++f)
            for (int m = 0; m < 4; ++m) {
                if (m == f) continue;
                int e = skel_.edge_of(t, edge_index(other_two(f, m, 0), other_two(f, m, 1)));
                for (int p : order_[e]) {
                    if (seen.count(key(f, m, p))) continue;
                    TetCurve c{t, {}};
                    int cf = f, cm = m, cp = p;
                    do {
                        seen.insert(key(cf, cm, cp));
                        int cs = to_class[cf][cm];
                        auto it = node_arc_.find(key(cls[cf], cs, cp));
                        if (it == node_arc_.end()) throw std::logic_error("point without an arc");
                        const Arc& a = arcs_[it->second];
                        const Node& o = (a.a == Node{cls[cf], cs, cp}) ? a.b : a.a;
                        int m2 = to_class[cf].inverse()[o.side];
                        c.arcs.push_back({cf, cm, m2, cp, o.point, it->second});
                        seen.insert(key(cf, m2, o.point));
                        int nf = m2;
                        cm = cf;
                        cf = nf;
                        cp = o.point;
                    } while (!(cf == f && cm == m && cp == p));
                    out.push_back(std::move(c));
                }
            }
    }
    return out;
}

NormalCurve ExplicitSurface::as_normal_curve(const TetCurve& c, bool& bent) {
    bent = false;
    NormalCurve out;
    for (const auto& a : c.arcs) {
        if (a.in_side == a.out_side) {
            bent = true;
            continue;
        }
        int v = 6 - a.face - a.in_side - a.out_side;
        out.push_back({a.face, v});
    }
    return out;
}

void ExplicitSurface::compute_labels() {
    const int nv = static_cast<int>(skel_.vertices().size());
    vlabel_.assign(nv, -1);
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (int e = 0; e < static_cast<int>(skel_.edges().size()); ++e) {
        const auto& ec = skel_.edges()[e];
        int par = static_cast<int>(order_[e].size() % 2);
        adj[ec.tail].push_back({ec.head, par});
        adj[ec.head].push_back({ec.tail, par});
    }
    for (int s = 0; s < nv; ++s) {
        if (vlabel_[s] >= 0) continue;
        vlabel_[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (auto [y, par] : adj[x]) {
                int want = vlabel_[x] ^ par;
                if (vlabel_[y] < 0) {
                    vlabel_[y] = want;
                    q.push_back(y);
                } else if (vlabel_[y] != want) {
                    throw NonSeparatingSurface("surface does not separate the one-skeleton consistently");
                }
            }
        }
    }
    after_.assign(point_edge_.size(), -1);
    for (int e = 0; e < static_cast<int>(order_.size()); ++e) {
        int lab = vlabel_[skel_.edges()[e].tail];
        for (size_t k = 0; k < order_[e].size(); ++k) after_[order_[e][k]] = lab ^ static_cast<int>((k + 1) & 1);
    }
}

ExplicitSurface::MergeStats ExplicitSurface::merge_segments(const std::vector<std::pair<int, int>>& segments,
                                                           bool keep_simple) {
    MergeStats stats;
    std::unordered_set<int> removed;
    std::unordered_map<std::uint64_t, std::uint64_t> link;
    for (auto [p, q] : segments) {
        int e = point_edge_[p];
        if (point_edge_[q] != e || !point_alive(p) || !point_alive(q) || std::abs(pos_[p] - pos_[q]) != 1)
            throw std::logic_error("merge along a segment whose ends are not consecutive");
        if (!removed.insert(p).second || !removed.insert(q).second) throw std::logic_error("overlapping segments");
        for (auto [F, m] : occ_[e]) {
            link[key(F, m, p)] = key(F, m, q);
            link[key(F, m, q)] = key(F, m, p);
        }
    }
    auto point_of = [](std::uint64_t k) { return static_cast<int>(k & 0xffffffffu); };
    auto node_of = [](std::uint64_t k) {
        int fs = static_cast<int>(k >> 32);
        return Node{fs / 4, fs % 4, static_cast<int>(k & 0xffffffffu)};
    };
    auto other = [&](int ai, std::uint64_t k) {
        const Arc& a = arcs_[ai];
        std::uint64_t ka = key(a.a.face, a.a.side, a.a.point);
        return ka == k ? key(a.b.face, a.b.side, a.b.point) : ka;
    };
    std::vector<std::uint64_t> rnodes;
    for (int r : removed)
        for (auto [F, m] : occ_[point_edge_[r]]) rnodes.push_back(key(F, m, r));
    std::sort(rnodes.begin(), rnodes.end());
    std::unordered_set<int> used;
    struct Pending {
        std::uint64_t a, b;
        int comp;
    };
    std::vector<Pending> fresh;
    auto join = [&](int c, int d) {
        c = comp_find(c);
        d = comp_find(d);
        if (c == d) return c;
        if (d < c) std::swap(c, d);
        comp_parent_[d] = c;
        comp_weight_[c] += comp_weight_[d];
        return c;
    };
    for (auto rk : rnodes) {
        int ai = node_arc_.at(rk);
        if (used.count(ai)) continue;
        std::uint64_t start = other(ai, rk);
        if (removed.count(point_of(start))) continue;
        used.insert(ai);
        int comp = arcs_[ai].comp;
        std::uint64_t cur = rk;
        for (;;) {
            std::uint64_t l = link.at(cur);
            int a2 = node_arc_.at(l);
            used.insert(a2);
            comp = join(comp, arcs_[a2].comp);
            std::uint64_t nxt = other(a2, l);
            if (!removed.count(point_of(nxt))) {
                fresh.push_back({start, nxt, comp});
                break;
            }
            cur = nxt;
        }
    }
    for (auto rk : rnodes) {
        int ai = node_arc_.at(rk);
        if (used.count(ai)) continue;
        int comp = arcs_[ai].comp;
        std::uint64_t cur = rk;
        do {
            int a = node_arc_.at(cur);
            used.insert(a);
            comp = join(comp, arcs_[a].comp);
            cur = link.at(other(a, cur));
        } while (cur != rk);
        ++stats.simple_curves;
        if (keep_simple) simple_.push_back({node_of(rk).face, comp});
    }
    for (int ai : used) arcs_[ai].alive = false;
    for (auto rk : rnodes) node_arc_.erase(rk);
    for (const auto& p : fresh) {
        new_arc(node_of(p.a), node_of(p.b), p.comp, false);
        ++stats.new_arcs;
    }
    std::unordered_set<int> touched;
    for (int r : removed) touched.insert(point_edge_[r]);
    for (int e : touched) {
        std::vector<int> keep;
        for (int p : order_[e])
            if (removed.count(p))
                pos_[p] = -1;
            else
                keep.push_back(p);
        order_[e] = std::move(keep);
        for (size_t k = 0; k < order_[e].size(); ++k) pos_[order_[e][k]] = static_cast<int>(k);
    }
    stats.removed_points = static_cast<int>(removed.size());
    return stats;
}

int ExplicitSurface::catalogue_violations() {
    std::map<int, std::pair<int, bool>> features;  // root -> (count, has bent arc)
    for (const auto& a : arcs_) {
        if (!a.alive) continue;
        auto& f = features[comp_find(a.comp)];
        f.first += 1;
        if (a.a.side == a.b.side) f.second = true;
    }
    for (const auto& s : simple_) features[comp_find(s.comp)].first += 1;
    int bad = 0;
    for (int c = 0; c < static_cast<int>(comp_parent_.size()); ++c) {
        if (comp_find(c) != c) continue;
        int weight = comp_weight_[c];
        auto it = features.find(c);
        int count = it == features.end() ? 0 : it->second.first;
        bool bent = it != features.end() && it->second.second;
        if (weight > 3 || count > 1 || (weight == 1 && (count != 1 || bent))) ++bad;
    }
    return bad;
}

// ---------------------------------------------------------------------------

std::vector<Component> decompose_components(const Triangulation& t, const SurfaceVector& v) {
    ExplicitSurface x(t, v);
    auto curves = x.trace();
    const int nc = static_cast<int>(curves.size());
    detail::UnionFind uf(nc);
    std::unordered_map<int, int> first_curve;
    for (int c = 0; c < nc; ++c)
        for (const auto& a : curves[c].arcs) {
            auto [it, fresh] = first_curve.try_emplace(a.arc, c);
            if (!fresh) uf.unite(it->second, c);
        }
    const int atet = x.almost_tet();
    // Curve through point p on tetrahedron edge e of the almost tetrahedron.
    auto curve_through = [&](int e, int p) {
        int f = other_two(kEdgeVertices[e][0], kEdgeVertices[e][1], 0);
        int m = other_two(kEdgeVertices[e][0], kEdgeVertices[e][1], 1);
        for (int c = 0; c < nc; ++c) {
            if (curves[c].tet != atet) continue;
            for (const auto& a : curves[c].arcs)
                if ((a.face == f && a.in_side == m && a.in_point == p) || (a.face == f && a.out_side == m && a.out_point == p))
                    return c;
        }
        throw std::logic_error("no curve through tube edge point");
    };
    int tube1 = -1, tube2 = -1;
    Integer pos1, pos2;
    const AlmostPiece* ap = v.almost ? &*v.almost : nullptr;
    if (ap && ap->kind == AlmostKind::Annulus) {
        pos1 = *disk_edge_position(v, atet, ap->disk1, ap->tube_edge);
        pos2 = *disk_edge_position(v, atet, ap->disk2, ap->tube_edge);
        int low = kEdgeVertices[ap->tube_edge][0];
        tube1 = curve_through(ap->tube_edge, x.point_at(atet, ap->tube_edge, low, pos1.get_si()));
        tube2 = curve_through(ap->tube_edge, x.point_at(atet, ap->tube_edge, low, pos2.get_si()));
        uf.unite(tube1, tube2);
    }
    std::map<int, SurfaceVector> comps;
    std::vector<CurveClass> kinds(nc);
    for (int c = 0; c < nc; ++c) {
        bool bent = false;
        auto nc_curve = ExplicitSurface::as_normal_curve(curves[c], bent);
        if (bent) throw std::logic_error("bent arc in a normal realization");
        kinds[c] = classify_normal_curve(nc_curve);
        auto [it, fresh] = comps.try_emplace(uf.find(c), SurfaceVector(t.size()));
        SurfaceVector& sv = it->second;
        switch (kinds[c].kind) {
            case CurveKind::Triangle: sv.at(curves[c].tet, kinds[c].type) += 1; break;
            case CurveKind::Quad: sv.at(curves[c].tet, quad_disk(kinds[c].type)) += 1; break;
            case CurveKind::Octagon: sv.almost = *ap; break;
            case CurveKind::Long: throw std::logic_error("long curve in a normal realization");
        }
    }
    if (tube1 >= 0) {
        // Re-index the tubed copies among the component's own disks along the tube edge.
        int root = uf.find(tube1);
        const int e = ap->tube_edge;
        auto position_of = [&](int c) -> long {
            int f = other_two(kEdgeVertices[e][0], kEdgeVertices[e][1], 0);
            int m = other_two(kEdgeVertices[e][0], kEdgeVertices[e][1], 1);
            for (const auto& a : curves[c].arcs) {
                int p = -1;
                if (a.face == f && a.in_side == m) p = a.in_point;
                if (a.face == f && a.out_side == m) p = a.out_point;
                if (p < 0) continue;
                int cls = x.skeleton().edge_of(atet, e);
                long n = static_cast<long>(x.edge_points(cls).size());
                long k = x.point_position(p);
                return x.skeleton().edge_sign(atet, e) > 0 ? k : n - 1 - k;
            }
            return -1;
        };
        long p1 = position_of(tube1), p2 = position_of(tube2);
        AlmostPiece piece = *ap;
        long i1 = 0, i2 = 0;
        for (int c = 0; c < nc; ++c) {
            if (curves[c].tet != atet || uf.find(c) != root) continue;
            long pc = position_of(c);
            if (pc < 0) continue;
            int type = kinds[c].kind == CurveKind::Triangle ? kinds[c].type : quad_disk(kinds[c].type);
            if (type == ap->disk1.type && pc < p1) ++i1;
            if (type == ap->disk2.type && pc < p2) ++i2;
        }
        piece.disk1.index = i1;
        piece.disk2.index = i2;
        comps[root].almost = piece;
    }
    std::vector<Component> out;
    for (auto& [root, sv] : comps) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Component& c) { return c.surface == sv; });
        if (it == out.end())
            out.push_back({sv, 1});
        else
            it->multiplicity += 1;
    }
    std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) { return compare(a.surface, b.surface) < 0; });
    return out;
}

bool is_connected_sphere(const Triangulation& t, const SurfaceVector& v) {
    if (!check_admissible(t, v).ok) return false;
    auto comps = decompose_components(t, v);
    if (comps.size() != 1 || comps[0].multiplicity != 1) return false;
    return weight_euler(t, v).euler == 2;
}

}  // namespace spherecheck
