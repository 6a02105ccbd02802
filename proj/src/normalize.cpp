#include "spherecheck/normalize.hpp"

#include "spherecheck/detail/union_find.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace spherecheck {

namespace {

using Segment = std::pair<int, int>;  // consecutive points, earlier first in edge-class order

struct Setup {
    ExplicitSurface x;
    int label[2];         // side label of plus and minus
    Segment first[2];     // exceptional move on each side (unused for the annulus surgery side)
    bool annulus = false;
};

void require_input(const Triangulation& t, const SurfaceVector& v) {
    if (!t.is_closed()) throw std::invalid_argument("normalization needs a closed triangulation");
    if (!v.almost) throw std::invalid_argument("normalization needs an almost normal surface");
    auto rep = check_admissible(t, v);
    if (!rep.ok) throw std::invalid_argument("normalization of an inadmissible surface: " + rep.violations.front());
    if (!is_connected_sphere(t, v)) throw std::invalid_argument("normalization needs a connected sphere");
}

Segment ordered(const ExplicitSurface& x, int a, int b) {
    return x.point_position(a) < x.point_position(b) ? Segment{a, b} : Segment{b, a};
}

Setup prepare(const Triangulation& t, const SurfaceVector& v) {
    Setup s{ExplicitSurface(t, v), {0, 0}, {}, false};
    ExplicitSurface& x = s.x;
    try {
        x.compute_labels();
    } catch (const NonSeparatingSurface& e) {
        throw NormalizationError(e.what());
    }
    const int atet = x.almost_tet();
    const AlmostPiece& p = *v.almost;
    auto seg = [&](int edge, int from, long k) {
        return ordered(x, x.point_at(atet, edge, from, k), x.point_at(atet, edge, from, k + 1));
    };
    if (p.kind == AlmostKind::Octagon) {
        int a = p.octagon_type, b = -1, c = -1;
        for (int y = 1; y < 4; ++y)
            if (y != a) (b < 0 ? b : c) = y;
        s.first[0] = seg(edge_index(0, a), 0, v.at(atet, 0).get_si());
        s.first[1] = seg(edge_index(b, c), b, v.at(atet, b).get_si());
        s.label[0] = x.label_after(s.first[0].first);
        s.label[1] = x.label_after(s.first[1].first);
        if (s.label[0] == s.label[1]) throw NormalizationError("both exceptional disks of the octagon lie on one side");
    } else {
        s.annulus = true;
        long pos = disk_edge_position(v, atet, p.disk1, p.tube_edge)->get_si();
        s.first[1] = seg(p.tube_edge, kEdgeVertices[p.tube_edge][0], pos);
        s.label[1] = x.label_after(s.first[1].first);
        s.label[0] = 1 - s.label[1];
    }
    return s;
}

struct Candidate {
    int face, edge, pos;
    Segment seg;
    auto key() const { return std::tuple(face, edge, pos); }
};

// Outermost bent arcs whose tightening disk lies on the side with label `lambda`.
std::vector<Candidate> candidates(const ExplicitSurface& x, int lambda) {
    std::map<int, Candidate> by_point;
    for (const auto& a : x.arcs()) {
        if (!a.alive || a.a.side != a.b.side) continue;
        Segment s = ordered(x, a.a.point, a.b.point);
        if (x.point_position(s.second) - x.point_position(s.first) != 1) continue;
        if (x.label_after(s.first) != lambda) continue;
        Candidate c{a.a.face, x.point_edge(s.first), x.point_position(s.first), s};
        auto it = by_point.find(s.first);
        if (it == by_point.end() || c.key() < it->second.key()) by_point[s.first] = c;
    }
    std::vector<Candidate> out;
    for (auto& [p, c] : by_point) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.key() < b.key(); });
    return out;
}

std::string segment_text(const ExplicitSurface& x, const Segment& s) {
    std::ostringstream o;
    o << "edge " << x.point_edge(s.first) << " pos " << x.point_position(s.first);
    return o.str();
}

class Run {
public:
    Run(ExplicitSurface& x, bool defer, std::vector<std::string>* trace, NormalizeStats* stats)
        : x_(x), defer_(defer), trace_(trace), stats_(stats ? stats : &local_) {
        stats_->weights.push_back(x_.live_points());
    }

    void merge(const std::vector<Segment>& segs, const std::string& what) {
        if (trace_) {
            std::string line = what;
            if (segs.size() == 1) line += " " + segment_text(x_, segs[0]);
            else line += " segments " + std::to_string(segs.size());
            trace_->push_back(line);
        }
        auto ms = x_.merge_segments(segs, defer_);
        if (what == "product") ++stats_->batches;
        else ++stats_->tightenings;
        stats_->removed.push_back(ms.removed_points);
        stats_->weights.push_back(x_.live_points());
        if (!defer_) {
            stats_->surgeries += ms.simple_curves;
            if (trace_)
                for (int i = 0; i < ms.simple_curves; ++i) trace_->push_back("surgery simple curve");
        }
        stats_->catalogue_violations = std::max(stats_->catalogue_violations, x_.catalogue_violations());
    }

    void finish_surgeries() {
        if (!defer_) return;
        for (const auto& s : x_.simple_curves()) {
            ++stats_->surgeries;
            if (trace_) trace_->push_back("surgery simple curve in face " + std::to_string(s.face));
        }
        x_.clear_simple_curves();
    }

private:
    ExplicitSurface& x_;
    bool defer_;
    std::vector<std::string>* trace_;
    NormalizeStats local_;
    NormalizeStats* stats_;
};

// Normal vector of the final explicit surface; `skip` marks curves already accounted for.
SurfaceVector read_off(const Triangulation& t, const ExplicitSurface& x, const std::vector<bool>* skip = nullptr) {
    SurfaceVector out(t.size());
    auto curves = x.trace();
    for (size_t i = 0; i < curves.size(); ++i) {
        bool bent = false;
        auto nc = ExplicitSurface::as_normal_curve(curves[i], bent);
        if (bent) throw NormalizationError("a bent arc survives normalization");
        if (skip && (*skip)[i]) continue;
        auto cls = classify_normal_curve(nc);
        if (cls.kind == CurveKind::Triangle)
            out.at(curves[i].tet, cls.type) += 1;
        else if (cls.kind == CurveKind::Quad)
            out.at(curves[i].tet, quad_disk(cls.type)) += 1;
        else
            throw NormalizationError("a long curve survives normalization in " + t.name(curves[i].tet));
    }
    for (int a = 0; a < t.size(); ++a) {
        int quads = 0;
        for (int q = 4; q < kDiskTypes; ++q) quads += sgn(out.at(a, q)) != 0;
        if (quads > 1) throw NormalizationError("normalization violates the quad condition");
    }
    return out;
}

SurfaceVector without_almost(const SurfaceVector& v) {
    SurfaceVector out = v;
    out.almost.reset();
    return out;
}

struct Blocks {
    struct Block {
        int tet, type;
        std::vector<Segment> segs;
    };
    std::vector<Block> blocks;          // product blocks on the side
    std::vector<int> comp;              // block -> component
    std::vector<std::vector<int>> members;
    int core_blocks = 0;
};

Blocks find_blocks(const Triangulation& t, const SurfaceVector& v, const Setup& s, int lambda) {
    const ExplicitSurface& x = s.x;
    const int atet = x.almost_tet();
    Blocks out;
    auto touches_tube = [&](const Segment& g) {
        if (!s.annulus) return false;
        const auto& tube = s.first[1];
        return g.first == tube.first || g.first == tube.second || g.second == tube.first || g.second == tube.second;
    };
    std::vector<int> per_tet(t.size(), 0);
    for (int a = 0; a < t.size(); ++a)
        for (int d = 0; d < kDiskTypes; ++d) {
            long c = v.at(a, d).get_si();
            for (long k = 0; k + 1 < c; ++k) {
                Blocks::Block b{a, d, {}};
                bool excluded = false;
                int label = -1;
                for (int e = 0; e < 6; ++e) {
                    if (!disk_crossings(d, e)) continue;
                    int i = kEdgeVertices[e][0], j = kEdgeVertices[e][1];
                    int near = d < 4 ? d : (i == 0 || i == d - 3 ? i : j);
                    long off = d < 4 ? 0 : v.at(a, near).get_si();
                    Segment g = ordered(x, x.point_at(a, e, near, off + k), x.point_at(a, e, near, off + k + 1));
                    if (a == atet && e == v.almost->tube_edge && touches_tube(g)) excluded = true;
                    int l = x.label_after(g.first);
                    if (label >= 0 && l != label) throw std::logic_error("product block with inconsistent labels");
                    label = l;
                    b.segs.push_back(g);
                }
                if (excluded || label != lambda) continue;
                out.blocks.push_back(std::move(b));
                ++per_tet[a];
            }
        }
    detail::UnionFind uf(static_cast<int>(out.blocks.size()));
    std::map<Segment, int> owner;
    for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i)
        for (const auto& g : out.blocks[i].segs) {
            auto [it, fresh] = owner.try_emplace(g, i);
            if (!fresh) uf.unite(it->second, i);
        }
    std::map<int, int> index;
    out.comp.resize(out.blocks.size());
    for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i) {
        int r = uf.find(i);
        auto [it, fresh] = index.try_emplace(r, static_cast<int>(out.members.size()));
        if (fresh) out.members.emplace_back();
        out.comp[i] = it->second;
        out.members[it->second].push_back(i);
    }
    // Regions of each tetrahedron on the side: components of the boundary sphere cut along the
    // surface, with the two outer regions of a tube joined.
    const Skeleton& sk = x.skeleton();
    for (int a = 0; a < t.size(); ++a) {
        std::array<int, 6> n{}, base{};
        int total = 0;
        for (int e = 0; e < 6; ++e) {
            n[e] = static_cast<int>(x.edge_points(sk.edge_of(a, e)).size());
            base[e] = total;
            total += n[e] + 1;
        }
        auto seg_id = [&](int e, int from, int j) { return base[e] + (from == kEdgeVertices[e][0] ? j : n[e] - j); };
        detail::UnionFind cells(total);
        for (int f = 0; f < 4; ++f)
            for (int y = 0; y < 4; ++y) {
                if (y == f) continue;
                int u = -1, w = -1;
                for (int z = 0; z < 4; ++z)
                    if (z != f && z != y) (u < 0 ? u : w) = z;
                long arcs = arc_count(v, a, f, y, atet).get_si();
                for (long j = 0; j <= arcs; ++j)
                    cells.unite(seg_id(edge_index(y, u), y, static_cast<int>(j)), seg_id(edge_index(y, w), y, static_cast<int>(j)));
            }
        if (s.annulus && a == atet) {
            const AlmostPiece& p = *v.almost;
            long pos = disk_edge_position(v, atet, p.disk1, p.tube_edge)->get_si();
            int low = kEdgeVertices[p.tube_edge][0];
            cells.unite(seg_id(p.tube_edge, low, static_cast<int>(pos)), seg_id(p.tube_edge, low, static_cast<int>(pos + 2)));
        }
        std::set<int> side_regions;
        for (int e = 0; e < 6; ++e) {
            int cls = sk.edge_of(a, e);
            const auto& pts = x.edge_points(cls);
            for (int j = 0; j <= n[e]; ++j) {
                int ci = sk.edge_sign(a, e) > 0 ? j : n[e] - j;
                int l = ci == 0 ? x.label_before_first(cls) : x.label_after(pts[ci - 1]);
                if (l == lambda) side_regions.insert(cells.find(base[e] + j));
            }
        }
        out.core_blocks += static_cast<int>(side_regions.size()) - per_tet[a];
    }
    return out;
}

}  // namespace

SurfaceVector normalize_slow(const Triangulation& t, const SurfaceVector& v, Side side, const NormalizeOptions& opts,
                             NormalizeStats* stats) {
    require_input(t, v);
    const int si = side == Side::Plus ? 0 : 1;
    if (v.almost->kind == AlmostKind::Annulus && side == Side::Plus) {
        if (opts.trace) opts.trace->push_back("surgery exceptional disk");
        if (stats) ++stats->surgeries;
        return without_almost(v);
    }
    Setup s = prepare(t, v);
    Run run(s.x, opts.defer_surgery, opts.trace, stats);
    run.merge({s.first[si]}, "exceptional");
    std::mt19937_64 rng(opts.seed.value_or(0));
    for (;;) {
        auto c = candidates(s.x, s.label[si]);
        if (c.empty()) break;
        size_t pick = opts.seed ? static_cast<size_t>(rng() % c.size()) : 0;
        run.merge({c[pick].seg}, "tighten face " + std::to_string(c[pick].face));
    }
    run.finish_surgeries();
    return read_off(t, s.x);
}

BlockDecomposition block_decomposition(const Triangulation& t, const SurfaceVector& v, Side side) {
    require_input(t, v);
    Setup s = prepare(t, v);
    Blocks b = find_blocks(t, v, s, s.label[side == Side::Plus ? 0 : 1]);
    BlockDecomposition out;
    out.core_disks = without_almost(v);
    for (const auto& m : b.members) {
        SurfaceVector bv(t.size());
        for (int i : m) {
            bv.at(b.blocks[i].tet, b.blocks[i].type) += 1;
            out.core_disks.at(b.blocks[i].tet, b.blocks[i].type) -= 2;
        }
        out.components.push_back(std::move(bv));
    }
    out.core_blocks = b.core_blocks;
    return out;
}

SurfaceVector normalize_fast(const Triangulation& t, const SurfaceVector& v, Side side, std::vector<std::string>* trace,
                             NormalizeStats* stats) {
    require_input(t, v);
    const int si = side == Side::Plus ? 0 : 1;
    if (v.almost->kind == AlmostKind::Annulus && side == Side::Plus) {
        if (trace) trace->push_back("surgery exceptional disk");
        if (stats) ++stats->surgeries;
        return without_almost(v);
    }
    Setup s = prepare(t, v);
    Blocks b = find_blocks(t, v, s, s.label[si]);
    std::map<Segment, int> seg_comp;
    for (size_t i = 0; i < b.blocks.size(); ++i)
        for (const auto& g : b.blocks[i].segs) seg_comp[g] = b.comp[i];
    std::vector<bool> live(b.members.size(), true);

    Run run(s.x, false, trace, stats);
    // A tightening disk that enters a product component pushes the whole component through.
    auto step = [&](const Segment& seg, const std::string& what) {
        auto it = seg_comp.find(seg);
        if (it == seg_comp.end() || !live[it->second]) {
            run.merge({seg}, what);
            return;
        }
        int j = it->second;
        std::vector<Segment> segs{seg};
        std::set<Segment> seen{seg};
        for (int bi : b.members[j])
            for (const auto& g : b.blocks[bi].segs)
                if (seen.insert(g).second) segs.push_back(g);
        live[j] = false;
        run.merge(segs, "product");
    };
    step(s.first[si], "exceptional");
    for (;;) {
        auto c = candidates(s.x, s.label[si]);
        if (c.empty()) break;
        step(c[0].seg, "tighten face " + std::to_string(c[0].face));
    }
    // Horizontal disks of the untouched product components are added back as 2 * v_j.
    auto curves = s.x.trace();
    std::set<int> product_points;
    SurfaceVector product(t.size());
    long product_blocks = 0;
    for (size_t j = 0; j < b.members.size(); ++j) {
        if (!live[j]) continue;
        for (int bi : b.members[j]) {
            product.at(b.blocks[bi].tet, b.blocks[bi].type) += 2;
            ++product_blocks;
            for (const auto& g : b.blocks[bi].segs) {
                if (!s.x.point_alive(g.first) || !s.x.point_alive(g.second))
                    throw std::logic_error("an untouched product block lost a point");
                product_points.insert(g.first);
                product_points.insert(g.second);
            }
        }
    }
    std::vector<bool> skip(curves.size(), false);
    long skipped = 0;
    for (size_t i = 0; i < curves.size(); ++i)
        for (const auto& a : curves[i].arcs)
            if (product_points.count(a.in_point)) {
                skip[i] = true;
                ++skipped;
                break;
            }
    if (skipped != 2 * product_blocks) throw std::logic_error("product part does not match its horizontal disks");
    SurfaceVector core = read_off(t, s.x, &skip);
    for (size_t i = 0; i < core.coords.size(); ++i) core.coords[i] += product.coords[i];
    return core;
}

VerdictReport both_sides_verdict(const Triangulation& t, const SurfaceVector& v, std::vector<std::string>* trace) {
    VerdictReport r;
    try {
        require_input(t, v);
        Setup s = prepare(t, v);
        if (trace) trace->push_back("side plus");
        r.plus = normalize_fast(t, v, Side::Plus, trace);
        if (trace) trace->push_back("side minus");
        r.minus = normalize_fast(t, v, Side::Minus, trace);
        const Skeleton& sk = s.x.skeleton();
        for (int si = 0; si < 2; ++si) {
            const SurfaceVector& n = si == 0 ? r.plus : r.minus;
            const char* name = si == 0 ? "plus" : "minus";
            auto m = vertex_link_multiplicities(t, n);
            if (!m) {
                r.reason = std::string(name) + " side does not normalize to vertex links";
                return r;
            }
            std::set<int> want, got;
            for (int c = 0; c < static_cast<int>(sk.vertices().size()); ++c)
                if (s.x.vertex_label(c) == s.label[si]) want.insert(c);
            for (const auto& [c, k] : *m) {
                if (k != 1) {
                    r.reason = std::string(name) + " side normalizes to a repeated vertex link";
                    return r;
                }
                got.insert(c);
            }
            if (want != got) {
                r.reason = std::string(name) + " side normalizes to links of the wrong vertices";
                return r;
            }
        }
        r.verdict = Verdict::Sphere;
    } catch (const NormalizationError& e) {
        r.reason = e.what();
    } catch (const SurfaceTooLarge& e) {
        r.reason = e.what();
    }
    return r;
}

}  // namespace spherecheck
