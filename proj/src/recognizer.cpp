#include "spherecheck/recognizer.hpp"

#include "spherecheck/crush.hpp"
#include "spherecheck/detail/union_find.hpp"
#include "spherecheck/enumerate.hpp"
#include "spherecheck/homology.hpp"
#include "spherecheck/normalize.hpp"
#include "spherecheck/skeleton.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spherecheck {

namespace {

void write_block(std::ostringstream& os, const Triangulation& t) {
    std::istringstream in(t.serialize());
    for (std::string line; std::getline(in, line);) os << "  " << line << '\n';
}

class Lines {
public:
    explicit Lines(std::string_view text) {
        size_t start = 0;
        while (start < text.size()) {
            size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            lines_.emplace_back(text.substr(start, end - start));
            start = end + 1;
        }
    }

    bool done() const { return pos_ >= lines_.size(); }
    int number() const { return static_cast<int>(pos_) + 1; }
    const std::string& peek() const { return lines_[pos_]; }
    std::string next() { return lines_[pos_++]; }

    // Reports the most recently consumed line.
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ ? static_cast<int>(pos_) : 1, 1, msg); }

    std::string expect_line() {
        if (done()) fail("unexpected end of certificate");
        return next();
    }

    // Indented lines following the current position, dedented and parsed as a triangulation.
    Triangulation block() {
        const int first = number();
        std::string text;
        while (!done() && !peek().empty() && (peek()[0] == ' ' || peek()[0] == '\t')) {
            std::string l = next();
            size_t k = l.find_first_not_of(" \t");
            text += (k == std::string::npos ? std::string() : l.substr(k)) + '\n';
        }
        if (text.empty()) throw ParseError(first, 1, "expected an indented triangulation");
        try {
            return Triangulation::parse(text);
        } catch (const ParseError& e) {
            throw ParseError(first + e.line - 1, e.column, e.message);
        } catch (const std::exception& e) {
            throw ParseError(first, 1, e.what());
        }
    }

private:
    std::vector<std::string> lines_;
    size_t pos_ = 0;
};

std::vector<std::string> words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool parse_disk(const std::string& s, DiskRef& d) {
    if (s.size() < 4 || (s[0] != 't' && s[0] != 'q') || s[2] != ':') return false;
    int k = s[1] - '0';
    if (s[0] == 't' && (k < 0 || k > 3)) return false;
    if (s[0] == 'q' && (k < 1 || k > 3)) return false;
    d.type = s[0] == 't' ? k : quad_disk(k);
    std::string idx = s.substr(3);
    if (idx.empty() || idx[0] == '-' || idx[0] == '+') return false;
    return parse_integer(idx, d.index);
}

AlmostPiece parse_almost(const Lines& in, const std::vector<std::string>& w) {
    AlmostPiece p;
    if (w.size() == 5 && w[2] == "octagon") {
        p.kind = AlmostKind::Octagon;
        p.tet = w[3];
        if (w[4].size() != 1 || w[4][0] < '1' || w[4][0] > '3') in.fail("octagon type must be 1, 2 or 3");
        p.octagon_type = w[4][0] - '0';
        return p;
    }
    if (w.size() == 7 && w[2] == "annulus") {
        p.kind = AlmostKind::Annulus;
        p.tet = w[3];
        if (!parse_disk(w[4], p.disk1) || !parse_disk(w[5], p.disk2)) in.fail("malformed disk descriptor");
        const std::string& e = w[6];
        if (e.size() != 2 || e[0] < '0' || e[0] > '3' || e[1] <= e[0] || e[1] > '3') in.fail("malformed tube edge");
        p.tube_edge = edge_index(e[0] - '0', e[1] - '0');
        return p;
    }
    in.fail("malformed almost step");
}

bool closed_manifold_homology_sphere(const Triangulation& t, std::string& why) {
    if (!t.is_closed()) {
        why = "triangulation has boundary";
        return false;
    }
    if (!is_three_manifold(t)) {
        why = "not a 3-manifold";
        return false;
    }
    if (t.components().size() != 1) {
        why = "not connected";
        return false;
    }
    if (!is_homology_sphere(t)) {
        why = "not a homology sphere (" + describe(homology(t)) + ")";
        return false;
    }
    return true;
}

std::vector<int> complement(const Triangulation& t, const std::vector<int>& tets) {
    std::set<int> drop(tets.begin(), tets.end());
    std::vector<int> keep;
    for (int i = 0; i < t.size(); ++i)
        if (!drop.count(i)) keep.push_back(i);
    return keep;
}

std::string names_of(const Polarization& p) {
    std::string s;
    for (const auto& [name, q] : p)
        if (q) s += (s.empty() ? "" : ",") + name + ":" + std::to_string(q);
    return s;
}

}  // namespace

std::string Certificate::serialize() const {
    std::ostringstream os;
    os << "cert 1\nbase\n";
    write_block(os, base);
    for (const auto& s : steps) {
        if (s.kind == StepKind::Normal || !s.surface.almost) os << "step normal\n";
        else os << "step almost " << format_almost(*s.surface.almost) << '\n';
        os << "surface";
        for (const auto& x : s.surface.coords) os << ' ' << x.get_str();
        os << "\nresult\n";
        write_block(os, s.result);
    }
    os << "end\n";
    return os.str();
}

Certificate Certificate::parse(std::string_view text) {
    Lines in(text);
    Certificate c;
    if (in.expect_line() != "cert 1") in.fail("expected 'cert 1'");
    if (in.expect_line() != "base") in.fail("expected 'base'");
    c.base = in.block();
    for (;;) {
        std::string line = in.expect_line();
        if (line == "end") break;
        auto w = words(line);
        if (w.empty() || w[0] != "step") in.fail("expected 'step' or 'end'");
        Step s;
        if (w.size() == 2 && w[1] == "normal") {
            s.kind = StepKind::Normal;
        } else if (w.size() >= 2 && w[1] == "almost") {
            s.kind = StepKind::Almost;
            s.surface.almost = parse_almost(in, w);
        } else {
            in.fail("unknown step kind");
        }
        auto sw = words(in.expect_line());
        if (sw.empty() || sw[0] != "surface") in.fail("expected 'surface'");
        for (size_t i = 1; i < sw.size(); ++i) {
            Integer x;
            if (!parse_integer(sw[i], x)) in.fail("malformed integer '" + sw[i] + "'");
            s.surface.coords.push_back(x);
        }
        if (in.expect_line() != "result") in.fail("expected 'result'");
        s.result = in.block();
        c.steps.push_back(std::move(s));
    }
    while (!in.done())
        if (!in.next().empty()) in.fail("text after 'end'");
    return c;
}

SurfaceVector restrict_surface(const SurfaceVector& v, const std::vector<int>& tets) {
    SurfaceVector out(static_cast<int>(tets.size()));
    for (size_t k = 0; k < tets.size(); ++k)
        for (int d = 0; d < kDiskTypes; ++d) out.at(static_cast<int>(k), d) = v.at(tets[k], d);
    out.almost = v.almost;
    return out;
}

SurfaceVector embed_surface(const SurfaceVector& v, const std::vector<int>& tets, int total) {
    SurfaceVector out(total);
    for (size_t k = 0; k < tets.size(); ++k)
        for (int d = 0; d < kDiskTypes; ++d) out.at(tets[k], d) = v.at(static_cast<int>(k), d);
    out.almost = v.almost;
    return out;
}

std::optional<Certificate> certify(const Triangulation& t, CertifyLog* log) {
    std::string why;
    if (t.empty()) throw std::invalid_argument("certify needs a nonempty triangulation");
    if (!closed_manifold_homology_sphere(t, why)) throw std::invalid_argument("certify: " + why);
    CertifyLog local;
    CertifyLog& L = log ? *log : local;
    auto fail = [&](const std::string& msg) -> std::optional<Certificate> {
        L.failure = msg;
        L.trace.push_back("fail: " + msg);
        return std::nullopt;
    };

    Certificate c;
    c.base = t;
    Triangulation cur = t;
    while (!cur.empty()) {
        const std::string at = "step " + std::to_string(c.steps.size() + 1) + ": ";
        const auto comp = cur.components().front();
        const Triangulation sub = cur.induced(comp);
        bool done = false;

        for (const auto& s : normal_sphere_candidates(sub)) {
            SurfaceVector full = embed_surface(s, comp, cur.size());
            Polarization p = polarization_of(cur, full);
            Triangulation next;
            try {
                next = crush_polarization(cur, p);
            } catch (const CrushObstructed& e) {
                L.trace.push_back(at + "crush obstructed (" + e.what() + "), trying the next sphere");
                continue;
            }
            for (const auto& k : next.components())
                if (!closed_manifold_homology_sphere(next.induced(k), why))
                    return fail(at + "crushing produced a component that is " + why);
            L.trace.push_back(at + "normal sphere, crush " + names_of(p) + " -> " + std::to_string(next.size()) +
                              " tetrahedra");
            c.steps.push_back({StepKind::Normal, full, next});
            cur = std::move(next);
            done = true;
            break;
        }
        if (done) continue;

        for (const auto& s : almost_sphere_candidates(sub)) {
            std::vector<std::string> ntrace;
            auto r = both_sides_verdict(sub, s, L.with_normalization_trace ? &ntrace : nullptr);
            if (r.verdict != Verdict::Sphere) {
                L.trace.push_back(at + "almost sphere " + format_almost(*s.almost) + " inconclusive: " + r.reason);
                continue;
            }
            Triangulation next = cur.induced(complement(cur, comp));
            L.trace.push_back(at + "almost sphere " + format_almost(*s.almost) + ", remove component of " +
                              std::to_string(comp.size()) + " tetrahedra");
            for (auto& line : ntrace) L.trace.push_back("  " + line);
            c.steps.push_back({StepKind::Almost, embed_surface(s, comp, cur.size()), next});
            cur = std::move(next);
            done = true;
            break;
        }
        if (!done) return fail(at + "component of " + cur.name(comp.front()) + " has no usable sphere");
    }
    return c;
}

VerifyResult verify(const Triangulation& t, const Certificate& c, const VerifyOptions& opts) {
    auto reject = [](std::string r) { return VerifyResult{false, std::move(r)}; };
    std::string why;
    if (t.empty()) return reject("base: empty triangulation");
    if (!is_identical(t, c.base)) return reject("base: certificate base differs from the input");
    if (!closed_manifold_homology_sphere(t, why)) return reject("base: " + why);

    Triangulation cur = t;
    for (size_t i = 0; i < c.steps.size(); ++i) {
        const Step& s = c.steps[i];
        const std::string at = "step " + std::to_string(i + 1) + ": ";
        if (cur.empty()) return reject(at + "nothing left to certify");
        const SurfaceVector& v = s.surface;
        if (v.coords.size() != static_cast<size_t>(7) * cur.size())
            return reject(at + "surface has " + std::to_string(v.coords.size()) + " coordinates, expected " +
                          std::to_string(7 * cur.size()));
        for (const auto& x : v.coords) {
            if (sgn(x) < 0) return reject(at + "negative coordinate");
            if (mpz_sizeinbase(x.get_mpz_t(), 2) > opts.max_bits) return reject(at + "coordinate exceeds the bit cap");
        }
        if ((s.kind == StepKind::Almost) != v.almost.has_value())
            return reject(at + "step kind does not match the surface");
        if (v.almost && cur.index_of(v.almost->tet) < 0) return reject(at + "almost piece names an unknown tetrahedron");
        auto adm = check_admissible(cur, v);
        if (!adm.ok) return reject(at + "surface not admissible: " + adm.violations.front());
        try {
            auto comps = decompose_components(cur, v);
            if (comps.size() != 1 || comps[0].multiplicity != 1) return reject(at + "surface not connected");
            if (weight_euler(cur, v).euler != 2) return reject(at + "euler characteristic is not 2");
        } catch (const SurfaceTooLarge&) {
            return reject(at + "surface too large to check");
        }

        Triangulation expect;
        if (s.kind == StepKind::Normal) {
            if (is_vertex_link(cur, v)) return reject(at + "surface is a vertex link");
            try {
                expect = crush_polarization(cur, polarization_of(cur, v));
            } catch (const CrushObstructed& e) {
                return reject(at + "crushing obstructed: " + e.what());
            } catch (const std::exception& e) {
                return reject(at + "cannot crush: " + e.what());
            }
            if (!is_identical(expect, s.result)) return reject(at + "result differs from the crushed triangulation");
        } else {
            const int atet = cur.index_of(v.almost->tet);
            std::vector<int> comp;
            for (const auto& k : cur.components())
                if (std::find(k.begin(), k.end(), atet) != k.end()) comp = k;
            for (int i2 = 0; i2 < cur.size(); ++i2)
                if (std::find(comp.begin(), comp.end(), i2) == comp.end())
                    for (int d = 0; d < kDiskTypes; ++d)
                        if (sgn(v.at(i2, d)) != 0) return reject(at + "surface leaves its component");
            try {
                auto r = both_sides_verdict(cur.induced(comp), restrict_surface(v, comp));
                if (r.verdict != Verdict::Sphere) return reject(at + "normalization inconclusive: " + r.reason);
            } catch (const SurfaceTooLarge&) {
                return reject(at + "surface too large to normalize");
            }
            expect = cur.induced(complement(cur, comp));
            if (!is_identical(expect, s.result)) return reject(at + "result differs from the remaining components");
        }
        cur = s.result;
    }
    if (!cur.empty()) return reject("nonempty terminal");
    return {true, ""};
}

Recognition recognize(const Triangulation& t, bool trace) {
    Recognition r;
    if (t.empty()) {
        r.reason = "empty input is not S^3";
        return r;
    }
    if (!t.is_closed()) {
        r.reason = "triangulation has boundary";
        return r;
    }
    std::string why;
    if (!closed_manifold_homology_sphere(t, why)) {
        r.answer = Answer::NotSphere;
        r.reason = why;
        return r;
    }
    CertifyLog log;
    log.with_normalization_trace = trace;
    auto c = certify(t, &log);
    if (trace) r.trace = log.trace;
    if (!c) {
        r.answer = Answer::NotSphere;
        r.reason = log.failure;
        return r;
    }
    auto v = verify(t, *c);
    if (!v.accepted) throw std::logic_error("generated certificate rejected: " + v.reason);
    r.answer = Answer::Sphere;
    r.certificate = std::move(c);
    return r;
}

BoundarySummary boundary_summary(const Triangulation& t) {
    BoundarySummary b;
    Skeleton s(t);
    std::vector<std::pair<int, int>> faces;
    for (int a = 0; a < t.size(); ++a)
        for (int f = 0; f < 4; ++f)
            if (!t.adjacent(a, f)) faces.emplace_back(a, f);
    b.faces = static_cast<long>(faces.size());
    for (const auto& e : s.edges()) b.edges += e.boundary;
    std::set<int> verts;
    for (auto [a, f] : faces)
        for (int x = 0; x < 4; ++x)
            if (x != f) verts.insert(s.vertex_of(a, x));
    b.vertices = static_cast<long>(verts.size());
    b.euler = b.vertices - b.edges + b.faces;
    detail::UnionFind uf(static_cast<int>(faces.size()));
    std::vector<int> first(s.edges().size(), -1);
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        auto [a, f] = faces[i];
        for (int e = 0; e < 6; ++e) {
            if (kEdgeVertices[e][0] == f || kEdgeVertices[e][1] == f) continue;
            int cls = s.edge_of(a, e);
            if (first[cls] < 0) first[cls] = i;
            else uf.unite(first[cls], i);
        }
    }
    std::set<int> roots;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) roots.insert(uf.find(i));
    b.components = static_cast<int>(roots.size());
    return b;
}

BallRecognition recognize_ball(const Triangulation& t) {
    BallRecognition r;
    if (t.empty() || t.is_closed()) {
        r.reason = "triangulation has no boundary";
        return r;
    }
    r.boundary = boundary_summary(t);
    r.answer = Answer::NotSphere;
    if (!is_three_manifold(t)) {
        r.reason = "not a 3-manifold";
        return r;
    }
    if (r.boundary.components != 1) {
        r.reason = "boundary has " + std::to_string(r.boundary.components) + " components";
        return r;
    }
    if (r.boundary.euler != 2) {
        r.reason = "boundary euler characteristic is " + std::to_string(r.boundary.euler);
        return r;
    }
    auto d = recognize(double_along_boundary(t));
    if (d.answer != Answer::Sphere) {
        r.reason = "double is not S^3: " + d.reason;
        return r;
    }
    r.answer = Answer::Sphere;
    r.double_certificate = std::move(d.certificate);
    return r;
}

}  // namespace spherecheck
