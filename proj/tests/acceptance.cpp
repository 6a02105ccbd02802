// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "algebra_oracles.hpp"
#include "cone_oracle.hpp"
#include "crush_oracle.hpp"
#include "fixtures.hpp"
#include "mutations.hpp"
#include "surfaces.hpp"

#include "spherecheck/crush.hpp"
#include "spherecheck/enumerate.hpp"
#include "spherecheck/explicit_surface.hpp"
#include "spherecheck/homology.hpp"
#include "spherecheck/normalize.hpp"
#include "spherecheck/recognizer.hpp"
#include "spherecheck/skeleton.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace spherecheck;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream note;
    int failures = 0;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (failures++ < 3) note << (note.tellp() > 0 ? "; " : "") << what;
        ok = false;
    }
};

struct Case {
    Triangulation t;
    SurfaceVector v;
    std::string origin;
};

// Shared across criteria: certificates from 1-3 and the almost normal spheres met on the way.
struct Corpus {
    std::vector<std::pair<Triangulation, Certificate>> certified;
    std::vector<Case> almost;
    long tightenings = 0, drops_checked = 0;
} corpus;

bool screened_sphere(const Triangulation& t) {
    return t.is_closed() && is_three_manifold(t) && t.components().size() == 1 && is_homology_sphere(t);
}

void collect_almost(const Triangulation& t, const std::string& origin) {
    for (const auto& v : almost_sphere_candidates(t)) corpus.almost.push_back({t, v, origin});
}

void collect_steps(const Triangulation& t, const Certificate& c) {
    corpus.certified.emplace_back(t, c);
    Triangulation cur = c.base;
    for (const auto& s : c.steps) {
        if (s.kind == StepKind::Almost) {
            int atet = cur.index_of(s.surface.almost->tet);
            for (const auto& k : cur.components())
                if (std::find(k.begin(), k.end(), atet) != k.end())
                    corpus.almost.push_back({cur.induced(k), restrict_surface(s.surface, k), "certificate step"});
        }
        cur = s.result;
    }
}

void criterion1(Check& c) {
    auto t = fixtures::one_tet_sphere();
    c.expect(screened_sphere(t), "not a homology sphere");
    c.expect(!find_nontrivial_normal_sphere(t), "found a non-trivial normal sphere");
    auto s = find_almost_normal_sphere(t);
    c.expect(s.has_value(), "no almost normal sphere");
    if (!s) return;
    int triangles = 0, quads = 0;
    for (int d = 0; d < 4; ++d) triangles += static_cast<int>(s->at(0, d).get_si());
    for (int d = 4; d < 7; ++d) quads += static_cast<int>(s->at(0, d).get_si());
    c.expect(triangles == 2 && quads == 0 && s->almost && s->almost->kind == AlmostKind::Octagon,
             "sphere is not two triangles and an octagon");
    ExplicitSurface x(t, *s);
    long faces = static_cast<long>(x.trace().size()), edges = x.live_arcs(), verts = x.live_points();
    c.expect(faces == 3 && edges == 7 && verts == 6, "cell counts differ from 3, 7, 6");
    c.expect(weight_euler(t, *s).euler == 2, "euler is not 2");
    auto link = vertex_link_vector(t, Skeleton(t), 0);
    bool plus_link = normalize_slow(t, *s, Side::Plus) == link && normalize_fast(t, *s, Side::Plus) == link;
    bool minus_empty = normalize_slow(t, *s, Side::Minus).is_zero() && normalize_fast(t, *s, Side::Minus).is_zero();
    c.expect(plus_link && minus_empty, "normalizations are not link and empty");
    auto r = recognize(t);
    c.expect(r.answer == Answer::Sphere, "not recognized");
    if (r.certificate) {
        c.expect(r.certificate->steps.size() == 1, "certificate has more than one step");
        c.expect(verify(t, *r.certificate).accepted, "certificate rejected");
        collect_steps(t, *r.certificate);
    }
    c.note << "euler " << verts << " - " << edges << " + " << faces << " = 2, plus side link, minus side empty";
}

void criterion2(Check& c) {
    long total = 0, spheres = 0, screened = 0, accepted_bad = 0;
    std::vector<Certificate> donors;
    for (const auto& t : {fixtures::one_tet_sphere(), fixtures::simplex_boundary()}) donors.push_back(*certify(t));
    for (int n = 1; n <= 2; ++n)
        for (const auto& t : closed_census(n)) {
            ++total;
            auto r = recognize(t);
            if (screened_sphere(t)) {
                c.expect(r.answer == Answer::Sphere, "homology sphere not recognized: " + r.reason);
                if (r.certificate) {
                    c.expect(verify(t, *r.certificate).accepted, "certificate rejected");
                    collect_steps(t, *r.certificate);
                    collect_almost(t, "census");
                    ++spheres;
                }
                continue;
            }
            ++screened;
            c.expect(r.answer == Answer::NotSphere && !r.certificate && r.reason.rfind("step", 0) != 0,
                     "non-homology-sphere not rejected at the screen");
            for (auto d : donors) {
                d.base = t;
                accepted_bad += verify(t, d).accepted;
            }
            for (const auto& [u, cert] : corpus.certified) {
                if (u.size() != t.size()) continue;
                Certificate d = cert;
                d.base = t;
                accepted_bad += verify(t, d).accepted;
                break;
            }
        }
    c.expect(accepted_bad == 0, "verifier accepted a non-sphere");
    c.note << total << " triangulations, " << spheres << " spheres certified, " << screened
           << " rejected at the screen, " << accepted_bad << " bad acceptances";
}

void criterion3(Check& c) {
    auto dbl = double_along_boundary(fixtures::single_tet());
    for (const auto& [name, t] : {std::pair<std::string, Triangulation>{"double", dbl},
                                  {"simplex boundary", fixtures::simplex_boundary()}}) {
        auto r = recognize(t);
        c.expect(r.answer == Answer::Sphere, name + " not recognized");
        if (!r.certificate) continue;
        c.expect(verify(t, *r.certificate).accepted, name + " certificate rejected");
        collect_steps(t, *r.certificate);
        collect_almost(t, name);
        c.note << name << " " << r.certificate->steps.size() << " steps, ";
    }
    auto b = recognize_ball(fixtures::single_tet());
    c.expect(b.answer == Answer::Sphere, "tetrahedron not recognized as a ball");
    c.expect(b.double_certificate && verify(dbl, *b.double_certificate).accepted, "ball evidence rejected");
    c.note << "tetrahedron is a ball";
    collect_almost(fixtures::one_tet_sphere(), "worked example");
}

void criterion4(Check& c) {
    long sides = 0;
    for (const auto& k : corpus.almost)
        for (Side side : {Side::Plus, Side::Minus}) {
            NormalizeStats st;
            SurfaceVector slow, fast;
            try {
                slow = normalize_slow(k.t, k.v, side, {}, &st);
                fast = normalize_fast(k.t, k.v, side);
            } catch (const std::exception& e) {
                c.expect(false, k.origin + ": " + e.what());
                continue;
            }
            ++sides;
            c.expect(slow == fast, k.origin + ": fast and slow differ on " + format_almost(*k.v.almost));
            for (std::uint64_t seed : {11u, 23u, 37u}) {
                NormalizeOptions o;
                o.seed = seed;
                c.expect(normalize_slow(k.t, k.v, side, o) == slow, k.origin + ": random order changes the result");
            }
            c.expect(check_admissible(k.t, slow).ok, "normalization is not admissible");
            corpus.tightenings += st.tightenings;
            for (size_t i = 0; i < st.removed.size(); ++i) {
                ++corpus.drops_checked;
                c.expect(st.removed[i] == 2 && st.weights[i] - st.weights[i + 1] == 2, "tightening did not remove 2 points");
            }
        }
    c.note << corpus.almost.size() << " almost normal spheres, " << sides << " side normalizations, 3 random orders each";
}

void criterion5(Check& c) {
    std::mt19937 rng(2024);
    long total = 0;
    for (const auto& [t, cert] : corpus.certified)
        for (int i = 0; i < 100; ++i) {
            auto m = mutation::mutate(cert, rng);
            auto r = verify(t, m.cert);
            ++total;
            c.expect(!r.accepted, "accepted mutant: " + m.what);
            c.expect(mutation::step_specific(r.reason), "vague reason '" + r.reason + "' for " + m.what);
        }
    c.note << total << " mutants of " << corpus.certified.size() << " certificates rejected";
}

void criterion6(Check& c) {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6), k = 1 + static_cast<int>(rng() % 6);
        auto a = oracle::random_matrix(rng, r, k, 20);
        auto s = smith_normal_form(a);
        c.expect(s.factors == oracle::elementary_invariant_factors(a), "factors differ from elementary reduction");
        for (int i = 0; i + 1 < s.rank; ++i)
            c.expect(mpz_divisible_p(s.factors[i + 1].get_mpz_t(), s.factors[i].get_mpz_t()), "divisibility fails");
        if (r == k) {
            Integer prod = s.rank == r ? Integer(1) : Integer(0);
            for (const auto& f : s.factors) prod *= f;
            c.expect(prod == abs(oracle::det(a)), "|det| not preserved");
        }
    }
    int compared = 0, obstructed = 0;
    std::mt19937 trng(66);
    while (compared < 50) {
        int n = 2 + static_cast<int>(trng() % 3);
        auto t = fixtures::random_closed(n, trng);
        int tau = static_cast<int>(trng() % n), a = 1 + static_cast<int>(trng() % 3);
        auto expect = oracle::symbolic_crush(t, tau, a);
        if (!expect) {
            bool threw = false;
            try {
                crush_quad(t, t.name(tau), a);
            } catch (const CrushObstructed&) {
                threw = true;
            }
            c.expect(threw, "obstructed crush not reported");
            ++obstructed;
            continue;
        }
        auto res = crush_quad(t, t.name(tau), a);
        std::map<std::pair<std::string, int>, oracle::Glue> got;
        for (int j = 0; j < res.size(); ++j)
            for (int f = 0; f < 4; ++f)
                if (const auto& g = res.adjacent(j, f)) got[{res.name(j), f}] = {res.name(g->tet), g->face, oracle::arr(g->perm)};
        c.expect(got == *expect, "crush differs from the symbolic composition");
        ++compared;
    }
    c.note << "200 matrices, " << compared << " crushes (" << obstructed << " obstructed skipped)";
}

void criterion7(Check& c) {
    long cones = 0, rays = 0;
    auto check_cone = [&](const SolutionCone& cone) {
        ++cones;
        auto dd = vertex_solutions(cone);
        std::set<std::vector<long>> small;
        for (const auto& s : dd) {
            c.expect(satisfies(cone, s.ray), "ray violates the equations");
            Integer g = 0;
            for (const auto& x : s.ray) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            c.expect(g == 1, "ray is not primitive");
            bool fits = true;
            std::vector<long> r;
            for (const auto& x : s.ray) {
                fits &= x <= 4;
                r.push_back(x.get_si());
            }
            if (fits) small.insert(r);
            ++rays;
        }
        c.expect(small == oracle::box_extremal_rays(cone, 4).rays, "rays differ from the box oracle");
    };
    for (int n = 1; n <= 2; ++n)
        for (const auto& t : closed_census(n)) {
            check_cone(normal_cone(t));
            for (int tet = 0; tet < n; ++tet)
                for (int type = 1; type <= 3; ++type) check_cone(octagon_cone(t, tet, type));
        }
    c.note << cones << " cones, " << rays << " rays";
}

void criterion8(Check& c) {
    long residuals = 0;
    for (const auto& k : corpus.almost) {
        c.expect(check_admissible(k.t, k.v).ok, "enumerated surface not admissible");
        ++residuals;
    }
    long crushes = 0;
    for (const auto& [t, cert] : corpus.certified) {
        Triangulation cur = cert.base;
        for (const auto& s : cert.steps) {
            c.expect(check_admissible(cur, s.surface).ok, "certificate surface not admissible");
            ++residuals;
            if (s.kind == StepKind::Normal) {
                auto p = polarization_of(cur, s.surface);
                int nonzero = 0;
                for (const auto& [name, q] : p) nonzero += q != 0;
                c.expect(s.result.size() + nonzero == cur.size(), "crush size law fails");
                for (const auto& k : s.result.components())
                    c.expect(screened_sphere(s.result.induced(k)), "crush produced a non-homology-sphere component");
                ++crushes;
            }
            cur = s.result;
        }
    }
    for (int n = 1; n <= 2; ++n)
        for (const auto& t : closed_census(n))
            if (is_three_manifold(t))
                for (const auto& v : normal_vertex_surfaces(t)) {
                    c.expect(check_admissible(t, v).ok, "vertex surface not admissible");
                    ++residuals;
                }
    std::mt19937 rng(8);
    auto samples = testsurf::small_admissible(rng, 3000);
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < samples.size(); ++i) groups[samples[i].first.serialize()].push_back(i);
    long sums = 0;
    for (const auto& [key, idx] : groups)
        for (size_t i = 0; i < idx.size() && i < 40; ++i)
            for (size_t j = i + 1; j < idx.size() && j < 40; ++j) {
                const auto& t = samples[idx[i]].first;
                const auto& f = samples[idx[i]].second;
                const auto& g = samples[idx[j]].second;
                SurfaceVector h;
                try {
                    h = haken_sum(t, f, g);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                auto a = weight_euler(t, f), b = weight_euler(t, g), s = weight_euler(t, h);
                c.expect(s.weight == a.weight + b.weight && s.euler == a.euler + b.euler, "haken sum not additive");
                ++sums;
            }
    c.expect(sums > 0, "no compatible haken sums sampled");
    c.expect(corpus.drops_checked > 0, "no tightenings observed");
    c.note << residuals << " residuals, " << sums << " haken sums, " << corpus.drops_checked << " tightenings, "
           << crushes << " crushes";
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        std::function<void(Check&)> run;
        double limit;  // seconds, 0 for none
    };
    const std::vector<Entry> entries = {
        {1, "worked example", criterion1, 5},
        {2, "census scan", criterion2, 600},
        {3, "doubling and balls", criterion3, 60},
        {4, "fast and slow normalization agree", criterion4, 0},
        {5, "mutated certificates rejected", criterion5, 0},
        {6, "algebra oracles", criterion6, 0},
        {7, "cone oracle", criterion7, 0},
        {8, "invariant suite", criterion8, 0},
    };
    bool all = true;
    for (const auto& e : entries) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (e.limit > 0 && secs > e.limit) c.expect(false, "over the time limit");
        all &= c.ok;
        std::printf("criterion %d %s  %s (%.1f s): %s\n", e.id, c.ok ? "PASS" : "FAIL", e.title, secs, c.note.str().c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
