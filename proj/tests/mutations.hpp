#pragma once
// Single-field edits of a certificate, each of which a correct verifier must reject.

#include "spherecheck/recognizer.hpp"

#include <random>
#include <string>

namespace mutation {

using namespace spherecheck;

enum class Kind { Coordinate, Permutation, StepDeletion, ResultEdit };

struct Mutant {
    Kind kind;
    Certificate cert;
    std::string what;
};

inline Triangulation rebuild(const Triangulation& t, const std::vector<Pairing>& ps, const std::vector<std::string>& names) {
    Triangulation::Builder b;
    for (const auto& n : names) b.add_tet(n);
    for (const auto& p : ps) b.glue(t.name(p.tet_a), p.face_a, t.name(p.tet_b), p.face_b, p.perm);
    return b.build();
}

// Rotating the three labels off the glued face keeps the permutation odd and face-compatible.
inline Triangulation rotate_gluing(const Triangulation& t, size_t which) {
    auto ps = t.pairings();
    auto& p = ps[which % ps.size()];
    int rest[3], k = 0;
    for (int x = 0; x < 4; ++x)
        if (x != p.face_a) rest[k++] = x;
    Perm4 c;
    {
        int img[4] = {0, 1, 2, 3};
        img[rest[0]] = rest[1];
        img[rest[1]] = rest[2];
        img[rest[2]] = rest[0];
        c = Perm4(img[0], img[1], img[2], img[3]);
    }
    p.perm = p.perm * c;
    return rebuild(t, ps, t.names());
}

inline Mutant mutate(const Certificate& original, std::mt19937& rng) {
    auto pick = [&](size_t n) { return static_cast<size_t>(rng() % n); };
    for (;;) {
        Certificate c = original;
        const size_t n = c.steps.size();
        switch (static_cast<Kind>(pick(4))) {
        case Kind::Coordinate: {
            if (n == 0) break;
            size_t s = pick(n);
            auto& coords = c.steps[s].surface.coords;
            if (coords.empty()) break;
            size_t i = pick(coords.size());
            int delta = (coords[i] == 0 || rng() % 2) ? 1 : -1;
            coords[i] += delta;
            return {Kind::Coordinate, c,
                    "step " + std::to_string(s + 1) + " coordinate " + std::to_string(i) + (delta > 0 ? " +1" : " -1")};
        }
        case Kind::Permutation: {
            std::vector<size_t> with;  // steps whose result has gluings
            for (size_t s = 0; s < n; ++s)
                if (!c.steps[s].result.pairings().empty()) with.push_back(s);
            if (with.empty()) {
                if (c.base.pairings().empty()) break;
                size_t g = pick(c.base.pairings().size());
                c.base = rotate_gluing(c.base, g);
                return {Kind::Permutation, c, "base gluing " + std::to_string(g) + " rotated"};
            }
            size_t s = with[pick(with.size())];
            size_t g = pick(c.steps[s].result.pairings().size());
            c.steps[s].result = rotate_gluing(c.steps[s].result, g);
            return {Kind::Permutation, c, "step " + std::to_string(s + 1) + " result gluing " + std::to_string(g) + " rotated"};
        }
        case Kind::StepDeletion: {
            if (n == 0) break;
            size_t s = pick(n);
            c.steps.erase(c.steps.begin() + static_cast<long>(s));
            return {Kind::StepDeletion, c, "step " + std::to_string(s + 1) + " deleted"};
        }
        case Kind::ResultEdit: {
            if (n == 0) break;
            size_t s = pick(n);
            Triangulation& r = c.steps[s].result;
            auto ps = r.pairings();
            auto names = r.names();
            int how = static_cast<int>(pick(3));
            if (how == 1 && !names.empty()) {
                std::string gone = names[pick(names.size())];
                std::vector<Pairing> keep;
                for (const auto& p : ps)
                    if (r.name(p.tet_a) != gone && r.name(p.tet_b) != gone) keep.push_back(p);
                std::erase(names, gone);
                Triangulation::Builder b;
                for (const auto& x : names) b.add_tet(x);
                for (const auto& p : keep) b.glue(r.name(p.tet_a), p.face_a, r.name(p.tet_b), p.face_b, p.perm);
                r = b.build();
                return {Kind::ResultEdit, c, "step " + std::to_string(s + 1) + " result lost " + gone};
            }
            if (how == 2 && !ps.empty()) {
                size_t g = pick(ps.size());
                ps.erase(ps.begin() + static_cast<long>(g));
                r = rebuild(r, ps, names);
                return {Kind::ResultEdit, c, "step " + std::to_string(s + 1) + " result lost gluing " + std::to_string(g)};
            }
            std::string extra = "Z";
            while (r.index_of(extra) >= 0) extra += "z";
            names.push_back(extra);
            r = rebuild(r, ps, names);
            return {Kind::ResultEdit, c, "step " + std::to_string(s + 1) + " result gained " + extra};
        }
        }
    }
}

// Reasons from the verifier name the base, a step, or the terminal triangulation.
inline bool step_specific(const std::string& reason) {
    return reason.rfind("base: ", 0) == 0 || reason.rfind("step ", 0) == 0 || reason == "nonempty terminal";
}

}  // namespace mutation
