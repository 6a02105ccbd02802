#pragma once

#include "spherecheck/perm4.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spherecheck {

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& msg);
    int line;
    int column;
    std::string message;
};

struct TriangulationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Face `face` of the owning tetrahedron is glued to face `face` of `tet`;
// `perm` maps the owner's vertex labels to those of `tet`.
struct Gluing {
    int tet;
    int face;
    Perm4 perm;
    bool operator==(const Gluing&) const = default;
};

struct Pairing {
    int tet_a, face_a, tet_b, face_b;
    Perm4 perm;
    bool operator==(const Pairing&) const = default;
};

// Tetrahedra are stored in byte-lexicographic name order, which makes the
// representation canonical: equal objects serialize identically.
class Triangulation {
public:
    class Builder {
    public:
        void add_tet(const std::string& name);
        void glue(const std::string& a, int fa, const std::string& b, int fb, Perm4 perm);
        Triangulation build() const;

    private:
        struct Raw {
            std::string a;
            int fa;
            std::string b;
            int fb;
            Perm4 perm;
        };
        std::vector<std::string> names_;
        std::vector<Raw> glues_;
    };

    Triangulation() = default;

    static Triangulation parse(std::string_view text);
    std::string serialize() const;

    int size() const { return static_cast<int>(names_.size()); }
    bool empty() const { return names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int tet) const { return names_[tet]; }
    int index_of(std::string_view name) const;

    const std::optional<Gluing>& adjacent(int tet, int face) const { return adj_[tet][face]; }
    bool is_closed() const;
    std::vector<Pairing> pairings() const;

    // Connected components, each sorted; components ordered by first tetrahedron.
    std::vector<std::vector<int>> components() const;
    // Sub-triangulation on the given tetrahedra (gluings leaving the set are dropped).
    Triangulation induced(const std::vector<int>& tets) const;

    bool operator==(const Triangulation&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<std::array<std::optional<Gluing>, 4>> adj_;
};

inline bool is_identical(const Triangulation& a, const Triangulation& b) { return a == b; }

// Closed triangulation obtained from two copies glued along their common boundary.
// Copies of tetrahedron X are named X' (more primes on collision) and use the
// vertex relabeling (2 3).
Triangulation double_along_boundary(const Triangulation& t);

// Every labelled closed triangulation on tetrahedra "A", "B", ... (odd gluings only).
std::vector<Triangulation> closed_census(int ntets);

}  // namespace spherecheck
