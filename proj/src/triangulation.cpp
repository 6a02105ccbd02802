#include "spherecheck/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace spherecheck {

std::optional<Perm4> Perm4::from_string(std::string_view digits) {
    if (digits.size() != 4) return std::nullopt;
    int img[4];
    bool seen[4] = {false, false, false, false};
    for (int i = 0; i < 4; ++i) {
        char c = digits[i];
        if (c < '0' || c > '3') return std::nullopt;
        img[i] = c - '0';
        if (seen[img[i]]) return std::nullopt;
        seen[img[i]] = true;
    }
    return Perm4(img[0], img[1], img[2], img[3]);
}

std::string Perm4::str() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
    return s;
}

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
      line(l),
      column(c),
      message(msg) {}

namespace {

// Shared validation for a single face pairing; returns an error message or "".
std::string check_gluing(int fa, int fb, const Perm4& perm, bool same_tet) {
    if (fa < 0 || fa > 3 || fb < 0 || fb > 3) return "face label out of range";
    if (perm[fa] != fb) return "permutation does not carry face " + std::to_string(fa) + " to face " + std::to_string(fb);
    if (!perm.is_odd()) return "gluing permutation is even (orientation-preserving)";
    if (same_tet && fa == fb) return "face glued to itself";
    return "";
}

}  // namespace

void Triangulation::Builder::add_tet(const std::string& name) { names_.push_back(name); }

void Triangulation::Builder::glue(const std::string& a, int fa, const std::string& b, int fb, Perm4 perm) {
    glues_.push_back({a, fa, b, fb, perm});
}

Triangulation Triangulation::Builder::build() const {
    Triangulation t;
    t.names_ = names_;
    std::sort(t.names_.begin(), t.names_.end());
    if (std::adjacent_find(t.names_.begin(), t.names_.end()) != t.names_.end())
        throw TriangulationError("duplicate tetrahedron name");
    for (const auto& n : t.names_)
        if (n.empty()) throw TriangulationError("empty tetrahedron name");
    t.adj_.assign(t.names_.size(), {});
    for (const auto& g : glues_) {
        int ta = t.index_of(g.a), tb = t.index_of(g.b);
        if (ta < 0) throw TriangulationError("unknown tetrahedron '" + g.a + "'");
        if (tb < 0) throw TriangulationError("unknown tetrahedron '" + g.b + "'");
        std::string err = check_gluing(g.fa, g.fb, g.perm, ta == tb);
        if (!err.empty()) throw TriangulationError(err);
        if (t.adj_[ta][g.fa] || t.adj_[tb][g.fb]) throw TriangulationError("face glued twice");
        t.adj_[ta][g.fa] = Gluing{tb, g.fb, g.perm};
        t.adj_[tb][g.fb] = Gluing{ta, g.fa, g.perm.inverse()};
    }
    return t;
}

int Triangulation::index_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name,
                               [](const std::string& x, std::string_view y) { return std::string_view(x) < y; });
    if (it == names_.end() || *it != name) return -1;
    return static_cast<int>(it - names_.begin());
}

bool Triangulation::is_closed() const {
    for (const auto& faces : adj_)
        for (const auto& g : faces)
            if (!g) return false;
    return true;
}

std::vector<Pairing> Triangulation::pairings() const {
    std::vector<Pairing> out;
    for (int t = 0; t < size(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = adj_[t][f];
            if (!g) continue;
            if (std::pair(t, f) < std::pair(g->tet, g->face)) out.push_back({t, f, g->tet, g->face, g->perm});
        }
    return out;
}

std::string Triangulation::serialize() const {
    std::ostringstream os;
    os << "tri 1\n";
    for (const auto& n : names_) os << "tet " << n << "\n";
    for (const auto& p : pairings())
        os << "glue " << names_[p.tet_a] << ' ' << p.face_a << ' ' << names_[p.tet_b] << ' ' << p.face_b << ' '
           << p.perm.str() << "\n";
    return os.str();
}

std::vector<std::vector<int>> Triangulation::components() const {
    std::vector<int> comp(size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < size(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            out[id].push_back(t);
            for (const auto& g : adj_[t])
                if (g && comp[g->tet] < 0) {
                    comp[g->tet] = id;
                    stack.push_back(g->tet);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Triangulation Triangulation::induced(const std::vector<int>& tets) const {
    std::vector<int> keep(size(), -1);
    std::vector<int> sorted = tets;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Triangulation t;
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
        keep[sorted[i]] = i;
        t.names_.push_back(names_[sorted[i]]);
    }
    t.adj_.assign(sorted.size(), {});
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        for (int f = 0; f < 4; ++f) {
            const auto& g = adj_[sorted[i]][f];
            if (g && keep[g->tet] >= 0) t.adj_[i][f] = Gluing{keep[g->tet], g->face, g->perm};
        }
    return t;
}

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

int parse_face(const Token& tok, int line) {
    if (tok.text.size() != 1 || tok.text[0] < '0' || tok.text[0] > '3')
        throw ParseError(line, tok.column, "expected face label 0-3, got '" + tok.text + "'");
    return tok.text[0] - '0';
}

}  // namespace

Triangulation Triangulation::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    bool header = false;
    std::set<std::string> names;
    std::set<std::pair<std::string, int>> used;
    Triangulation::Builder b;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.resize(hash);
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;
        if (!header) {
            if (kw != "tri") throw ParseError(lineno, toks[0].column, "expected header 'tri 1'");
            if (toks.size() != 2 || toks[1].text != "1")
                throw ParseError(lineno, toks.size() > 1 ? toks[1].column : toks[0].column,
                                 "unsupported format version");
            header = true;
            continue;
        }
        if (kw == "tet") {
            if (toks.size() != 2) throw ParseError(lineno, toks[0].column, "expected 'tet <name>'");
            if (!names.insert(toks[1].text).second)
                throw ParseError(lineno, toks[1].column, "duplicate tetrahedron '" + toks[1].text + "'");
            b.add_tet(toks[1].text);
        } else if (kw == "glue") {
            if (toks.size() != 6)
                throw ParseError(lineno, toks[0].column, "expected 'glue <A> <fA> <B> <fB> <perm>'");
            for (int k : {1, 3})
                if (!names.count(toks[k].text))
                    throw ParseError(lineno, toks[k].column, "unknown tetrahedron '" + toks[k].text + "'");
            int fa = parse_face(toks[2], lineno);
            int fb = parse_face(toks[4], lineno);
            auto perm = Perm4::from_string(toks[5].text);
            if (!perm) throw ParseError(lineno, toks[5].column, "malformed permutation '" + toks[5].text + "'");
            std::string err = check_gluing(fa, fb, *perm, toks[1].text == toks[3].text);
            if (!err.empty()) throw ParseError(lineno, toks[5].column, err);
            if (!used.insert({toks[1].text, fa}).second)
                throw ParseError(lineno, toks[2].column, "face already glued");
            if (!used.insert({toks[3].text, fb}).second)
                throw ParseError(lineno, toks[4].column, "face already glued");
            b.glue(toks[1].text, fa, toks[3].text, fb, *perm);
        } else {
            throw ParseError(lineno, toks[0].column, "unknown directive '" + kw + "'");
        }
    }
    if (!header) throw ParseError(lineno + 1, 1, "missing header 'tri 1'");
    return b.build();
}

Triangulation double_along_boundary(const Triangulation& t) {
    if (t.is_closed()) throw TriangulationError("double requires a triangulation with boundary");
    const Perm4 rho = Perm4::transposition(2, 3);
    std::set<std::string> taken(t.names().begin(), t.names().end());
    std::vector<std::string> mirror(t.size());
    for (int i = 0; i < t.size(); ++i) {
        std::string m = t.name(i) + "'";
        while (taken.count(m)) m += "'";
        taken.insert(m);
        mirror[i] = m;
    }
    Triangulation::Builder b;
    for (int i = 0; i < t.size(); ++i) {
        b.add_tet(t.name(i));
        b.add_tet(mirror[i]);
    }
    for (const auto& p : t.pairings()) {
        b.glue(t.name(p.tet_a), p.face_a, t.name(p.tet_b), p.face_b, p.perm);
        b.glue(mirror[p.tet_a], rho[p.face_a], mirror[p.tet_b], rho[p.face_b], rho * p.perm * rho.inverse());
    }
    for (int i = 0; i < t.size(); ++i)
        for (int f = 0; f < 4; ++f)
            if (!t.adjacent(i, f)) b.glue(t.name(i), f, mirror[i], rho[f], rho);
    return b.build();
}

}  // namespace spherecheck

namespace spherecheck {

std::vector<Triangulation> closed_census(int ntets) {
    std::vector<Triangulation> out;
    if (ntets <= 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::string> names;
    for (int i = 0; i < ntets; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
    std::vector<Perm4> odd;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    auto p = Perm4::from_string(std::string{char('0' + a), char('0' + b), char('0' + c), char('0' + d)});
                    if (p && p->is_odd()) odd.push_back(*p);
                }
    const int slots = 4 * ntets;
    std::vector<int> partner(slots, -1);
    std::vector<std::pair<std::pair<int, int>, Perm4>> chosen;
    // Recursive enumeration of perfect matchings of face slots with odd gluing maps.
    auto rec = [&](auto&& self) -> void {
        int s = 0;
        while (s < slots && partner[s] >= 0) ++s;
        if (s == slots) {
            Triangulation::Builder b;
            for (const auto& n : names) b.add_tet(n);
            for (const auto& [pr, perm] : chosen)
                b.glue(names[pr.first / 4], pr.first % 4, names[pr.second / 4], pr.second % 4, perm);
            out.push_back(b.build());
            return;
        }
        for (int u = s + 1; u < slots; ++u) {
            if (partner[u] >= 0) continue;
            partner[s] = u;
            partner[u] = s;
            for (const Perm4& p : odd) {
                if (p[s % 4] != u % 4) continue;
                chosen.push_back({{s, u}, p});
                self(self);
                chosen.pop_back();
            }
            partner[s] = partner[u] = -1;
        }
    };
    rec(rec);
    return out;
}

}  // namespace spherecheck
