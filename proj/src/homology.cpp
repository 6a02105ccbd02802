#include "spherecheck/homology.hpp"

#include "spherecheck/skeleton.hpp"

#include <sstream>

namespace spherecheck {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (sgn(at(r, k)) == 0) continue;
            for (int c = 0; c < o.cols_; ++c) out.at(r, c) += at(r, k) * o.at(k, c);
        }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

SmithForm smith_normal_form(const IntMatrix& input) {
    IntMatrix a = input;
    const int m = a.rows(), n = a.cols();
    auto swap_rows = [&](int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(a.at(r, i), a.at(r, j));
    };
    int t = 0;
    for (; t < std::min(m, n); ++t) {
        for (;;) {
            // Smallest nonzero pivot keeps entries small.
            int pr = -1, pc = -1;
            for (int r = t; r < m; ++r)
                for (int c = t; c < n; ++c)
                    if (sgn(a.at(r, c)) != 0 && (pr < 0 || mpz_cmpabs(a.at(r, c).get_mpz_t(), a.at(pr, pc).get_mpz_t()) < 0)) {
                        pr = r;
                        pc = c;
                    }
            if (pr < 0) goto done;
            swap_rows(t, pr);
            swap_cols(t, pc);
            bool clean = true;
            Integer q;
            for (int r = t + 1; r < m; ++r) {
                if (sgn(a.at(r, t)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a.at(r, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                for (int c = t; c < n; ++c) a.at(r, c) -= q * a.at(t, c);
                if (sgn(a.at(r, t)) != 0) clean = false;
            }
            for (int c = t + 1; c < n; ++c) {
                if (sgn(a.at(t, c)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), a.at(t, c).get_mpz_t(), a.at(t, t).get_mpz_t());
                for (int r = t; r < m; ++r) a.at(r, c) -= q * a.at(r, t);
                if (sgn(a.at(t, c)) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into the pivot row and repeat.
            int bad = -1;
            for (int r = t + 1; r < m && bad < 0; ++r)
                for (int c = t + 1; c < n; ++c)
                    if (!mpz_divisible_p(a.at(r, c).get_mpz_t(), a.at(t, t).get_mpz_t())) {
                        bad = r;
                        break;
                    }
            if (bad < 0) break;
            for (int c = t; c < n; ++c) a.at(t, c) += a.at(bad, c);
        }
        if (sgn(a.at(t, t)) < 0) a.at(t, t) = -a.at(t, t);
    }
done:
    SmithForm out;
    out.rank = t;
    for (int i = 0; i < t; ++i) out.factors.push_back(a.at(i, i));
    out.diagonal = std::move(a);
    return out;
}

namespace {

int triple_sign(int x, int y, int z) {
    int inv = (x > y) + (x > z) + (y > z);
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

BoundaryMaps boundary_maps(const Triangulation& t) {
    if (!t.is_closed()) throw TriangulationError("boundary maps require a closed triangulation");
    Skeleton s(t);
    const int nv = static_cast<int>(s.vertices().size()), ne = static_cast<int>(s.edges().size()),
              nf = static_cast<int>(s.faces().size()), nt = t.size();
    BoundaryMaps b{IntMatrix(nv, ne), IntMatrix(ne, nf), IntMatrix(nf, nt)};
    for (int c = 0; c < ne; ++c) {
        const auto& r = s.edges()[c].slots[0];
        b.d1.at(s.vertex_of(r.tet, kEdgeVertices[r.edge][1]), c) += 1;
        b.d1.at(s.vertex_of(r.tet, kEdgeVertices[r.edge][0]), c) -= 1;
    }
    for (int c = 0; c < nf; ++c) {
        const auto& fc = s.faces()[c];
        int v[3], k = 0;
        for (int x = 0; x < 4; ++x)
            if (x != fc.face) v[k++] = x;
        const int terms[3][3] = {{v[1], v[2], 1}, {v[0], v[2], -1}, {v[0], v[1], 1}};
        for (const auto& tm : terms) {
            int e = edge_index(tm[0], tm[1]);
            b.d2.at(s.edge_of(fc.tet, e), c) += tm[2] * s.edge_sign(fc.tet, e);
        }
    }
    for (int a = 0; a < nt; ++a)
        for (int f = 0; f < 4; ++f) {
            int c = s.face_of(a, f);
            const auto& fc = s.faces()[c];
            int sign = 1;
            if (fc.tet != a || fc.face != f) {
                int v[3], k = 0;
                for (int x = 0; x < 4; ++x)
                    if (x != fc.face) v[k++] = x;
                const Perm4& p = fc.other->perm;
                sign = triple_sign(p[v[0]], p[v[1]], p[v[2]]);
            }
            b.d3.at(c, a) += (f % 2 == 0 ? 1 : -1) * sign;
        }
    return b;
}

HomologySummary homology(const Triangulation& t) {
    if (!t.is_closed()) throw TriangulationError("homology requires a closed triangulation");
    if (!is_three_manifold(t)) throw TriangulationError("homology requires a three-manifold");
    BoundaryMaps b = boundary_maps(t);
    SmithForm s1 = smith_normal_form(b.d1), s2 = smith_normal_form(b.d2), s3 = smith_normal_form(b.d3);
    HomologySummary h;
    h.betti[0] = b.d1.rows() - s1.rank;
    h.betti[1] = b.d1.cols() - s1.rank - s2.rank;
    h.betti[2] = b.d2.cols() - s2.rank - s3.rank;
    h.betti[3] = b.d3.cols() - s3.rank;
    const SmithForm* next[3] = {&s1, &s2, &s3};
    for (int k = 0; k < 3; ++k)
        for (const auto& d : next[k]->factors)
            if (d > 1) h.torsion[k].push_back(d);
    return h;
}

bool is_homology_sphere(const Triangulation& t) {
    HomologySummary h = homology(t);
    if (h.betti != std::array<long, 4>{1, 0, 0, 1}) return false;
    for (const auto& tor : h.torsion)
        if (!tor.empty()) return false;
    return true;
}

std::string describe(const HomologySummary& h) {
    std::ostringstream os;
    for (int k = 0; k < 4; ++k) {
        if (k) os << ' ';
        os << "H" << k << "=";
        bool first = true;
        if (h.betti[k] > 0) {
            os << "Z";
            if (h.betti[k] > 1) os << "^" << h.betti[k];
            first = false;
        }
        for (const auto& d : h.torsion[k]) {
            os << (first ? "" : "+") << "Z/" << d.get_str();
            first = false;
        }
        if (first) os << "0";
    }
    return os.str();
}

}  // namespace spherecheck
