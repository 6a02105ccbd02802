#pragma once

#include "spherecheck/integer.hpp"
#include "spherecheck/triangulation.hpp"

#include <array>
#include <vector>

namespace spherecheck {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Integer& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithForm {
    IntMatrix diagonal;
    int rank = 0;
    std::vector<Integer> factors;  // d_1 | d_2 | ... | d_rank, all positive
};

SmithForm smith_normal_form(const IntMatrix& a);

struct BoundaryMaps {
    IntMatrix d1, d2, d3;  // C1->C0, C2->C1, C3->C2 over skeleton classes
};

// Throws TriangulationError for a non-closed triangulation.
BoundaryMaps boundary_maps(const Triangulation& t);

struct HomologySummary {
    std::array<long, 4> betti{};
    std::array<std::vector<Integer>, 4> torsion;
};

// Preconditions: closed and a three-manifold (TriangulationError otherwise).
HomologySummary homology(const Triangulation& t);
bool is_homology_sphere(const Triangulation& t);

std::string describe(const HomologySummary& h);

}  // namespace spherecheck
