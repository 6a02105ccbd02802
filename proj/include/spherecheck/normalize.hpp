#pragma once

#include "spherecheck/explicit_surface.hpp"
#include "spherecheck/normal.hpp"
#include "spherecheck/triangulation.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spherecheck {

// Transverse sides of an almost normal sphere. Plus holds the exceptional disk on the
// smaller tetrahedron edge (octagon) or the surgery disk (annulus).
enum class Side { Plus, Minus };

struct NormalizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NormalizeOptions {
    // Random choice among available tightening moves instead of the fixed order.
    std::optional<std::uint64_t> seed;
    // Keep simple curves until the end instead of surgering them as they appear.
    bool defer_surgery = false;
    std::vector<std::string>* trace = nullptr;
};

struct NormalizeStats {
    int tightenings = 0;
    int surgeries = 0;
    int batches = 0;
    std::vector<long> weights;  // explicit weight before the first move and after each move
    std::vector<int> removed;   // points removed by each move
    int catalogue_violations = 0;
};

// G-tightening on the explicit surface; the normal vector that remains on the chosen side.
SurfaceVector normalize_slow(const Triangulation& t, const SurfaceVector& v, Side side,
                             const NormalizeOptions& opts = {}, NormalizeStats* stats = nullptr);

struct BlockDecomposition {
    // Product blocks on the chosen side by component: counts per (tetrahedron, disk type).
    std::vector<SurfaceVector> components;
    // Normal disks of the surface not in a product block on that side.
    SurfaceVector core_disks;
    // Regions between consecutive disks on that side that are not product blocks.
    int core_blocks = 0;
};

BlockDecomposition block_decomposition(const Triangulation& t, const SurfaceVector& v, Side side);

// Tightening with whole product components pushed through at once; the untouched product
// part is added back as twice its block vectors.
SurfaceVector normalize_fast(const Triangulation& t, const SurfaceVector& v, Side side,
                             std::vector<std::string>* trace = nullptr, NormalizeStats* stats = nullptr);

enum class Verdict { Sphere, Inconclusive };

struct VerdictReport {
    Verdict verdict = Verdict::Inconclusive;
    SurfaceVector plus, minus;
    std::string reason;
};

// Sphere when each side normalizes to exactly the links of the vertices on that side, each once.
VerdictReport both_sides_verdict(const Triangulation& t, const SurfaceVector& v,
                                 std::vector<std::string>* trace = nullptr);

}  // namespace spherecheck
