#pragma once

#include "spherecheck/normal.hpp"
#include "spherecheck/triangulation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spherecheck {

enum class StepKind { Normal, Almost };

struct Step {
    StepKind kind = StepKind::Normal;
    SurfaceVector surface;  // on the triangulation the step starts from
    Triangulation result;
    bool operator==(const Step&) const = default;
};

struct Certificate {
    Triangulation base;
    std::vector<Step> steps;
    bool operator==(const Certificate&) const = default;

    std::string serialize() const;
    // Throws ParseError with a line number and a column of 1.
    static Certificate parse(std::string_view text);
};

struct CertifyLog {
    std::vector<std::string> trace;
    std::string failure;
    bool with_normalization_trace = false;
};

// Reduction loop on the component holding the first tetrahedron: crush along a
// non-trivial normal sphere when there is one, otherwise remove the component after an
// almost normal sphere normalizes to the right vertex links on both sides.
// Throws std::invalid_argument unless T is a closed 3-manifold and a homology sphere.
std::optional<Certificate> certify(const Triangulation& t, CertifyLog* log = nullptr);

struct VerifyOptions {
    size_t max_bits = 4096;
};

struct VerifyResult {
    bool accepted = false;
    std::string reason;
};

VerifyResult verify(const Triangulation& t, const Certificate& c, const VerifyOptions& opts = {});

enum class Answer { Sphere, NotSphere, NotApplicable };

struct Recognition {
    Answer answer = Answer::NotApplicable;
    std::string reason;
    std::optional<Certificate> certificate;
    std::vector<std::string> trace;
};

Recognition recognize(const Triangulation& t, bool trace = false);

struct BoundarySummary {
    long faces = 0, edges = 0, vertices = 0;
    long euler = 0;
    int components = 0;
};

// Boundary complex of a triangulation: boundary faces, edges and vertices.
BoundarySummary boundary_summary(const Triangulation& t);

struct BallRecognition {
    Answer answer = Answer::NotApplicable;  // Sphere here means "is a ball"
    std::string reason;
    BoundarySummary boundary;
    std::optional<Certificate> double_certificate;
};

BallRecognition recognize_ball(const Triangulation& t);

// Restriction of v to the given sorted tetrahedra, and the reverse embedding.
SurfaceVector restrict_surface(const SurfaceVector& v, const std::vector<int>& tets);
SurfaceVector embed_surface(const SurfaceVector& v, const std::vector<int>& tets, int total);

}  // namespace spherecheck
