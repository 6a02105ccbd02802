"""Three-sphere recognition with checkable certificates."""

from ._spherecheck import (
    Certificate,
    CrushObstructed,
    NormalizationError,
    ParseError,
    Surface,
    Triangulation,
    almost_sphere_candidates,
    certify,
    double_along_boundary,
    homology,
    is_homology_sphere,
    is_three_manifold,
    normal_vertex_surfaces,
    normalize,
    recognize,
    recognize_ball,
    verify,
)


def load(path):
    """Read a .tri file."""
    with open(path, encoding="utf-8") as f:
        return Triangulation.parse(f.read())


__all__ = [
    "Certificate",
    "CrushObstructed",
    "NormalizationError",
    "ParseError",
    "Surface",
    "Triangulation",
    "almost_sphere_candidates",
    "certify",
    "double_along_boundary",
    "homology",
    "is_homology_sphere",
    "is_three_manifold",
    "load",
    "normal_vertex_surfaces",
    "normalize",
    "recognize",
    "recognize_ball",
    "verify",
]
