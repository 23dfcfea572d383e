"""Tiling families, the exact verifier, coloring numbers and SVG output."""

from .tiling import MalformedTiling, Tiling, VerifyReport, verify
from .generators import (
    DegenerateTile,
    InvalidParams,
    NotPythagorean,
    NotRightTriangle,
    gen_biquadratic,
    gen_double,
    gen_hexagonal,
    gen_pythagorean_mixed,
    gen_quadratic,
    gen_subdivide,
    gen_triple_square,
    hexagonal_count,
)

__all__ = [
    "DegenerateTile", "InvalidParams", "MalformedTiling", "NotPythagorean",
    "NotRightTriangle", "Tiling", "VerifyReport", "gen_biquadratic", "gen_double",
    "gen_hexagonal", "gen_pythagorean_mixed", "gen_quadratic", "gen_subdivide",
    "gen_triple_square", "hexagonal_count", "verify",
]
