"""Tile shapes for the angle cases, and the s-parametrization.

Side convention: ``c`` is always the side opposite the special angle.  For
the 3α+2β=π family that is γ (the obtuse angle); for the equilateral search
it is the π/3 or 2π/3 angle, so the law of cosines reads
``c² = a² + b² ∓ ab``.  (Writing the special side first, as ``a² = b² + c² ± bc``,
is the same relation with a and c swapped.)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import Scalar, sign, sqrt_rational_exact


class OutOfRangeError(ValueError):
    pass


class AngleCase(enum.Enum):
    THREE_ALPHA_TWO_BETA = "ThreeAlphaTwoBeta"
    GAMMA_TWO_PI_OVER_3 = "GammaTwoPiOver3"
    GAMMA_PI_OVER_3_EQUILATERAL = "GammaPiOver3Equilateral"
    RIGHT_TILE_ISOSCELES = "RightTileIsosceles"
    GAMMA_EQUALS_2_ALPHA = "GammaEquals2Alpha"
    COMMENSURABLE = "Commensurable"


@dataclass(frozen=True)
class TileShape:
    a: Scalar
    b: Scalar
    c: Scalar
    case: AngleCase

    def __post_init__(self):
        for side in (self.a, self.b, self.c):
            if sign(side) <= 0:
                raise ValueError("tile sides must be positive")
        a, b, c = self.a, self.b, self.c
        if sign(a + b - c) <= 0 or sign(b + c - a) <= 0 or sign(a + c - b) <= 0:
            raise ValueError("tile sides violate the strict triangle inequality")


def _check_unit_interval(s: Scalar) -> None:
    if sign(s) <= 0 or sign(s - 1) >= 0:
        raise OutOfRangeError(f"s must lie strictly between 0 and 1, got {s}")


def sides_from_s(s: Scalar) -> TileShape:
    """Tile (s, 1-s², 1) of the 3α+2β=π family, normalized to c = 1."""
    _check_unit_interval(s)
    return TileShape(s, 1 - s * s, Fraction(1), AngleCase.THREE_ALPHA_TWO_BETA)


def integer_tile_from_s(s, sign_: int) -> tuple[int, int, int] | None:
    """Integer tile (a, b, c) with a/b = s and c² = a² + b² + sign·ab, if c is rational.

    ``sign_ = -1`` is the π/3 tile, ``+1`` the 2π/3 tile.
    """
    if sign_ not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    s = Fraction(s)
    _check_unit_interval(s)
    A, B = s.numerator, s.denominator
    root = sqrt_rational_exact(s * s + 1 + sign_ * s)
    if root is None:
        return None
    C = B * root
    # s = A/B in lowest terms makes C² = A² + B² ± AB an integer
    assert C.denominator == 1, "C must be integral"
    C = C.numerator
    g = math.gcd(A, math.gcd(B, C))
    return A // g, B // g, C // g

