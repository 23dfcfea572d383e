"""Rational tiles that could N-tile an equilateral triangle with γ = π/3 or 2π/3.

A side of the big triangle is ``X = pa + qb + rc``, and the area equation
is ``X² = N a b``.  With ``s = a/b`` and ``c/b = sqrt(s² + 1 ± s)`` this gives

    (ps + q + r·sqrt(L))² = N s,      L = s² + 1 + sign·s

Isolating the radical and squaring yields an integer quartic in s.  The
squaring also admits roots of ``(ps + q - r·sqrt(L))² = N s``; those are
kept but flagged as not genuine, since they do not come from a sum of
edge lengths.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import IntPoly, rational_roots
from .tiles import OutOfRangeError, integer_tile_from_s

MAX_N = 200


class Gamma(enum.Enum):
    PI_OVER_3 = "PiOver3"
    TWO_PI_OVER_3 = "TwoPiOver3"

    @property
    def sign(self) -> int:
        """Sign of the ab term in ``c² = a² + b² + sign·ab``."""
        return -1 if self is Gamma.PI_OVER_3 else 1

    @property
    def label(self) -> str:
        return "π/3" if self is Gamma.PI_OVER_3 else "2π/3"

    @classmethod
    def parse(cls, text: str) -> "Gamma":
        aliases = {"pi3": cls.PI_OVER_3, "2pi3": cls.TWO_PI_OVER_3}
        if text in aliases:
            return aliases[text]
        return cls(text)


@dataclass(frozen=True, order=True)
class Decomposition:
    """One (p, q, r) that produced the root; ``genuine`` is False for squaring artifacts."""

    p: int
    q: int
    r: int
    genuine: bool


@dataclass(frozen=True)
class EquilateralCandidate:
    N: int
    gamma: Gamma
    p: int
    q: int
    r: int
    s: Fraction
    tile: tuple[int, int, int]
    genuine: bool
    decompositions: tuple[Decomposition, ...] = field(default=(), compare=False)

    @property
    def multiplicity(self) -> int:
        return len(self.decompositions)

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "gamma": self.gamma.value,
            "p": self.p, "q": self.q, "r": self.r,
            "s": f"{self.s.numerator}/{self.s.denominator}",
            "tile": list(self.tile),
            "genuine": self.genuine,
            "decompositions": [[d.p, d.q, d.r, d.genuine] for d in self.decompositions],
        }


def build_quartic(N: int, p: int, q: int, r: int, sign: int) -> IntPoly:
    """``4(ps+q)² r² L - (Ns - (ps+q)² - r² L)²`` with ``L = s² + 1 + sign·s``, expanded."""
    if min(p, q, r) < 0 or N < 1:
        raise ValueError("need p, q, r >= 0 and N >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    lin = IntPoly([q, p])
    lin2 = lin * lin
    L = IntPoly([1, sign, 1])
    rhs = IntPoly([0, N]) - lin2 - L * (r * r)
    return lin2 * L * (4 * r * r) - rhs * rhs


def is_genuine(N: int, p: int, q: int, r: int, s: Fraction, sign: int) -> bool:
    """True when the root solves the unsquared equation with the plus sign.

    The radical term ``2(ps+q)·r·sqrt(L)`` is nonnegative, so the root is
    genuine exactly when ``Ns - (ps+q)² - r²L`` is nonnegative.
    """
    L = s * s + 1 + sign * s
    return N * s - (p * s + q) ** 2 - r * r * L >= 0


def pqr_bounds(N: int, gamma: Gamma):
    """All (p, q, r) allowed by the edge-count lemmas, in lexicographic order."""
    lo = 1 if gamma is Gamma.PI_OVER_3 else 0
    cap = N // 6 + 1  # floor(N/6 + 1)
    for p in range(lo, cap + 1):
        for q in range(lo, cap + 1 - p):
            for r in range(2, cap + 1 - p - q):
                yield p, q, r


def find_candidates(N: int, gamma: Gamma | str) -> list[EquilateralCandidate]:
    """Rational tiles in (0, 1) solving the quartic for some admissible (p, q, r), sorted by tile."""
    if not 3 <= N <= MAX_N:
        raise OutOfRangeError(f"N must lie in [3, {MAX_N}], got {N}")
    gamma = gamma if isinstance(gamma, Gamma) else Gamma.parse(gamma)
    sgn = gamma.sign
    found: dict[tuple[int, int, int], tuple[Fraction, list[Decomposition]]] = {}
    for p, q, r in pqr_bounds(N, gamma):
        for s in rational_roots(build_quartic(N, p, q, r, sgn)):
            if not 0 < s < 1:
                continue
            tile = integer_tile_from_s(s, sgn)
            if tile is None:
                continue
            entry = found.setdefault(tile, (s, []))
            entry[1].append(Decomposition(p, q, r, is_genuine(N, p, q, r, s, sgn)))
    out = []
    for tile in sorted(found):
        s, decs = found[tile]
        decs = tuple(sorted(decs))
        best = next((d for d in decs if d.genuine), decs[0])
        out.append(EquilateralCandidate(N, gamma, best.p, best.q, best.r, s, tile,
                                        best.genuine, decs))
    return out


def scan_range(lo: int, hi: int, gamma: Gamma | str | None = None) -> list[tuple[int, Gamma, list[EquilateralCandidate]]]:
    """``find_candidates`` over ``lo..hi``; both angles when ``gamma`` is None."""
    if not 3 <= lo <= hi <= MAX_N:
        raise OutOfRangeError(f"need 3 <= lo <= hi <= {MAX_N}, got {lo}..{hi}")
    if gamma is None:
        gammas = list(Gamma)
    else:
        gammas = [gamma if isinstance(gamma, Gamma) else Gamma.parse(gamma)]
    return [(N, g, find_candidates(N, g)) for N in range(lo, hi + 1) for g in gammas]


# Published table of possible tiles (N, angle, tile).  The N = 84 entry does
# not satisfy either law of cosines; see ``table_discrepancies``.
PUBLISHED_TABLE: tuple[tuple[int, Gamma, tuple[int, int, int]], ...] = (
    (40, Gamma.PI_OVER_3, (5, 8, 7)),
    (54, Gamma.PI_OVER_3, (3, 8, 7)),
    (56, Gamma.TWO_PI_OVER_3, (7, 8, 13)),
    (60, Gamma.TWO_PI_OVER_3, (3, 5, 7)),
    (65, Gamma.PI_OVER_3, (9, 65, 61)),
    (66, Gamma.TWO_PI_OVER_3, (11, 24, 31)),
    (70, Gamma.PI_OVER_3, (7, 40, 37)),
    (80, Gamma.TWO_PI_OVER_3, (5, 16, 19)),
    (84, Gamma.PI_OVER_3, (16, 20, 19)),
    (85, Gamma.PI_OVER_3, (17, 80, 73)),
)


def satisfies_cosine_law(tile: tuple[int, int, int], gamma: Gamma) -> bool:
    a, b, c = tile
    return c * c == a * a + b * b + gamma.sign * a * b


def table_discrepancies(rows=PUBLISHED_TABLE) -> list[dict]:
    """Published rows that are not triangles for their angle, with the computed candidates for that N."""
    out = []
    for N, gamma, tile in rows:
        if satisfies_cosine_law(tile, gamma):
            continue
        a, b, c = tile
        computed = find_candidates(N, gamma)
        out.append({
            "N": N,
            "gamma": gamma.value,
            "published": list(tile),
            "note": (f"c² = {c * c} but a² + b² - ab = {a * a + b * b - a * b} "
                     f"and a² + b² + ab = {a * a + b * b + a * b}"),
            "computed": [list(c_.tile) for c_ in computed],
        })
    return out
