"""Exhaustive exact search for tilings whose tile satisfies 3α + 2β = π.

With ``s = 2 sin(α/2)`` the tile is ``(a, b, c) = (s, 1 - s², 1)`` up to
scale.  The sides of ABC are written ``X = pa + qb + rc`` and
``Z = ua + vb + wc`` (the two sides at the vertex B that carries a single
tile) and ``Y = ka + ℓb + mc`` (the opposite side).  The coloring equation

    M (a + b + c) = X + Z ± Y

becomes the quadratic ``M(2 + s - s²) = Ps + Q(1 - s²) + R`` with
``P = p + u ± k`` and so on.  Every real root in (0, 1) is then tested
against the area equation, ``XZ = N b c`` when the angle at B is α and
``XZ = N a c`` when it is β.  All tests are exact, so an empty result is a
proof that the case admits no N-tiling (given the pruning facts).

The isosceles variant uses the ``+`` sign; every other shape of ABC uses
``-``.  Hits are returned, never suppressed: for such N the method is
inconclusive.
"""

from __future__ import annotations

import enum
import hashlib
import json
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .exact import DEGENERATE, QuadExt, Scalar, format_scalar, sign, solve_quadratic_exact
from .tiles import OutOfRangeError

log = logging.getLogger(__name__)

MAX_N = 200


class Shape(enum.Enum):
    ISOSCELES = "isosceles"
    SCALENE = "scalene"


class Bounds(enum.Enum):
    """Loop bounds for the decomposition enumeration.

    ``REFERENCE`` is the stricter enumeration: the side opposite B carries
    at least one edge of each length (k, ℓ, m >= 1) and a decomposition is
    rejected once it has N - 2 or more boundary edges.  ``RELAXED`` only requires k, ℓ >= 0 and rejects more
    than N - 2 boundary edges, which is all the boundary-count argument
    itself justifies.
    """

    REFERENCE = "reference"
    RELAXED = "relaxed"


class Variant(enum.Enum):
    ISOSCELES_BASE_ALPHA = "IsoscelesBaseAlpha"
    ISOSCELES_BASE_BETA = "IsoscelesBaseBeta"
    SCALENE = "Scalene"


class WhichArea(enum.Enum):
    B_IS_ALPHA = "BisAlpha"
    B_IS_BETA = "BisBeta"


@dataclass(frozen=True, order=True)
class ColoringParams:
    M: int
    P: int
    Q: int
    R: int


@dataclass(frozen=True, order=True)
class BoundaryDecomposition:
    p: int
    q: int
    r: int
    u: int
    v: int
    w: int
    k: int
    ell: int
    m: int

    def total(self) -> int:
        return self.p + self.q + self.r + self.u + self.v + self.w + self.k + self.ell + self.m


@dataclass(frozen=True)
class SearchHit:
    variant: Variant
    params: ColoringParams
    decomposition: BoundaryDecomposition
    s: Scalar
    which_area: WhichArea

    def sort_key(self):
        d = self.decomposition
        return (self.params.M, self.params.P, self.params.Q, self.params.R,
                d.p, d.q, d.r, d.u, d.v, d.w, self.which_area.value, format_scalar(self.s))

    def to_json(self) -> dict:
        d = self.decomposition
        return {
            "variant": self.variant.value,
            "M": self.params.M, "P": self.params.P, "Q": self.params.Q, "R": self.params.R,
            "p": d.p, "q": d.q, "r": d.r, "u": d.u, "v": d.v, "w": d.w,
            "k": d.k, "ell": d.ell, "m": d.m,
            "s": format_scalar(self.s),
            "which_area": self.which_area.value,
        }


@dataclass
class SearchStats:
    tuples: int = 0
    degenerate: int = 0
    roots_in_range: int = 0
    distinct_s: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.tuples += other.tuples
        self.degenerate += other.degenerate
        self.roots_in_range += other.roots_in_range
        self.distinct_s += other.distinct_s


@dataclass
class SearchResult:
    N: int
    shape: Shape
    hits: list[SearchHit]
    stats: SearchStats = field(default_factory=SearchStats)
    pruned: bool = True
    bounds: Bounds = Bounds.REFERENCE

    def digest(self) -> str:
        return hits_digest(self.hits)


def hits_digest(hits: list[SearchHit]) -> str:
    payload = json.dumps([h.to_json() for h in hits], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def coloring_quadratic(params: ColoringParams) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (A, B, C) of ``A s² + B s + C = 0`` equivalent to the coloring equation."""
    M, P, Q, R = params.M, params.P, params.Q, params.R
    return Fraction(Q - M), Fraction(M - P), Fraction(2 * M - Q - R)


def discriminant(params: ColoringParams) -> int:
    M, P, Q, R = params.M, params.P, params.Q, params.R
    return (M - P) ** 2 - 4 * (Q - M) * (2 * M - Q - R)


def side_in_c_units(a_count: int, b_count: int, c_count: int, s: Scalar) -> Scalar:
    """Length of ``a_count·a + b_count·b + c_count·c`` divided by c."""
    return c_count + a_count * s + b_count * (1 - s * s)


def _in_unit_interval(s: Scalar) -> bool:
    return sign(s) > 0 and sign(s - 1) < 0


def area_residuals(dec: BoundaryDecomposition, s: Scalar, N: int) -> tuple[Scalar, Scalar]:
    """``(XZ - N(1-s²), XZ - Ns)``: zero means the area equation holds with B = α resp. β."""
    if not _in_unit_interval(s):
        raise OutOfRangeError(f"s must lie strictly between 0 and 1, got {s}")
    X = side_in_c_units(dec.p, dec.q, dec.r, s)
    Z = side_in_c_units(dec.u, dec.v, dec.w, s)
    XZ = X * Z
    return XZ - N * (1 - s * s), XZ - N * s


def _is_integer(x: Scalar) -> bool:
    if isinstance(x, QuadExt):
        return x.d == 0 and x.rat.denominator == 1
    return Fraction(x).denominator == 1


def scalene_lower_limit(s: Scalar) -> int:
    """Minimum number of c edges per side for the non-isosceles search.

    Mirrors the reference predicate: two c edges are guaranteed when s is
    rational or neither of a, b is an integer multiple of the other.
    """
    b = 1 - s * s
    rational = not isinstance(s, QuadExt) or s.d == 0
    if sign(s - b) < 0 and (rational or not _is_integer(b / s)):
        return 2
    if sign(b - s) < 0 and not _is_integer(s / b):
        return 2
    return 1


def _triples(lo_c: int, max_sum: int) -> Iterator[tuple[int, int, int]]:
    for c in range(lo_c, max_sum + 1):
        for a in range(0, max_sum - c + 1):
            for b in range(0, max_sum - c - a + 1):
                yield a, b, c


class _AreaTable:
    """Per-worker cache: for each (s, lower limit) the side pairs solving an area equation."""

    def __init__(self, N: int, max_total: int):
        self.N = N
        self.max_total = max_total
        self._cache: dict = {}

    def pairs(self, s: Scalar, lower: int) -> list[tuple[tuple[int, int, int], tuple[int, int, int], WhichArea]]:
        key = (s, lower)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._compute(s, lower)
        return hit

    def _compute(self, s: Scalar, lower: int):
        N = self.N
        # the third side needs at least `lower` c edges too
        budget = self.max_total - lower
        by_value: dict = defaultdict(list)
        values = []
        for t in _triples(lower, budget - lower):
            val = side_in_c_units(t[0], t[1], t[2], s)
            if sign(val) <= 0:
                continue
            by_value[val].append(t)
            values.append((t, val))
        b = 1 - s * s
        targets = ((WhichArea.B_IS_ALPHA, N * b), (WhichArea.B_IS_BETA, N * s))
        out = []
        for tx, X in values:
            used = sum(tx)
            for which, target in targets:
                for tz in by_value.get(target / X, ()):
                    if used + sum(tz) <= budget:
                        out.append((tx, tz, which))
        return out


def _tuples(N: int, shape: Shape, prune: bool, outer: int, cap: int) -> Iterator[ColoringParams]:
    """(M, P, Q, R) tuples with the outer loop variable fixed (M or P).

    ``cap`` bounds the boundary edge count, hence P+Q+R (isosceles) and
    |P|+|Q|+|R| (otherwise).
    """
    if shape is Shape.ISOSCELES:
        M = outer
        r_lo = 6 if prune else 0
        for P in range(0, cap + 1):
            for Q in range(0, cap + 1 - P):
                for R in range(r_lo, cap + 1 - P - Q):
                    yield ColoringParams(M, P, Q, R)
    else:
        P = outer
        for M in range(1, N):
            span_q = cap - abs(P)
            for Q in range(-span_q, span_q + 1):
                span_r = cap - abs(P) - abs(Q)
                for R in range(-span_r, span_r + 1):
                    yield ColoringParams(M, P, Q, R)


def _outer_values(N: int, shape: Shape, cap: int) -> list[int]:
    return list(range(1, N)) if shape is Shape.ISOSCELES else list(range(-cap, cap + 1))


def max_boundary_edges(N: int, prune: bool, bounds: Bounds = Bounds.REFERENCE) -> int:
    """Cap on p+q+r+u+v+w+k+ℓ+m.

    Pruned: at least two tiles off the boundary (one more edge is dropped
    under the reference bounds).  Unpruned: each tile has at most two
    boundary edges, and only the (at most three) tiles alone at a corner of
    ABC have two.
    """
    if not prune:
        return N + 3
    return N - 3 if bounds is Bounds.REFERENCE else N - 2


def _search_chunk(N: int, shape: Shape, prune: bool, bounds: Bounds, outer: int,
                  table: _AreaTable | None = None, first_only: bool = False):
    if table is None:
        table = _AreaTable(N, max_boundary_edges(N, prune, bounds))
    opp_min = 1 if bounds is Bounds.REFERENCE else 0
    stats = SearchStats()
    hits: list[SearchHit] = []
    seen_s: set = set()
    plus = shape is Shape.ISOSCELES
    cap = table.max_total
    for params in _tuples(N, shape, prune, outer, cap):
        stats.tuples += 1
        roots = solve_quadratic_exact(*coloring_quadratic(params))
        if roots is DEGENERATE:
            stats.degenerate += 1
            log.debug("degenerate coloring tuple %s skipped", params)
            continue
        for s in roots:
            if not _in_unit_interval(s):
                continue
            stats.roots_in_range += 1
            seen_s.add(s)
            if not prune:
                lower = 0
            elif plus:
                lower = 2
            else:
                lower = scalene_lower_limit(s)
            for (p, q, r), (u, v, w), which in table.pairs(s, lower):
                if plus:
                    k, ell, m = params.P - p - u, params.Q - q - v, params.R - r - w
                else:
                    k, ell, m = p + u - params.P, q + v - params.Q, r + w - params.R
                if k < opp_min or ell < opp_min or m < max(lower, opp_min):
                    continue
                dec = BoundaryDecomposition(p, q, r, u, v, w, k, ell, m)
                if dec.total() > cap:
                    continue
                if plus:
                    variant = (Variant.ISOSCELES_BASE_ALPHA if which is WhichArea.B_IS_ALPHA
                               else Variant.ISOSCELES_BASE_BETA)
                else:
                    variant = Variant.SCALENE
                hits.append(SearchHit(variant, params, dec, s, which))
                if first_only:
                    stats.distinct_s = len(seen_s)
                    return hits, stats
    stats.distinct_s = len(seen_s)
    return hits, stats


def _worker(args):
    N, shape, prune, bounds, outers = args
    table = _AreaTable(N, max_boundary_edges(N, prune, bounds))
    hits, stats = [], SearchStats()
    for o in outers:
        h, st = _search_chunk(N, shape, prune, bounds, o, table)
        hits.extend(h)
        stats.merge(st)
    return hits, stats


def search(N: int, shape: Shape | str, *, bounds: Bounds | str = Bounds.REFERENCE,
           prune: bool = True, jobs: int = 1, first_only: bool = False,
           progress=None) -> SearchResult:
    """Run the full search for one shape of ABC.

    ``prune=False`` drops the boundary-count cutoff and the c-edge lower
    limits (soundness check).  ``first_only`` stops at the first hit.
    """
    shape = Shape(shape)
    bounds = Bounds(bounds)
    if not 3 <= N <= MAX_N:
        raise OutOfRangeError(f"N must be in [3, {MAX_N}], got {N}")
    outers = _outer_values(N, shape, max_boundary_edges(N, prune, bounds))
    hits: list[SearchHit] = []
    stats = SearchStats()
    if jobs > 1 and not first_only:
        # round-robin keeps chunk costs balanced; the final sort restores order
        chunks = [outers[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for h, st in pool.map(_worker, [(N, shape, prune, bounds, c) for c in chunks if c]):
                hits.extend(h)
                stats.merge(st)
    else:
        table = _AreaTable(N, max_boundary_edges(N, prune, bounds))
        for o in outers:
            if progress:
                progress(f"N={N} {shape.value} outer={o}")
            h, st = _search_chunk(N, shape, prune, bounds, o, table, first_only)
            hits.extend(h)
            stats.merge(st)
            if first_only and hits:
                break
    hits.sort(key=SearchHit.sort_key)
    return SearchResult(N, shape, hits, stats, prune, bounds)


def search_isosceles(N: int, **kw) -> list[SearchHit]:
    return search(N, Shape.ISOSCELES, **kw).hits


def search_scalene(N: int, **kw) -> list[SearchHit]:
    return search(N, Shape.SCALENE, **kw).hits
