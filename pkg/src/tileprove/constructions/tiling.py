"""Tilings in an affine basis with an exact Gram matrix, and the exact verifier.

Points are coordinate pairs ``(x, y)`` meaning ``x·e1 + y·e2``.  Lengths come
from the Gram matrix ``(|e1|², e1·e2, |e2|²)``; orientation tests work
directly on basis coordinates because the basis determinant is a common
positive factor.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..exact import Scalar, field_of, format_scalar, parse_scalar, sign, simplify

Point = tuple[Scalar, Scalar]


class MalformedTiling(ValueError):
    pass


@dataclass
class Tiling:
    field_d: int
    gram: tuple[Scalar, Scalar, Scalar]
    points: list[Point]
    outer: tuple[int, int, int]
    tiles: list[tuple[int, int, int]]
    tile_sq_lengths: tuple[Scalar, Scalar, Scalar]

    @property
    def N(self) -> int:
        return len(self.tiles)

    # -- metric -----------------------------------------------------------

    def dot(self, u: Point, v: Point) -> Scalar:
        g11, g12, g22 = self.gram
        return g11 * u[0] * v[0] + g12 * (u[0] * v[1] + u[1] * v[0]) + g22 * u[1] * v[1]

    def sq_dist(self, i: int, j: int) -> Scalar:
        d = _sub(self.points[j], self.points[i])
        return simplify(self.dot(d, d))

    def tile_sq(self, tile: Sequence[int]) -> list[Scalar]:
        i, j, k = tile
        return [self.sq_dist(i, j), self.sq_dist(j, k), self.sq_dist(k, i)]

    def area2(self, tile: Sequence[int]) -> Scalar:
        """Twice the signed area in basis units."""
        i, j, k = tile
        return orient(self.points[i], self.points[j], self.points[k])

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field_d": self.field_d,
            "gram": [format_scalar(g) for g in self.gram],
            "points": [[format_scalar(x), format_scalar(y)] for x, y in self.points],
            "outer": list(self.outer),
            "tiles": [list(t) for t in self.tiles],
            "tile_sq_lengths": [format_scalar(v) for v in self.tile_sq_lengths],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict) -> "Tiling":
        try:
            return cls(
                field_d=int(obj["field_d"]),
                gram=tuple(parse_scalar(g) for g in obj["gram"]),
                points=[(parse_scalar(x), parse_scalar(y)) for x, y in obj["points"]],
                outer=tuple(int(i) for i in obj["outer"]),
                tiles=[tuple(int(i) for i in t) for t in obj["tiles"]],
                tile_sq_lengths=tuple(parse_scalar(v) for v in obj["tile_sq_lengths"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedTiling(f"bad tiling JSON: {exc}") from exc

    @classmethod
    def loads(cls, text: str) -> "Tiling":
        return cls.from_json(json.loads(text))


def _sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def cross(u: Point, v: Point) -> Scalar:
    return u[0] * v[1] - u[1] * v[0]


def orient(p: Point, q: Point, r: Point) -> Scalar:
    return cross(_sub(q, p), _sub(r, p))


class PointSet:
    """Deduplicating point list keyed by exact coordinates."""

    def __init__(self):
        self.points: list[Point] = []
        self._index: dict = {}

    def add(self, p: Point) -> int:
        key = (simplify(p[0]), simplify(p[1]))
        idx = self._index.get(key)
        if idx is None:
            idx = self._index[key] = len(self.points)
            self.points.append(key)
        return idx


def make_tiling(gram, points: PointSet, outer, tiles, tile_sq) -> Tiling:
    gram = tuple(simplify(g) for g in gram)
    tile_sq = tuple(simplify(v) for v in tile_sq)
    coords = [c for p in points.points for c in p]
    d = field_of(list(gram) + coords + list(tile_sq))
    return Tiling(d, gram, points.points, tuple(outer), [tuple(t) for t in tiles], tile_sq)


# -- lines and edge accounting ------------------------------------------------

def line_key(p: Point, q: Point):
    """(direction, offset) of the line through p, q with the direction normalized.

    The direction has first nonzero component 1, so the parameter along the
    line (``x`` if the direction has an x component, else ``y``) increases
    along it.
    """
    dx, dy = _sub(q, p)
    if sign(dx) != 0:
        dx, dy = Fraction(1), simplify(dy / dx)
    else:
        dx, dy = Fraction(0), Fraction(1)
    offset = simplify(dx * p[1] - dy * p[0])
    return (dx, dy, offset)


def _param(key, p: Point) -> Scalar:
    return p[0] if key[0] != 0 else p[1]


@dataclass
class _LineEdges:
    # (t0, t1, side, tile index); side +1 means the tile lies left of the line direction
    edges: list = field(default_factory=list)


def _directed_edges(t: Tiling):
    """Every tile edge, oriented so the tile lies to its left."""
    for ti, tile in enumerate(t.tiles):
        i, j, k = tile
        if sign(t.area2(tile)) < 0:
            i, j, k = i, k, j
        for a, b in ((i, j), (j, k), (k, i)):
            yield ti, t.points[a], t.points[b]


def edges_by_line(t: Tiling) -> dict:
    lines: dict = defaultdict(_LineEdges)
    for ti, p, q in _directed_edges(t):
        key = line_key(p, q)
        t0, t1 = _param(key, p), _param(key, q)
        side = 1 if t0 < t1 else -1
        if side < 0:
            t0, t1 = t1, t0
        lines[key].edges.append((t0, t1, side, ti))
    return lines


def elementary_intervals(edges, extra=()):
    """Sorted breakpoints of a set of intervals as consecutive pairs."""
    pts = set(extra)
    for t0, t1, *_ in edges:
        pts.add(t0)
        pts.add(t1)
    pts = sorted(pts)
    return list(zip(pts, pts[1:]))


# -- verifier -----------------------------------------------------------------

@dataclass
class VerifyReport:
    congruent: bool
    disjoint: bool
    covers: bool
    N: int
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.congruent and self.disjoint and self.covers

    def to_json(self) -> dict:
        return {"congruent": self.congruent, "disjoint": self.disjoint,
                "covers": self.covers, "N": self.N, "problems": self.problems}


def _check_structure(t: Tiling) -> None:
    n = len(t.points)
    if len(t.outer) != 3 or any(len(tile) != 3 for tile in t.tiles):
        raise MalformedTiling("triangles need exactly three point indices")
    for tri in [t.outer, *t.tiles]:
        for i in tri:
            if not 0 <= i < n:
                raise MalformedTiling(f"point index {i} out of range 0..{n - 1}")
        if len(set(tri)) != 3 or len({t.points[i] for i in tri}) != 3:
            raise MalformedTiling(f"triangle {list(tri)} repeats a point")


def _bbox(t: Tiling, tile):
    xs = [t.points[i][0] for i in tile]
    ys = [t.points[i][1] for i in tile]
    return min(xs), max(xs), min(ys), max(ys)


def _ccw(t: Tiling, tile) -> list[Point]:
    pts = [t.points[i] for i in tile]
    if sign(orient(*pts)) < 0:
        pts[1], pts[2] = pts[2], pts[1]
    return pts


def _separated(P: list[Point], Q: list[Point]) -> bool:
    """Some edge line of P has all of Q on its closed outer side."""
    for i in range(3):
        a, b = P[i], P[(i + 1) % 3]
        if all(sign(orient(a, b, q)) <= 0 for q in Q):
            return True
    return False


def interiors_overlap(t: Tiling, s: Sequence[int], u: Sequence[int]) -> bool:
    P, Q = _ccw(t, s), _ccw(t, u)
    return not (_separated(P, Q) or _separated(Q, P))


def _is_congruent(t: Tiling, problems: list[str]) -> bool:
    want = Counter(simplify(v) for v in t.tile_sq_lengths)
    for ti, tile in enumerate(t.tiles):
        if Counter(t.tile_sq(tile)) != want:
            problems.append(f"tile {ti} has squared sides {[format_scalar(v) for v in t.tile_sq(tile)]}")
            return False
    return True


def _is_disjoint(t: Tiling, problems: list[str]) -> bool:
    boxes = [_bbox(t, tile) for tile in t.tiles]
    for ti, tile in enumerate(t.tiles):
        if sign(t.area2(tile)) == 0:
            problems.append(f"tile {ti} is degenerate")
            return False
    order = sorted(range(t.N), key=lambda i: boxes[i][0])
    for pos, i in enumerate(order):
        bi = boxes[i]
        for j in order[pos + 1:]:
            bj = boxes[j]
            if bj[0] >= bi[1]:
                break  # sorted by left edge: nothing further can overlap
            if bj[2] >= bi[3] or bi[2] >= bj[3]:
                continue
            if interiors_overlap(t, t.tiles[i], t.tiles[j]):
                problems.append(f"tiles {min(i, j)} and {max(i, j)} overlap")
                return False
    return True


def _covers(t: Tiling, problems: list[str]) -> bool:
    A, B, C = _ccw(t, t.outer)
    outer_area = orient(A, B, C)
    if sign(outer_area) == 0:
        problems.append("outer triangle is degenerate")
        return False
    for tile in t.tiles:
        for i in tile:
            p = t.points[i]
            if sign(orient(A, B, p)) < 0 or sign(orient(B, C, p)) < 0 or sign(orient(C, A, p)) < 0:
                problems.append(f"point {i} lies outside the outer triangle")
                return False
    total = sum((abs(t.area2(tile)) for tile in t.tiles), Fraction(0))
    if total != outer_area:
        problems.append(f"tile area {format_scalar(simplify(total))} != outer area {format_scalar(simplify(outer_area))}")
        return False

    outer_edges = {}
    for p, q in ((A, B), (B, C), (C, A)):
        key = line_key(p, q)
        t0, t1 = _param(key, p), _param(key, q)
        inside = 1 if t0 < t1 else -1
        outer_edges[key] = (min(t0, t1), max(t0, t1), inside)

    lines = edges_by_line(t)
    for key in outer_edges:
        lines.setdefault(key, _LineEdges())
    for key, le in lines.items():
        bound = outer_edges.get(key)
        extra = bound[:2] if bound else ()
        for u, v in elementary_intervals(le.edges, extra):
            left = sum(1 for t0, t1, sd, _ in le.edges if sd > 0 and t0 <= u and v <= t1)
            right = sum(1 for t0, t1, sd, _ in le.edges if sd < 0 and t0 <= u and v <= t1)
            if bound and bound[0] <= u and v <= bound[1]:
                inside, outside = (left, right) if bound[2] > 0 else (right, left)
                if inside != 1 or outside != 0:
                    problems.append("outer boundary segment not covered exactly once")
                    return False
            elif left != right:
                problems.append("interior edge segment without a matching neighbour")
                return False
    return True


def verify(t: Tiling) -> VerifyReport:
    """Exact check that the tiles are congruent, interior-disjoint and fill the outer triangle."""
    _check_structure(t)
    problems: list[str] = []
    congruent = _is_congruent(t, problems)
    disjoint = _is_disjoint(t, problems)
    covers = _covers(t, problems)
    return VerifyReport(congruent, disjoint, covers, t.N, problems)
