"""Explicit tiling families with exact coordinates."""

from __future__ import annotations

import math
from fractions import Fraction

from ..exact import Scalar, sign, simplify
from ..tiles import OutOfRangeError
from .tiling import Point, PointSet, Tiling, make_tiling


class DegenerateTile(ValueError):
    pass


class InvalidParams(ValueError):
    pass


class NotRightTriangle(ValueError):
    pass


class NotPythagorean(ValueError):
    pass


MAX_HEX_K = 10


def _check_tile_sq(x: Scalar, y: Scalar, z: Scalar) -> None:
    # 16·area² in terms of squared sides; positive iff the square roots form a triangle
    if min(sign(x), sign(y), sign(z)) <= 0 or sign(2 * (x * y + y * z + z * x) - (x * x + y * y + z * z)) <= 0:
        raise DegenerateTile("squared sides do not form a nondegenerate triangle")


def _affine(P0: Point, P1: Point, P2: Point, i, j, n) -> Point:
    return (P0[0] + (P1[0] - P0[0]) * Fraction(i, n) + (P2[0] - P0[0]) * Fraction(j, n),
            P0[1] + (P1[1] - P0[1]) * Fraction(i, n) + (P2[1] - P0[1]) * Fraction(j, n))


def add_lattice(ps: PointSet, tiles: list, P0: Point, P1: Point, P2: Point, n: int) -> None:
    """Cut triangle P0P1P2 into n² similar copies by the three families of parallels."""
    idx = {}
    for i in range(n + 1):
        for j in range(n + 1 - i):
            idx[i, j] = ps.add(_affine(P0, P1, P2, i, j, n))
    for i in range(n):
        for j in range(n - i):
            tiles.append((idx[i, j], idx[i + 1, j], idx[i, j + 1]))
            if i + j < n - 1:
                tiles.append((idx[i + 1, j], idx[i + 1, j + 1], idx[i, j + 1]))


def gen_quadratic(tile_sq, n: int) -> Tiling:
    """n² tiling of a triangle similar to the tile.

    ``tile_sq`` is ``(a², b², c²)``; the big triangle has corners
    A = (0, 0), B = (n, 0), C = (0, n) with ``|AB| = n·c``, ``|AC| = n·b``.
    """
    if n < 1:
        raise InvalidParams(f"n must be at least 1, got {n}")
    a2, b2, c2 = (simplify(v) for v in tile_sq)
    _check_tile_sq(a2, b2, c2)
    ps, tiles = PointSet(), []
    A, B, C = (Fraction(0), Fraction(0)), (Fraction(n), Fraction(0)), (Fraction(0), Fraction(n))
    add_lattice(ps, tiles, A, B, C, n)
    outer = (ps.add(A), ps.add(B), ps.add(C))
    gram = (c2, (b2 + c2 - a2) / 2, b2)
    return make_tiling(gram, ps, outer, tiles, (a2, b2, c2))


def _right_split(e: int, f: int) -> tuple[PointSet, list, tuple, Point]:
    """Right triangle C=(0,0), A=(1,0), B=(0,1), split at the altitude foot D.

    ACD gets e² tiles and BCD gets f²; the tile has legs e, f.
    """
    ps, tiles = PointSet(), []
    C, A, B = (Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))
    t = Fraction(e * e, e * e + f * f)
    D = (1 - t, t)
    # vertex order matches the angles of the tile: right angle at D
    add_lattice(ps, tiles, D, C, A, e)
    add_lattice(ps, tiles, D, B, C, f)
    return ps, tiles, (A, B, C), D


def gen_biquadratic(e: int, f: int) -> Tiling:
    """(e² + f²)-tiling of a right triangle whose legs are in ratio e : f."""
    if not (isinstance(e, int) and isinstance(f, int)) or not e > f >= 1:
        raise InvalidParams(f"need integers e > f >= 1, got ({e}, {f})")
    return _biquadratic(e, f)


def _biquadratic(e: int, f: int) -> Tiling:
    h = e * e + f * f
    ps, tiles, (A, B, C), _ = _right_split(e, f)
    outer = (ps.add(A), ps.add(B), ps.add(C))
    return make_tiling((e * e * h, 0, f * f * h), ps, outer, tiles, (e * e, f * f, h))


def _right_vertex(t: Tiling):
    for k in range(3):
        r = t.outer[k]
        p, q = t.outer[(k + 1) % 3], t.outer[(k + 2) % 3]
        R = t.points[r]
        u = (t.points[p][0] - R[0], t.points[p][1] - R[1])
        v = (t.points[q][0] - R[0], t.points[q][1] - R[1])
        if sign(t.dot(u, v)) == 0:
            return r, p, q
    return None


def reflect(t: Tiling, X: Point, R: Point, W: Point) -> Point:
    """Mirror image of X in the line through R and W (Gram inner product)."""
    w = (W[0] - R[0], W[1] - R[1])
    v = (X[0] - R[0], X[1] - R[1])
    k = 2 * t.dot(v, w) / t.dot(w, w)
    return (R[0] + k * w[0] - v[0], R[1] + k * w[1] - v[1])


def gen_double(t: Tiling, leg: int = 0) -> Tiling:
    """Reflect a tiling of a right triangle across one of its legs (2N tiles)."""
    found = _right_vertex(t)
    if found is None:
        raise NotRightTriangle("the outer triangle has no right angle")
    if leg not in (0, 1):
        raise InvalidParams("leg must be 0 or 1")
    r, p, q = found
    if leg == 1:
        p, q = q, p
    R, P = t.points[r], t.points[p]
    ps = PointSet()
    for pt in t.points:
        ps.add(pt)
    mirror = [ps.add(reflect(t, pt, R, P)) for pt in t.points]
    tiles = list(t.tiles) + [tuple(mirror[i] for i in tile) for tile in t.tiles]
    outer = (p, q, mirror[q])
    return make_tiling(t.gram, ps, outer, tiles, t.tile_sq_lengths)


def gen_pythagorean_mixed(a: int, b: int, c: int) -> Tiling:
    """2c²-tiling of an isosceles triangle by the tile (a, b, c) with a² + b² = c².

    One half is split at its altitude into a² and b² blocks, the mirror
    half is cut into c² copies directly.
    """
    if min(a, b, c) < 1 or a * a + b * b != c * c or math.gcd(a, math.gcd(b, c)) != 1:
        raise NotPythagorean(f"({a}, {b}, {c}) is not a primitive Pythagorean triple")
    h = c * c
    ps, tiles, (A, B, C), _ = _right_split(a, b)
    A2 = (-A[0], -A[1])
    add_lattice(ps, tiles, C, A2, B, c)
    outer = (ps.add(A), ps.add(B), ps.add(A2))
    return make_tiling((a * a * h, 0, b * b * h), ps, outer, tiles, (a * a, b * b, h))


def hexagonal_count(k: int) -> int:
    if k < 0:
        raise OutOfRangeError(f"k must be nonnegative, got {k}")
    return 3 * (k + 1) ** 2


def gen_hexagonal(k: int) -> Tiling:
    """3(k+1)²-tiling of an equilateral triangle by the (π/6, π/6, 2π/3) tile.

    Basis vectors are unit vectors at 60°, so all coordinates are rational.
    The triangle is cut into (k+1)² equilateral cells of side √3, each split
    into three tiles from its centre.  Each downward cell together with the
    three tiles across its edges forms a regular hexagon, which is then
    re-cut along its other three diagonals.
    """
    if not 0 <= k <= MAX_HEX_K:
        raise OutOfRangeError(f"k must lie in [0, {MAX_HEX_K}], got {k}")
    n = k + 1
    f1, f2 = (Fraction(1), Fraction(1)), (Fraction(-1), Fraction(2))

    def at(i, j) -> Point:
        return (i * f1[0] + j * f2[0], i * f1[1] + j * f2[1])

    def centre(*pts: Point) -> Point:
        return (sum(p[0] for p in pts) / 3, sum(p[1] for p in pts) / 3)

    ps, tiles = PointSet(), []
    ups = {}
    for i in range(n):
        for j in range(n - i):
            ups[i, j] = (at(i, j), at(i + 1, j), at(i, j + 1))
    # tiles of each up cell not yet claimed by a hexagon, keyed by the cell edge they sit on
    free = {cell: {frozenset((v[0], v[1])), frozenset((v[1], v[2])), frozenset((v[2], v[0]))}
            for cell, v in ups.items()}

    for i in range(n):
        for j in range(n - i - 1):
            down = (at(i + 1, j), at(i + 1, j + 1), at(i, j + 1))
            O = centre(*down)
            neighbours = [(i, j), (i + 1, j), (i, j + 1)]
            U = []
            for cell in neighbours:
                v = ups[cell]
                shared = frozenset(down) & frozenset(v)
                free[cell].discard(shared)
                U.append(centre(*v))
            # hexagon O-centred with vertices: down corners and the three neighbour centres
            for x in range(3):
                for y in range(x + 1, 3):
                    tiles.append((ps.add(O), ps.add(U[x]), ps.add(U[y])))
            for corner in down:
                near = [u for u, cell in zip(U, neighbours) if corner in ups[cell]]
                tiles.append((ps.add(corner), ps.add(near[0]), ps.add(near[1])))

    for cell, edges in free.items():
        Uc = centre(*ups[cell])
        for p, q in sorted(tuple(sorted(e)) for e in edges):
            tiles.append((ps.add(Uc), ps.add(p), ps.add(q)))

    outer = (ps.add(at(0, 0)), ps.add(at(n, 0)), ps.add(at(0, n)))
    return make_tiling((1, Fraction(1, 2), 1), ps, outer, tiles, (1, 1, 3))


def gen_subdivide(t: Tiling, m: int) -> Tiling:
    """Cut every tile into m² copies (the tile shrinks by the factor m)."""
    if m < 1:
        raise InvalidParams(f"m must be at least 1, got {m}")
    ps, tiles = PointSet(), []
    for pt in t.points:
        ps.add(pt)
    for tile in t.tiles:
        P0, P1, P2 = (t.points[i] for i in tile)
        add_lattice(ps, tiles, P0, P1, P2, m)
    sq = tuple(simplify(v / (m * m)) for v in t.tile_sq_lengths)
    return make_tiling(t.gram, ps, t.outer, tiles, sq)


def gen_triple_square(n: int = 1) -> Tiling:
    """3n²-tiling of a (π/6, π/3, π/2) triangle by a smaller copy of itself.

    C = (0, 0) is the right angle, basis CA (length √3) and CB (length 1).
    """
    ps, tiles = PointSet(), []
    C, A, B = (Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))
    D, E = (Fraction(1, 3), Fraction(0)), (Fraction(1, 2), Fraction(1, 2))
    for P0, P1, P2 in ((B, C, D), (B, E, D), (A, E, D)):
        add_lattice(ps, tiles, P0, P1, P2, n)
    outer = (ps.add(A), ps.add(B), ps.add(C))
    sq = (Fraction(1, 3 * n * n), Fraction(1, n * n), Fraction(4, 3 * n * n))
    return make_tiling((3, 0, 1), ps, outer, tiles, sq)
