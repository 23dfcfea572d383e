"""Black/white coloring of a tiling and its coloring number.

With one tile at the corner A, odd tile counts at boundary vertices, even
counts at interior vertices and equal parity at B and C, tiles can be
colored so that neighbours across an edge differ.  The boundary then
satisfies ``X ± Y + Z = M(a + b + c)`` where ``M`` is black minus white,
``Y`` is the side opposite A and the sign is ``+`` when B and C carry an odd
number of tiles.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction

from ..exact import sign, simplify, split_square
from .tiling import Tiling, _ccw, edges_by_line, elementary_intervals, line_key, orient


@dataclass
class SideDecomposition:
    """Number of tile edges of each squared length along one side of ABC."""

    counts: dict

    def to_json(self) -> dict:
        from ..exact import format_scalar
        return {format_scalar(k): v for k, v in sorted(self.counts.items(), key=lambda kv: float(kv[0]))}


@dataclass
class ColoringReport:
    M: int
    colors: list[int]  # +1 black, -1 white, per tile
    sign: int
    corner: int  # point index of A
    X: SideDecomposition
    Y: SideDecomposition
    Z: SideDecomposition
    identity_holds: bool | None = None

    def to_json(self) -> dict:
        return {
            "M": self.M,
            "sign": "+" if self.sign > 0 else "-",
            "corner": self.corner,
            "colors": ["black" if c > 0 else "white" for c in self.colors],
            "X": self.X.to_json(), "Y": self.Y.to_json(), "Z": self.Z.to_json(),
            "identity_holds": self.identity_holds,
        }


@dataclass
class NotColorable:
    violated: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"colorable": False, "violated": self.violated}


HYPOTHESES = {
    "i": "exactly one tile at A",
    "ii": "odd number of tiles at every boundary vertex",
    "iii": "even number of tiles at every interior vertex",
    "iv": "tile counts at B and C have equal parity",
}


def _on_segment(p, q, x) -> bool:
    """x lies on the closed segment pq (exact)."""
    if sign(orient(p, q, x)) != 0:
        return False
    return (sign(x[0] - p[0]) * sign(x[0] - q[0]) <= 0
            and sign(x[1] - p[1]) * sign(x[1] - q[1]) <= 0)


def classify_vertices(t: Tiling) -> tuple[Counter, set, set]:
    """Tile counts per vertex, plus the boundary and interior vertex sets (corners excluded)."""
    count = Counter(i for tile in t.tiles for i in tile)
    corners = set(t.outer)
    O = [t.points[i] for i in t.outer]
    outer_edges = [(O[0], O[1]), (O[1], O[2]), (O[2], O[0])]
    tile_edges = []
    for tile in t.tiles:
        i, j, k = tile
        tile_edges += [(i, j), (j, k), (k, i)]
    boundary, interior = set(), set()
    for v in count:
        if v in corners:
            continue
        x = t.points[v]
        on = any(_on_segment(p, q, x) for p, q in outer_edges)
        if not on:
            on = any(v not in (a, b) and _on_segment(t.points[a], t.points[b], x)
                     for a, b in tile_edges)
        (boundary if on else interior).add(v)
    return count, boundary, interior


def check_hypotheses(t: Tiling, corner: int) -> list[str]:
    count, boundary, interior = classify_vertices(t)
    others = [i for i in t.outer if i != corner]
    violated = []
    if count[corner] != 1:
        violated.append("i")
    if any(count[v] % 2 == 0 for v in boundary):
        violated.append("ii")
    if any(count[v] % 2 == 1 for v in interior):
        violated.append("iii")
    if count[others[0]] % 2 != count[others[1]] % 2:
        violated.append("iv")
    return violated


def adjacency(t: Tiling) -> list[set[int]]:
    """Tiles sharing a boundary segment of positive length."""
    adj = [set() for _ in t.tiles]
    for le in edges_by_line(t).values():
        edges = le.edges
        for u, v in elementary_intervals(edges):
            left = [ti for t0, t1, sd, ti in edges if sd > 0 and t0 <= u and v <= t1]
            right = [ti for t0, t1, sd, ti in edges if sd < 0 and t0 <= u and v <= t1]
            for a in left:
                for b in right:
                    adj[a].add(b)
                    adj[b].add(a)
    return adj


def _side_counts(t: Tiling, p: int, q: int) -> SideDecomposition:
    P, Q = t.points[p], t.points[q]
    key = line_key(P, Q)
    counts: Counter = Counter()
    for tile in t.tiles:
        i, j, k = tile
        for a, b in ((i, j), (j, k), (k, i)):
            A, B = t.points[a], t.points[b]
            if line_key(A, B) == key and _on_segment(P, Q, A) and _on_segment(P, Q, B):
                counts[t.sq_dist(a, b)] += 1
    return SideDecomposition(dict(counts))


def _sqrt_combination(terms: dict) -> dict | None:
    """Rewrite ``sum c·sqrt(x)`` over rational x as ``{squarefree m: coefficient of sqrt(m)}``."""
    out: Counter = Counter()
    for x, c in terms.items():
        x = simplify(x)
        if not isinstance(x, Fraction):
            return None
        num, den = x.numerator * x.denominator, x.denominator
        k, m = split_square(num)  # sqrt(num/den²) = k·sqrt(m)/den
        out[m] += Fraction(c * k, den)
    return {m: c for m, c in out.items() if c != 0}


def identity_check(t: Tiling, M: int, sgn: int, X, Y, Z) -> bool | None:
    """Exact check of ``X ± Y + Z = M(a + b + c)`` as a combination of square roots.

    Compared term by term after grouping equal squared lengths; when all
    squared lengths are rational the square roots are reduced to distinct
    squarefree radicands, which are linearly independent over Q.  Returns
    None when neither reduction applies.
    """
    terms: Counter = Counter()
    for side, mult in ((X, 1), (Y, sgn), (Z, 1)):
        for sq, n in side.counts.items():
            terms[sq] += mult * n
    for sq in t.tile_sq_lengths:
        terms[simplify(sq)] -= M
    if all(c == 0 for c in terms.values()):
        return True
    reduced = _sqrt_combination(dict(terms))
    if reduced is None:
        return None
    return not reduced


def coloring_number(t: Tiling) -> ColoringReport | NotColorable:
    """Coloring report for the first corner of ABC that satisfies all hypotheses."""
    first_violation = None
    for corner in t.outer:
        violated = check_hypotheses(t, corner)
        if violated:
            if first_violation is None:
                first_violation = violated
            continue
        start = next(ti for ti, tile in enumerate(t.tiles) if corner in tile)
        adj = adjacency(t)
        colors = [0] * t.N
        colors[start] = 1
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                if colors[b] == 0:
                    colors[b] = -colors[a]
                    queue.append(b)
                elif colors[b] == colors[a]:
                    return NotColorable(["coloring is inconsistent"])
        if 0 in colors:
            return NotColorable(["tile adjacency graph is disconnected"])
        B, C = (i for i in t.outer if i != corner)
        count = Counter(i for tile in t.tiles for i in tile)
        sgn = 1 if count[B] % 2 == 1 else -1
        X, Y, Z = _side_counts(t, corner, B), _side_counts(t, B, C), _side_counts(t, C, corner)
        M = sum(colors)
        rep = ColoringReport(M, colors, sgn, corner, X, Y, Z)
        rep.identity_holds = identity_check(t, M, sgn, X, Y, Z)
        return rep
    return NotColorable(first_violation or [])


def boundary_balance(t: Tiling, rep: ColoringReport) -> dict:
    """Signed squared-length counts of colored boundary edges; equals the identity's left side."""
    out: Counter = Counter()
    O = [t.points[i] for i in t.outer]
    for ti, tile in enumerate(t.tiles):
        P = _ccw(t, tile)
        for a, b in ((P[0], P[1]), (P[1], P[2]), (P[2], P[0])):
            for p, q in ((O[0], O[1]), (O[1], O[2]), (O[2], O[0])):
                if _on_segment(p, q, a) and _on_segment(p, q, b):
                    d = (b[0] - a[0], b[1] - a[1])
                    out[simplify(t.dot(d, d))] += rep.colors[ti]
    return dict(out)
