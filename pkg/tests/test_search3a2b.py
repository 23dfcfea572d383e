import json
import random
from fractions import Fraction

import mpmath
import pytest

from tileprove.exact import DEGENERATE, QuadExt, solve_quadratic_exact
from tileprove.search3a2b import (
    BoundaryDecomposition,
    Bounds,
    ColoringParams,
    Shape,
    area_residuals,
    coloring_quadratic,
    discriminant,
    max_boundary_edges,
    scalene_lower_limit,
    search,
    side_in_c_units,
)
from tileprove.tiles import OutOfRangeError

GOLDEN_NS = list(range(3, 12)) + [14]


def _key(h):
    return json.dumps(h, sort_keys=True)


def test_coloring_quadratic_matches_equation():
    params = ColoringParams(3, 2, 1, 4)
    A, B, C = coloring_quadratic(params)
    for s in (Fraction(1, 3), Fraction(2, 7)):
        lhs = params.M * (2 + s - s * s)
        rhs = params.P * s + params.Q * (1 - s * s) + params.R
        assert A * s * s + B * s + C == lhs - rhs
    assert discriminant(params) == B * B - 4 * A * C


def test_side_lengths_in_c_units():
    s = Fraction(1, 2)
    assert side_in_c_units(1, 1, 1, s) == Fraction(1, 2) + Fraction(3, 4) + 1


def test_area_residuals_need_unit_interval():
    dec = BoundaryDecomposition(0, 0, 2, 0, 0, 2, 0, 0, 2)
    with pytest.raises(OutOfRangeError):
        area_residuals(dec, Fraction(3, 2), 7)


def test_scalene_lower_limit():
    assert scalene_lower_limit(Fraction(1, 2)) == 2  # a = 1/2 < b = 3/4
    s = QuadExt(-1, 1, 2)  # about 0.414, b = 2s so b/s is the integer 2
    assert s * s == 3 - 2 * QuadExt.sqrt(2)
    assert scalene_lower_limit(s) == 1
    assert scalene_lower_limit(Fraction(4, 5)) == 2  # b = 9/25 < a, a/b not an integer


def test_cutoffs():
    assert max_boundary_edges(11, True, Bounds.REFERENCE) == 8
    assert max_boundary_edges(11, True, Bounds.RELAXED) == 9
    assert max_boundary_edges(11, False) == 14


def test_relaxed_bounds_admit_a_hand_checked_hit_at_11():
    # tile (2, 3, 4) up to scale, i.e. s = 1/2; X = 2c, Z = b + 2c, Y = 2c, M = 3
    s = Fraction(1, 2)
    a, b, c = s, 1 - s * s, Fraction(1)
    X, Z, Y = 2 * c, b + 2 * c, 2 * c
    assert X + Y + Z == 3 * (a + b + c)
    assert X * Z == 11 * a * c  # angle at B is β
    hits = search(11, Shape.ISOSCELES, bounds=Bounds.RELAXED).hits
    wanted = dict(p=0, q=0, r=2, u=0, v=1, w=2, k=0, ell=0, m=2, M=3, s="1/2", which_area="BisBeta")
    assert any(all(h.to_json()[k_] == v_ for k_, v_ in wanted.items()) for h in hits)
    assert search(11, Shape.ISOSCELES).hits == []


@pytest.mark.parametrize("bounds", ["reference", "relaxed"])
@pytest.mark.parametrize("shape", ["isosceles", "scalene"])
@pytest.mark.parametrize("N", GOLDEN_NS)
def test_hits_match_brute_force_golden(golden_dir, N, shape, bounds):
    table = json.loads((golden_dir / f"search3a2b_{bounds}.json").read_text())
    want = table[f"{N}/{shape}"]
    got = search(N, shape, bounds=bounds)
    assert len(got.hits) == want["count"]
    assert sorted((h.to_json() for h in got.hits), key=_key) == want["hits"]


def test_parallel_output_is_identical():
    one = search(12, "isosceles", bounds="relaxed", jobs=1)
    two = search(12, "isosceles", bounds="relaxed", jobs=2)
    assert one.hits and one.digest() == two.digest()
    assert [h.to_json() for h in one.hits] == [h.to_json() for h in two.hits]


def test_first_only_stops_early():
    full = search(14, "isosceles")
    first = search(14, "isosceles", first_only=True)
    assert len(first.hits) == 1 and first.hits[0] in full.hits


def test_degenerate_tuples_are_counted():
    res = search(8, "scalene")  # (M, P, Q, R) = (1, 1, 1, 1) zeroes every coefficient
    assert res.stats.degenerate > 0
    assert res.stats.tuples > res.stats.degenerate


def test_exact_residuals_agree_with_50_digit_floats():
    rng = random.Random(20240531)
    mpmath.mp.dps = 50
    tol = mpmath.mpf(10) ** -40
    states = 0
    zeros = 0
    while states < 10_000:
        N = rng.randint(3, 30)
        params = ColoringParams(rng.randint(1, 12), rng.randint(-10, 10), rng.randint(-10, 10), rng.randint(-10, 14))
        roots = solve_quadratic_exact(*coloring_quadratic(params))
        if roots is DEGENERATE:
            continue
        for s in roots:
            if not 0 < s < 1:
                continue
            dec = BoundaryDecomposition(*(rng.randint(0, 4) for _ in range(9)))
            ra, rb = area_residuals(dec, s, N)
            sm = s.to_mpf() if isinstance(s, QuadExt) else mpmath.mpf(s.numerator) / s.denominator
            X = dec.r + dec.p * sm + dec.q * (1 - sm * sm)
            Z = dec.w + dec.u * sm + dec.v * (1 - sm * sm)
            fa, fb = X * Z - N * (1 - sm * sm), X * Z - N * sm
            for exact, approx in ((ra, fa), (rb, fb)):
                ex = exact.to_mpf() if isinstance(exact, QuadExt) else mpmath.mpf(exact.numerator) / exact.denominator
                assert abs(ex - approx) < tol
                assert (exact == 0) == (abs(approx) < tol)
                zeros += exact == 0
            states += 1
    assert states >= 10_000
