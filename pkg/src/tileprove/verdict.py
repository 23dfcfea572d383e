"""Per-N verdicts combining exact searches, explicit constructions and cited theorems."""

from __future__ import annotations

import enum
import hashlib
import json
import logging
from dataclasses import dataclass, field
from typing import Callable

from . import equilateral, search3a2b
from .constructions import (
    gen_biquadratic,
    gen_double,
    gen_hexagonal,
    gen_quadratic,
    gen_subdivide,
    gen_triple_square,
    verify,
)
from .constructions.tiling import Tiling
from .numtheory import FormKind, NForm, forms_of, is_prime, is_square, is_sum_of_two_squares
from .tiles import AngleCase, OutOfRangeError

log = logging.getLogger(__name__)

MAX_N = 100
SCHEMA_VERSION = 1


class Status(enum.Enum):
    IMPOSSIBLE_COMPUTED = "ImpossibleComputed"
    IMPOSSIBLE_CITED = "ImpossibleCited"
    INCONCLUSIVE = "Inconclusive"
    TILING_EXISTS = "TilingExists"


class Overall(enum.Enum):
    NO_TILING = "NoTiling"
    TILING_EXISTS = "TilingExists"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Rule:
    """A cited theorem: ``excludes(N)`` is True when it rules out every N-tiling in its case."""

    name: str
    case: AngleCase
    source: str
    statement: str
    excludes: Callable[[int], bool]

    def to_json(self) -> dict:
        return {"name": self.name, "source": self.source, "statement": self.statement}


def _right_tile_allowed(N: int) -> bool:
    if is_square(N) or is_sum_of_two_squares(N) is not None:
        return True
    return N % 6 == 0 and is_square(N // 6)


RULES: dict[str, Rule] = {r.name: r for r in (
    Rule(
        "commensurable-forms",
        AngleCase.COMMENSURABLE,
        "Laczkovich (1995) classification of tiles with rational angles, with Snover et al. (1991) for similar tiles",
        "If every angle of the tile is a rational multiple of π, N is a square, a sum of two "
        "squares, or 2, 3 or 6 times a square.",
        lambda N: not forms_of(N),
    ),
    Rule(
        "right-tile-isosceles",
        AngleCase.RIGHT_TILE_ISOSCELES,
        "isosceles-triangle tiling theorem (companion study)",
        "An isosceles triangle tiled by a right-angled tile with the base angles equal to a tile "
        "angle needs N to be a square, a sum of two positive squares, or six times a square.",
        lambda N: not _right_tile_allowed(N),
    ),
    Rule(
        "gamma-two-alpha",
        AngleCase.GAMMA_EQUALS_2_ALPHA,
        "isosceles-triangle tiling theorem (companion study)",
        "An isosceles triangle with base angles α tiled by a tile with γ = 2α and α/π irrational "
        "needs N that is neither a prime nor twice a prime.",
        lambda N: is_prime(N) or (N % 2 == 0 and is_prime(N // 2)),
    ),
    Rule(
        "gamma-two-pi-over-three",
        AngleCase.GAMMA_TWO_PI_OVER_3,
        "boundary c-edge lemma and area count",
        "With γ = 2π/3, α/π irrational and ABC not similar to the tile, every side of ABC carries "
        "at least two c edges, which forces the area of at least 12 tiles.",
        lambda N: N < 12,
    ),
)}

IMPORTED = {
    "rational-tile": {
        "source": "Laczkovich (2012)",
        "statement": "In the equilateral cases with γ = π/3 or 2π/3 and α/π irrational the tile is "
                     "similar to one with rational sides, so only rational s need be examined.",
    },
}


@dataclass
class CaseResult:
    case: AngleCase
    status: Status
    evidence: dict = field(default_factory=dict)
    witness: Tiling | None = None

    def to_json(self) -> dict:
        return {"case": self.case.value, "status": self.status.value, "evidence": self.evidence}


@dataclass
class VerdictCertificate:
    N: int
    overall: Overall
    cases: list[CaseResult]
    bounds: search3a2b.Bounds = search3a2b.Bounds.REFERENCE

    def case(self, case: AngleCase) -> CaseResult:
        return next(c for c in self.cases if c.case is case)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "N": self.N,
            "overall": self.overall.value,
            "search_bounds": self.bounds.value,
            "cases": [c.to_json() for c in self.cases],
        }


def tiling_digest(t: Tiling) -> str:
    return hashlib.sha256(t.dumps().encode()).hexdigest()


def construct_for_form(form: NForm) -> Tiling:
    """An explicit tiling with ``form.value()`` tiles."""
    e, f = form.witness
    if form.kind is FormKind.SQUARE:
        return gen_quadratic((4, 9, 16), e)
    if form.kind is FormKind.SUM_TWO_SQUARES:
        if e == f:
            return gen_double(gen_quadratic((1, 1, 2), e))
        return gen_biquadratic(e, f)
    if form.kind is FormKind.TWICE_SQUARE:
        return gen_double(gen_quadratic((9, 16, 25), e))
    if form.kind is FormKind.THRICE_SQUARE:
        if e - 1 <= 10:
            return gen_hexagonal(e - 1)
        return gen_subdivide(gen_hexagonal(0), e)
    if form.kind is FormKind.SIX_TIMES_SQUARE:
        return gen_double(gen_triple_square(e))
    raise ValueError(f"no construction for {form}")


def _commensurable(N: int) -> CaseResult:
    rule = RULES["commensurable-forms"]
    forms = forms_of(N)
    if not forms:
        return CaseResult(AngleCase.COMMENSURABLE, Status.IMPOSSIBLE_CITED,
                          {"kind": "citation", **rule.to_json(), "forms": []})
    for form in forms:
        t = construct_for_form(form)
        report = verify(t)
        if report.ok and report.N == N:
            return CaseResult(AngleCase.COMMENSURABLE, Status.TILING_EXISTS, {
                "kind": "construction",
                "form": form.describe(),
                "forms": [f.describe() for f in forms],
                "verify": report.to_json(),
                "tiling_sha256": tiling_digest(t),
            }, witness=t)
        log.warning("construction for %s failed verification: %s", form.describe(), report.problems)
    return CaseResult(AngleCase.COMMENSURABLE, Status.INCONCLUSIVE,
                      {"kind": "forms", "forms": [f.describe() for f in forms],
                       "note": "no verified construction"})


def _cited(name: str, N: int) -> CaseResult:
    rule = RULES[name]
    if rule.excludes(N):
        return CaseResult(rule.case, Status.IMPOSSIBLE_CITED, {"kind": "citation", **rule.to_json()})
    return CaseResult(rule.case, Status.INCONCLUSIVE,
                      {"kind": "citation", **rule.to_json(), "note": "rule does not exclude this N"})


def _search_evidence(res: search3a2b.SearchResult, first_only: bool) -> dict:
    return {
        "shape": res.shape.value,
        "hits": len(res.hits),
        "first_only": first_only,
        "bounds": res.bounds.value,
        "tuples": res.stats.tuples,
        "degenerate_tuples": res.stats.degenerate,
        "digest": res.digest(),
    }


def _three_alpha_two_beta(N: int, jobs: int, bounds, progress) -> CaseResult:
    searches = []
    for shape in search3a2b.Shape:
        res = search3a2b.search(N, shape, bounds=bounds, jobs=jobs, first_only=True, progress=progress)
        searches.append(_search_evidence(res, True))
    empty = all(s["hits"] == 0 for s in searches)
    status = Status.IMPOSSIBLE_COMPUTED if empty else Status.INCONCLUSIVE
    return CaseResult(AngleCase.THREE_ALPHA_TWO_BETA, status, {"kind": "search", "searches": searches})


def _equilateral_evidence(N: int, gamma: equilateral.Gamma) -> dict:
    cands = equilateral.find_candidates(N, gamma)
    payload = json.dumps([c.to_json() for c in cands], sort_keys=True, separators=(",", ":"))
    return {
        "gamma": gamma.value,
        "candidates": [list(c.tile) for c in cands],
        "digest": hashlib.sha256(payload.encode()).hexdigest(),
        "imported": IMPORTED["rational-tile"],
    }


def _gamma_two_pi_over_3(N: int) -> CaseResult:
    res = _cited("gamma-two-pi-over-three", N)
    res.evidence["equilateral_subcase"] = _equilateral_evidence(N, equilateral.Gamma.TWO_PI_OVER_3)
    return res


def _gamma_pi_over_3(N: int) -> CaseResult:
    ev = _equilateral_evidence(N, equilateral.Gamma.PI_OVER_3)
    status = Status.INCONCLUSIVE if ev["candidates"] else Status.IMPOSSIBLE_COMPUTED
    return CaseResult(AngleCase.GAMMA_PI_OVER_3_EQUILATERAL, status, {"kind": "search", **ev})


def verdict(N: int, *, jobs: int = 1, bounds=search3a2b.Bounds.REFERENCE, progress=None) -> VerdictCertificate:
    """Case-by-case certificate for N-tilings of a triangle by congruent triangles.

    When a verified construction exists the 3α+2β=π search is skipped and
    that case is reported as inconclusive.
    """
    if not 3 <= N <= MAX_N:
        raise OutOfRangeError(f"N must lie in [3, {MAX_N}], got {N}")
    bounds = search3a2b.Bounds(bounds)
    comm = _commensurable(N)
    cases = [comm, _cited("right-tile-isosceles", N), _cited("gamma-two-alpha", N)]
    if comm.status is Status.TILING_EXISTS:
        cases.append(CaseResult(AngleCase.THREE_ALPHA_TWO_BETA, Status.INCONCLUSIVE,
                                {"kind": "skipped", "note": "not run: a tiling exists"}))
    else:
        cases.append(_three_alpha_two_beta(N, jobs, bounds, progress))
    cases += [_gamma_two_pi_over_3(N), _gamma_pi_over_3(N)]

    if any(c.status is Status.TILING_EXISTS for c in cases):
        overall = Overall.TILING_EXISTS
    elif all(c.status in (Status.IMPOSSIBLE_CITED, Status.IMPOSSIBLE_COMPUTED) for c in cases):
        overall = Overall.NO_TILING
    else:
        overall = Overall.UNKNOWN
    return VerdictCertificate(N, overall, cases, bounds)
