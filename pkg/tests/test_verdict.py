import json

import pytest

from tileprove.constructions import verify
from tileprove.search3a2b import Bounds
from tileprove.tiles import AngleCase, OutOfRangeError
from tileprove.verdict import RULES, Overall, Status, verdict

IMPOSSIBLE = (Status.IMPOSSIBLE_CITED, Status.IMPOSSIBLE_COMPUTED)


@pytest.fixture(scope="module")
def v7():
    return verdict(7)


def test_seven_has_no_tiling(v7):
    assert v7.overall is Overall.NO_TILING
    assert len(v7.cases) == 6
    others = [c for c in v7.cases if c.case is not AngleCase.COMMENSURABLE]
    assert len(others) == 5 and all(c.status in IMPOSSIBLE for c in others)
    assert v7.case(AngleCase.THREE_ALPHA_TWO_BETA).status is Status.IMPOSSIBLE_COMPUTED


def test_certificate_json(v7):
    obj = json.loads(json.dumps(v7.to_json()))
    assert obj["schema"] == 1 and obj["overall"] == "NoTiling" and obj["search_bounds"] == "reference"
    for case in obj["cases"]:
        if case["status"] == "ImpossibleCited":
            assert case["evidence"]["kind"] == "citation" and case["evidence"]["statement"]
        if case["status"] == "ImpossibleComputed":
            assert case["evidence"]["kind"] == "search"


def test_eleven_has_no_tiling():
    v = verdict(11)
    assert v.overall is Overall.NO_TILING
    assert all(c.status in IMPOSSIBLE for c in v.cases)


@pytest.mark.parametrize("N", [3, 4, 5, 6, 8, 9, 12, 13, 16, 27, 50])
def test_constructible_n(N):
    v = verdict(N)
    assert v.overall is Overall.TILING_EXISTS
    comm = v.case(AngleCase.COMMENSURABLE)
    assert comm.status is Status.TILING_EXISTS
    assert comm.witness.N == N and verify(comm.witness).ok


@pytest.mark.parametrize("N", [14, 19])
def test_partial_cases(N):
    v = verdict(N)
    assert v.overall is Overall.UNKNOWN
    assert v.case(AngleCase.THREE_ALPHA_TWO_BETA).status is Status.INCONCLUSIVE
    assert v.case(AngleCase.RIGHT_TILE_ISOSCELES).status is Status.IMPOSSIBLE_CITED
    assert v.case(AngleCase.GAMMA_EQUALS_2_ALPHA).status is Status.IMPOSSIBLE_CITED


def test_relaxed_bounds_leave_eleven_open():
    v = verdict(11, bounds=Bounds.RELAXED)
    assert v.case(AngleCase.THREE_ALPHA_TWO_BETA).status is Status.INCONCLUSIVE
    assert v.overall is Overall.UNKNOWN


def test_rules_are_data():
    for rule in RULES.values():
        assert rule.source and rule.statement
    assert RULES["gamma-two-alpha"].excludes(22) and not RULES["gamma-two-alpha"].excludes(20)
    assert RULES["right-tile-isosceles"].excludes(7)
    assert not RULES["right-tile-isosceles"].excludes(24)  # 6·2²


def test_out_of_range():
    for N in (0, 2, 101):
        with pytest.raises(OutOfRangeError):
            verdict(N)
