import json

import pytest

from tileprove.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_forms(capsys):
    assert run(capsys, "forms", "--n", "50") == (0, "2n² (n=5); e²+f² (7,1)\n", "")
    assert run(capsys, "forms", "--n", "7")[1] == "none\n"


def test_verdict_seven(capsys, tmp_path):
    path = tmp_path / "v7.json"
    code, out, _ = run(capsys, "verdict", "--n", "7", "--json", str(path))
    lines = out.splitlines()
    assert code == 0 and lines[0] == "NoTiling" and len(lines) == 7
    assert json.loads(path.read_text())["overall"] == "NoTiling"


@pytest.mark.parametrize("argv", [
    ["verdict", "--n", "0"],
    ["verdict", "--n", "x"],
    ["verdict"],
    ["search-3a2b", "--n", "7", "--shape", "round"],
    ["search-3a2b", "--n", "201", "--shape", "scalene"],
    ["search-equilateral"],
    ["search-equilateral", "--range", "9"],
    ["gen", "--family", "biquadratic", "--params", "1", "2"],
    ["gen", "--family", "pythagorean", "--params", "6", "8", "10"],
    ["verify", "/nonexistent/tiling.json"],
    ["forms", "--n", "0"],
    ["verdict", "--n", "7", "--jobs", "0"],
])
def test_usage_errors_exit_one(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_jobs_env(capsys, monkeypatch):
    monkeypatch.setenv("TILEPROVE_JOBS", "zero")
    assert run(capsys, "forms", "--n", "5")[0] == 1
    monkeypatch.setenv("TILEPROVE_JOBS", "2")
    assert run(capsys, "forms", "--n", "5")[0] == 0


def test_search_output_independent_of_jobs(capsys, tmp_path):
    outs = []
    for jobs in ("1", "2"):
        path = tmp_path / f"hits{jobs}.json"
        code, out, _ = run(capsys, "search-3a2b", "--n", "12", "--shape", "isosceles",
                           "--bounds", "relaxed", "--jobs", jobs, "--json", str(path))
        assert code == 0
        outs.append((out, path.read_text()))
    assert outs[0] == outs[1]
    assert "hits=23" in outs[0][0]


def test_search_equilateral_flags_typo(capsys):
    code, out, _ = run(capsys, "search-equilateral", "--n", "84", "--gamma", "pi3")
    assert code == 0
    assert "(16, 21, 19)" in out and "note: published tile (16, 20, 19)" in out
    code, out, _ = run(capsys, "search-equilateral", "--range", "3:39")
    assert out == "no candidates for N in [3, 39]\n"


def test_gen_verify_color_round_trip(capsys, tmp_path):
    tiling, svg = tmp_path / "q.json", tmp_path / "q.svg"
    code, _, err = run(capsys, "gen", "--family", "quadratic", "--params", "9", "16", "25", "4",
                       "--out", str(tiling), "--svg", str(svg))
    assert code == 0 and "N=16 verified" in err
    assert svg.read_text().startswith("<svg")
    assert run(capsys, "verify", str(tiling))[1].startswith("N=16 congruent=True disjoint=True covers=True")
    assert run(capsys, "color", str(tiling))[1] == "M=4 sign=+ identity_holds=True\n"


def test_verify_rejects_broken_tiling(capsys, tmp_path):
    tiling = tmp_path / "bad.json"
    run(capsys, "gen", "--family", "hexagonal", "--params", "1", "--out", str(tiling))
    obj = json.loads(tiling.read_text())
    obj["tiles"].pop()
    tiling.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", str(tiling))
    assert code == 1 and "covers=False" in out
    tiling.write_text("{not json")
    assert run(capsys, "verify", str(tiling))[0] == 1


def test_gen_other_families(capsys, tmp_path):
    for family, params, n in (("biquadratic", ["3", "2"], 13), ("double", ["2", "1"], 10),
                              ("pythagorean", ["3", "4", "5"], 50), ("hexagonal", ["2"], 27)):
        code, _, err = run(capsys, "gen", "--family", family, "--params", *params,
                           "--out", str(tmp_path / "t.json"))
        assert code == 0 and f"N={n} verified" in err


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--max", "12")
    assert code == 0
    rows = out.splitlines()[2:]
    assert len(rows) == 10 and rows[4].split() == ["7", "-"]
