"""Command line entry point: ``tileprove <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import equilateral, search3a2b
from .constructions import (
    MalformedTiling,
    Tiling,
    gen_biquadratic,
    gen_double,
    gen_hexagonal,
    gen_pythagorean_mixed,
    gen_quadratic,
    verify,
)
from .constructions.coloring import NotColorable, coloring_number
from .constructions.svg import IoError, to_svg
from .exact import parse_scalar
from .numtheory import forms_of
from .verdict import MAX_N, verdict

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2
SEARCH_CAP = 200


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def _default_jobs() -> int:
    env = os.environ.get("TILEPROVE_JOBS")
    if env is None:
        return 1
    try:
        return _positive(env)
    except argparse.ArgumentTypeError:
        raise UsageError(f"TILEPROVE_JOBS must be a positive integer, got {env!r}") from None


def _emit(obj, path: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=False)
    if path in (None, "-"):
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _progress(args):
    if not args.verbose:
        return None
    return lambda msg: print(msg, file=sys.stderr, flush=True)


def _check_n(n: int, lo: int, hi: int) -> None:
    if not lo <= n <= hi:
        raise UsageError(f"--n must lie in [{lo}, {hi}], got {n}")


# -- subcommands -------------------------------------------------------------

def cmd_verdict(args) -> int:
    _check_n(args.n, 3, min(args.max_n, MAX_N))
    cert = verdict(args.n, jobs=args.jobs, bounds=args.bounds, progress=_progress(args))
    if args.json:
        _emit(cert.to_json(), args.json)
    print(cert.overall.value)
    for c in cert.cases:
        ev = c.evidence
        detail = ev.get("form") or ev.get("name") or ev.get("note") or ""
        if ev.get("kind") == "search" and "searches" in ev:
            detail = ", ".join(f"{s['shape']}: {s['hits']} hit(s)" for s in ev["searches"])
        elif ev.get("kind") == "search":
            detail = f"{len(ev['candidates'])} candidate tile(s)"
        print(f"  {c.case.value:<26} {c.status.value:<20} {detail}")
    return EXIT_OK


def cmd_search_3a2b(args) -> int:
    _check_n(args.n, 3, min(args.max_n, SEARCH_CAP))
    res = search3a2b.search(args.n, args.shape, bounds=args.bounds, prune=not args.no_prune,
                            jobs=args.jobs, progress=_progress(args))
    hits = [h.to_json() for h in res.hits]
    if args.json:
        _emit(hits, args.json)
    print(f"N={res.N} shape={res.shape.value} bounds={res.bounds.value} "
          f"pruned={res.pruned} hits={len(hits)} digest={res.digest()}")
    if args.verbose:
        st = res.stats
        print(f"tuples={st.tuples} degenerate={st.degenerate} roots_in_range={st.roots_in_range}",
              file=sys.stderr)
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"--range must look like LO:HI, got {text!r}") from None
    if not 3 <= lo <= hi <= SEARCH_CAP:
        raise UsageError(f"--range must satisfy 3 <= LO <= HI <= {SEARCH_CAP}")
    return lo, hi


def cmd_search_equilateral(args) -> int:
    gamma = None if args.gamma is None else equilateral.Gamma.parse(args.gamma)
    if args.range:
        lo, hi = _parse_range(args.range)
    elif args.n is not None:
        _check_n(args.n, 3, min(args.max_n, SEARCH_CAP))
        lo = hi = args.n
    else:
        raise UsageError("give --n or --range")
    rows = equilateral.scan_range(lo, hi, gamma)
    out = []
    for N, g, cands in rows:
        for c in cands:
            out.append(c.to_json())
            flag = "" if c.genuine else "  (squaring artifact)"
            print(f"{N:>4}  {g.label:<5} {c.tile}{flag}")
    notes = [d for d in equilateral.table_discrepancies() if lo <= d["N"] <= hi
             and (gamma is None or d["gamma"] == gamma.value)]
    for d in notes:
        print(f"note: published tile {tuple(d['published'])} for N={d['N']} is not a triangle with "
              f"that angle ({d['note']}); computed {[tuple(t) for t in d['computed']]}")
    if args.json:
        _emit({"candidates": out, "discrepancies": notes}, args.json)
    if not out:
        print(f"no candidates for N in [{lo}, {hi}]")
    return EXIT_OK


def _ints(params: list[str], n: int, family: str) -> list[int]:
    if len(params) != n:
        raise UsageError(f"--family {family} takes {n} integer parameter(s)")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"--params for {family} must be integers") from None


def _build(family: str, params: list[str]) -> Tiling:
    if family == "quadratic":
        if len(params) != 4:
            raise UsageError("--family quadratic takes a2 b2 c2 n")
        return gen_quadratic([parse_scalar(p) for p in params[:3]], int(params[3]))
    if family == "biquadratic":
        return gen_biquadratic(*_ints(params, 2, family))
    if family == "double":
        if len(params) == 2:
            return gen_double(gen_biquadratic(*_ints(params, 2, family)))
        if len(params) == 4:
            return gen_double(gen_quadratic([parse_scalar(p) for p in params[:3]], int(params[3])))
        raise UsageError("--family double takes e f (biquadratic) or a2 b2 c2 n (quadratic)")
    if family == "pythagorean":
        return gen_pythagorean_mixed(*_ints(params, 3, family))
    if family == "hexagonal":
        return gen_hexagonal(*_ints(params, 1, family))
    raise UsageError(f"unknown family {family}")


def cmd_gen(args) -> int:
    try:
        t = _build(args.family, args.params)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = verify(t)
    if not report.ok:
        raise AssertionError(f"generated tiling failed verification: {report.problems}")
    _emit(t.to_json(), args.out)
    if args.svg:
        colors = None
        rep = coloring_number(t)
        if not isinstance(rep, NotColorable):
            colors = rep.colors
        to_svg(t, args.svg, colors)
    print(f"{args.family}: N={t.N} verified", file=sys.stderr)
    return EXIT_OK


def _load(path: str) -> Tiling:
    try:
        with open(path, encoding="utf-8") as fh:
            return Tiling.loads(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not JSON: {exc}") from exc


def cmd_verify(args) -> int:
    t = _load(args.tiling)
    try:
        report = verify(t)
    except MalformedTiling as exc:
        raise UsageError(f"malformed tiling: {exc}") from exc
    if args.json:
        _emit(report.to_json(), args.json)
    print(f"N={report.N} congruent={report.congruent} disjoint={report.disjoint} covers={report.covers}")
    for p in report.problems:
        print(f"  {p}")
    return EXIT_OK if report.ok else EXIT_USAGE


def cmd_color(args) -> int:
    t = _load(args.tiling)
    rep = coloring_number(t)
    if isinstance(rep, NotColorable):
        print("NotColorable: " + ", ".join(rep.violated))
        if args.json:
            _emit(rep.to_json(), args.json)
        return EXIT_OK
    if args.json:
        _emit(rep.to_json(), args.json)
    sgn = "+" if rep.sign > 0 else "-"
    print(f"M={rep.M} sign={sgn} identity_holds={rep.identity_holds}")
    return EXIT_OK


def cmd_forms(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    forms = forms_of(args.n)
    print("; ".join(f.describe() for f in forms) if forms else "none")
    return EXIT_OK


def cmd_table(args) -> int:
    _check_n(args.max, 3, MAX_N)
    print("Forms of N with known tilings (commensurable tiles); informational only.")
    print("Source: Laczkovich (1995) classification; Snover et al. (1991) for similar tiles.")
    for n in range(3, args.max + 1):
        forms = forms_of(n)
        print(f"{n:>4}  {'; '.join(f.describe() for f in forms) if forms else '-'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=_positive, default=None, help="worker processes (default: $TILEPROVE_JOBS or 1)")
    common.add_argument("--verbose", action="store_true", help="progress on standard error")
    common.add_argument("--max-n", type=_positive, default=MAX_N, dest="max_n")

    p = _Parser(prog="tileprove", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verdict", parents=[common], help="case-by-case certificate for one N")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--bounds", choices=[b.value for b in search3a2b.Bounds], default="reference")
    s.add_argument("--json")
    s.set_defaults(func=cmd_verdict)

    s = sub.add_parser("search-3a2b", parents=[common], help="exact search for the 3α+2β=π case")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--shape", choices=[x.value for x in search3a2b.Shape], required=True)
    s.add_argument("--bounds", choices=[b.value for b in search3a2b.Bounds], default="reference")
    s.add_argument("--no-prune", action="store_true", help="drop the boundary cutoff and c-edge minimums")
    s.add_argument("--json")
    s.set_defaults(func=cmd_search_3a2b)

    s = sub.add_parser("search-equilateral", parents=[common], help="rational tiles for equilateral ABC")
    s.add_argument("--n", type=int)
    s.add_argument("--gamma", choices=["pi3", "2pi3"])
    s.add_argument("--range")
    s.add_argument("--json")
    s.set_defaults(func=cmd_search_equilateral)

    s = sub.add_parser("gen", parents=[common], help="generate a tiling family member")
    s.add_argument("--family", choices=["quadratic", "biquadratic", "double", "pythagorean", "hexagonal"],
                   required=True)
    s.add_argument("--params", nargs="+", required=True)
    s.add_argument("--out")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", parents=[common], help="exact check of a tiling JSON file")
    s.add_argument("tiling")
    s.add_argument("--json")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("color", parents=[common], help="coloring number of a tiling JSON file")
    s.add_argument("tiling")
    s.add_argument("--json")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("table", parents=[common], help="forms of N up to --max")
    s.add_argument("--max", type=int, default=MAX_N)
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("forms", parents=[common], help="closed forms matched by N")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_forms)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs is None:
            args.jobs = _default_jobs()
        if args.max_n > SEARCH_CAP:
            raise UsageError(f"--max-n is capped at {SEARCH_CAP}")
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"tileprove: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IoError as exc:
        print(f"tileprove: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, ArithmeticError) as exc:
        print(f"tileprove: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
