"""Command-line interface.

Exit codes: 0 ran and the system is solvable, 3 ran and it is unsolvable
(property (L) fails), 1 usage error, 2 the independent paths disagree.
``scan`` exits 0 when every cell agrees and 2 otherwise.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path as FsPath
from typing import Optional, Sequence

from .degeneration import ConfigError, Fiber, ResolutionConfig, build_resolution, to_dot
from .obstruction import (
    assemble_system, closed_form_verdict, decide_membership, recurrence_trace,
)
from .oracle import DEFAULT_CAP, GridSpec, brute_force_membership, run_agreement
from .zlattice import IntegerMatrix, as_int_vector, snf, solve_integer, solve_mod

EXIT_SOLVABLE = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2
EXIT_UNSOLVABLE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad input; 2 is reserved for disagreement here
    def error(self, message):
        raise UsageError(message)


def dump_json(obj) -> str:
    """Canonical JSON: sorted keys, fixed indent, ASCII only."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        FsPath(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_json(path: str, flag: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"{flag}: cannot read {path}: {exc}") from None


def _config_from(args) -> ResolutionConfig:
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    if not 1 <= args.t <= args.n:
        raise UsageError(f"--t must lie in [1, --n], got {args.t}")
    return ResolutionConfig(args.n, args.t, Fiber(args.fiber))


def cmd_check(args) -> int:
    config = _config_from(args)
    if args.m < 2:
        raise UsageError(f"--m must be >= 2, got {args.m}")
    m = args.m
    system = assemble_system(build_resolution(config))
    solver = decide_membership(system, m)
    closed = closed_form_verdict(config, m)
    trace = recurrence_trace(config, m)
    oracle = brute_force_membership(system, m, DEFAULT_CAP)
    answers = {solver.solvable, closed.solvable, trace.solvable}
    if oracle is not None:
        answers.add(oracle.solvable)
    agree = len(answers) == 1

    if args.format == "json":
        _emit(dump_json({
            "verdict": solver.to_json(),
            "closed_form": closed.to_json(),
            "oracle": None if oracle is None else oracle.to_json(),
            "trace": trace.to_json(),
            "agree": agree,
        }), None)
    else:
        w = sys.stdout.write
        w(f"A_{config.n}, t={config.t}, {config.fiber.value} fiber, m={m}\n")
        w(f"solver      : {'solvable' if solver.solvable else 'unsolvable'}")
        if solver.witness is not None:
            w(f"  witness (a, b_1..b_n) = {list(solver.witness)}")
        if solver.certificate is not None:
            c = solver.certificate
            w(f"  certificate {c.diag}·x ≡ {c.rhs} (mod {c.modulus})")
        w("\n")
        w(f"closed form : {'solvable' if closed.solvable else 'unsolvable'}\n")
        if oracle is not None:
            w(f"brute force : {'solvable' if oracle.solvable else 'unsolvable'}\n")
        w("elimination :\n" + trace.render() + "\n")
        w(f"interpretation: {solver.interpretation.value}\n")
        if not agree:
            w("!!! DISAGREEMENT between decision paths !!!\n")
    if not agree:
        return EXIT_DISAGREE
    return EXIT_SOLVABLE if solver.solvable else EXIT_UNSOLVABLE


def cmd_scan(args) -> int:
    fibers = {"both": (Fiber.IRREDUCIBLE, Fiber.REDUCIBLE),
              "irreducible": (Fiber.IRREDUCIBLE,),
              "reducible": (Fiber.REDUCIBLE,)}[args.fibers]
    try:
        grid = GridSpec((args.n_min, args.n_max), (args.m_min, args.m_max),
                        fibers, args.oracle_cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_agreement(grid)
    text = report.to_csv() if args.format == "csv" else dump_json(report.to_json())
    _emit(text, args.out)
    return EXIT_SOLVABLE if report.all_agree else EXIT_DISAGREE


def cmd_graph(args) -> int:
    _emit(to_dot(build_resolution(_config_from(args))), args.out)
    return 0


def _matrix_arg(path: str) -> IntegerMatrix:
    try:
        return IntegerMatrix.from_json(_load_json(path, "--matrix"))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"--matrix: {exc}") from None


def cmd_snf(args) -> int:
    D, U, V = snf(_matrix_arg(args.matrix))
    _emit(dump_json({"D": D.to_json(), "U": U.to_json(), "V": V.to_json()}), None)
    return 0


def cmd_solve(args) -> int:
    A = _matrix_arg(args.matrix)
    try:
        c = as_int_vector(_load_json(args.vector, "--vector"))
    except TypeError as exc:
        raise UsageError(f"--vector: {exc}") from None
    if len(c) != A.rows:
        raise UsageError(f"--vector has {len(c)} entries, matrix has {A.rows} rows")
    if args.mod is None:
        x = solve_integer(A, c)
        payload = {"status": "unsolvable"} if x is None else {
            "status": "solvable", "witness": list(x)}
        ok = x is not None
    else:
        if args.mod < 1:
            raise UsageError(f"--mod must be >= 1, got {args.mod}")
        outcome = solve_mod(A, c, args.mod)
        payload, ok = outcome.to_json(), outcome.solvable
    _emit(dump_json(payload), None)
    return EXIT_SOLVABLE if ok else EXIT_UNSOLVABLE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="andegen", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fibers = [f.value for f in Fiber]

    c = sub.add_parser("check", help="decide one configuration by every path")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--fiber", choices=fibers, required=True)
    c.add_argument("--format", choices=["human", "json"], default="human")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("scan", help="agreement sweep over a parameter grid")
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--m-min", type=int, required=True)
    s.add_argument("--m-max", type=int, required=True)
    s.add_argument("--fibers", choices=["both"] + fibers, default="both")
    s.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.add_argument("--out")
    s.set_defaults(func=cmd_scan)

    g = sub.add_parser("graph", help="dual graph in DOT format")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--t", type=int, required=True)
    g.add_argument("--fiber", choices=fibers, required=True)
    g.add_argument("--out")
    g.set_defaults(func=cmd_graph)

    n = sub.add_parser("snf", help="Smith normal form of a JSON matrix")
    n.add_argument("--matrix", required=True)
    n.set_defaults(func=cmd_snf)

    v = sub.add_parser("solve", help="solve A x = c over Z or mod m")
    v.add_argument("--matrix", required=True)
    v.add_argument("--vector", required=True)
    v.add_argument("--mod", type=int)
    v.set_defaults(func=cmd_solve)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, ConfigError) as exc:
        sys.stderr.write(f"andegen: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
