"""
Command-line front door.

    coxkit --system A2 normalize "[1,0,1]"
    coxkit --system A2 leq "[0]" "[1,0]"
    coxkit --system A2 decompose "[0,1,0]" --J "[1]"
    coxkit --system A3 --L 6 verify all
    coxkit --system A2 verify counterexample --J "[0]"
    coxkit --system A2 --L 3 export ball --format dot

Systems are named presets or paths to JSON matrix files
({"rank": n, "m": [[...], ...]}, 0 meaning infinity).  Words and
generator subsets are JSON arrays of 0-based indices.  Exit codes:
0 success/verified, 2 usage or parse error, 3 budget exceeded,
4 verification failures present.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bruhat, core, theorem
from .errors import BudgetExceeded, CoxeterError
from .parabolic import decompose_left, decompose_right

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_FAILURES = 4


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    system: core.CoxeterSystem
    bound: int | None
    fmt: str
    jobs: int
    ball_budget: int


def _parse_word(text: str) -> list[int]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"not a JSON array: {text!r} ({exc})") from exc
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise UsageError(f"expected a JSON array of integers, got {text!r}")
    return value


def _resolve_system(source: str, orbit_budget: int) -> core.CoxeterSystem:
    try:
        return core.preset(source, orbit_budget=orbit_budget)
    except KeyError:
        pass
    if Path(source).is_file():
        return core.load_system(source, orbit_budget=orbit_budget)
    raise UsageError(f"unknown preset and no such file: {source!r}")


def _make_ball(cfg: CliConfig) -> bruhat.Ball:
    return bruhat.ball(cfg.system, cfg.bound, budget=cfg.ball_budget)


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


# ---------------------------------------------------------------------------
# Subcommands.

def _cmd_normalize(cfg: CliConfig, args) -> int:
    element = core.normalize(cfg.system, _parse_word(args.word))
    if cfg.fmt == "json":
        _emit_json({"length": element.length, "word": list(element.word)})
    else:
        compact = json.dumps(list(element.word), separators=(",", ":"))
        print(f"{compact} (length {element.length})")
    return EXIT_OK


def _cmd_leq(cfg: CliConfig, args) -> int:
    u = core.normalize(cfg.system, _parse_word(args.u))
    w = core.normalize(cfg.system, _parse_word(args.w))
    answer = bruhat.bruhat_leq(cfg.system, u, w)
    if cfg.fmt == "json":
        _emit_json({"leq": answer, "u": list(u.word), "w": list(w.word)})
    else:
        print("true" if answer else "false")
    return EXIT_OK


def _cmd_decompose(cfg: CliConfig, args) -> int:
    w = core.normalize(cfg.system, _parse_word(args.word))
    subset = _parse_word(args.J)
    if args.side == "right":
        quotient, part = decompose_right(cfg.system, w, subset)
        factors = [("quotient", quotient), ("parabolic", part)]
    else:
        part, quotient = decompose_left(cfg.system, w, subset)
        factors = [("parabolic", part), ("quotient", quotient)]
    if cfg.fmt == "json":
        _emit_json(
            {
                "side": args.side,
                "word": list(w.word),
                "J": sorted(set(subset)),
                **{name: list(e.word) for name, e in factors},
            }
        )
    else:
        for name, element in factors:
            compact = json.dumps(list(element.word), separators=(",", ":"))
            print(f"{name} {compact} (length {element.length})")
    return EXIT_OK


def _cmd_verify(cfg: CliConfig, args) -> int:
    b = _make_ball(cfg)
    if args.which == "counterexample":
        if args.J is None:
            raise UsageError("verify counterexample requires --J")
        witness = theorem.find_converse_counterexample(b, _parse_word(args.J))
        if witness is None:
            if cfg.fmt == "json":
                _emit_json(None)
            else:
                print("none")
            return EXIT_OK
        if not theorem.validate_counterexample(b, witness):
            print("internal error: witness failed re-validation", file=sys.stderr)
            return EXIT_FAILURES
        if cfg.fmt == "json":
            _emit_json(witness.as_dict())
        else:
            d = witness.as_dict()
            print(
                f"{d['kind']}: x={d['x']} u1={d['u1']} u2={d['u2']} J={d['J']} "
                f"extrema {d['extremum1']} vs {d['extremum2']}"
            )
        return EXIT_OK

    checks = theorem.ALL_CHECKS if args.which == "all" else (args.which,)
    reports = [theorem.run_check(b, check, jobs=cfg.jobs) for check in checks]
    if cfg.fmt == "json":
        if args.which == "all":
            _emit_json([r.as_dict() for r in reports])
        else:
            _emit_json(reports[0].as_dict())
    else:
        for report in reports:
            print(report.format_text())
    return EXIT_OK if all(r.verified for r in reports) else EXIT_FAILURES


def _cmd_export(cfg: CliConfig, args) -> int:
    b = _make_ball(cfg)
    members = None
    if args.what == "interval":
        if args.x is None or args.y is None:
            raise UsageError("export interval requires --x and --y")
        x = core.normalize(cfg.system, _parse_word(args.x))
        y = core.normalize(cfg.system, _parse_word(args.y))
        members = bruhat.interval(b, x, y).members
    fmt = "dot" if cfg.fmt == "text" else cfg.fmt
    if fmt == "dot":
        print(bruhat.hasse_dot(b, members), end="")
    else:
        print(bruhat.hasse_json(b, members))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser.  The shared flags are accepted both before and after the
# subcommand; the subparser copies use SUPPRESS defaults so that only
# flags actually given there override the front ones.

_FORMATS = ("text", "json", "dot")


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None

    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--system", default=d, help="preset name or matrix file path")
    parser.add_argument("--L", type=int, default=default(None), dest="bound",
                        help="ball length bound (default: enumerate the whole finite group)")
    parser.add_argument("--format", choices=_FORMATS, default=default("text"))
    parser.add_argument("--jobs", type=int, default=default(1),
                        help="worker processes for verification sweeps")
    parser.add_argument("--orbit-budget", type=int, default=default(core.DEFAULT_ORBIT_BUDGET))
    parser.add_argument("--ball-budget", type=int, default=default(bruhat.DEFAULT_BALL_BUDGET))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxkit", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="canonical form and length of a word")
    p.add_argument("word")
    _add_common(p, suppress=True)
    p.set_defaults(handler=_cmd_normalize)

    p = sub.add_parser("leq", help="Bruhat comparison of two words")
    p.add_argument("u")
    p.add_argument("w")
    _add_common(p, suppress=True)
    p.set_defaults(handler=_cmd_leq)

    p = sub.add_parser("decompose", help="parabolic factorization of a word")
    p.add_argument("word")
    p.add_argument("--J", required=True, help="generator subset, JSON array")
    p.add_argument("--side", choices=("right", "left"), default="right")
    _add_common(p, suppress=True)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("verify", help="run verification sweeps over a ball")
    p.add_argument(
        "which",
        choices=theorem.ALL_CHECKS + ("all", "counterexample"),
    )
    p.add_argument("--J", default=None, help="generator subset for counterexample")
    _add_common(p, suppress=True)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("export", help="Hasse diagram of a ball or interval")
    p.add_argument("what", choices=("ball", "interval"))
    p.add_argument("--x", default=None)
    p.add_argument("--y", default=None)
    _add_common(p, suppress=True)
    p.set_defaults(handler=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.system is None:
            raise UsageError("--system is required")
        system = _resolve_system(args.system, args.orbit_budget)
        cfg = CliConfig(
            system=system,
            bound=args.bound,
            fmt=args.format,
            jobs=args.jobs,
            ball_budget=args.ball_budget,
        )
        if cfg.bound is not None and cfg.bound < 0:
            raise UsageError("--L must be >= 0")
        if cfg.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        return args.handler(cfg, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CoxeterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
