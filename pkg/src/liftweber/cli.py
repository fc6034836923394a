"""Command-line interface.

Exit codes: 0 success (or verified match), 1 usage error, 2 invalid input,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path

from . import io as lio
from .continuous import solve
from .discrete import discrete_min
from .metric import InstanceError
from .oracle import grid_sanity, oracle_solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3

MATCH_ATOL = 1e-9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _int_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b' integers, got {text!r}") from None
    return a, b


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="liftweber", description="Weber location under the lift metric")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def instance_args(sp):
        sp.add_argument("instance", help="instance file (JSON or CSV); '-' for stdin")
        sp.add_argument("--format", choices=("json", "csv"), help="input format (default: sniffed)")
        sp.add_argument("--merge-tol", type=float, default=0.0, metavar="EPS",
                        help="snap coordinates closer than EPS at load (default 0)")
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("solve", help="solve the continuous problem")
    instance_args(sp)
    sp.add_argument("--all-candidates", action="store_true",
                    help="include every candidate with its objective")

    sp = sub.add_parser("discrete", help="pick the best of a fixed set of locations")
    instance_args(sp)
    sp.add_argument("--locations", required=True, help="JSON or CSV file of x,y locations")

    sp = sub.add_parser("verify", help="solve and cross-check against the brute-force oracle")
    instance_args(sp)
    sp.add_argument("--grid", type=int, default=200, metavar="N",
                    help="grid resolution for the sampling check (default 200, 0 disables)")

    sp = sub.add_parser("gen", help="write a random integer instance")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--coord-range", type=_int_pair, default=(-5, 5), metavar="A,B")
    sp.add_argument("--weight-range", type=_int_pair, default=(1, 5), metavar="A,B")
    sp.add_argument("--out")

    sp = sub.add_parser("bench", help="time solve() on random instances")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--coord-range", type=_int_pair, default=(-500, 499), metavar="A,B")
    sp.add_argument("--weight-range", type=_int_pair, default=(1, 5), metavar="A,B")
    sp.add_argument("--out")
    return p


def _load(args):
    src = sys.stdin if args.instance == "-" else args.instance
    return lio.parse_instance(src, args.format, args.merge_tol)


def _emit(doc: dict, out: str | None) -> None:
    text = lio.dumps(doc)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_solve(args) -> int:
    report = solve(_load(args))
    _emit(lio.report_to_dict(report, all_candidates=args.all_candidates), args.out)
    return EXIT_OK


def _cmd_discrete(args) -> int:
    inst = _load(args)
    locs = lio.parse_locations(args.locations)
    _emit(lio.discrete_to_dict(discrete_min(inst, locs), locs), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = _load(args)
    report = solve(inst)
    orc = oracle_solve(inst)
    match = abs(report.optimum_value - orc.optimum_value) <= MATCH_ATOL
    grid = grid_sanity(inst, args.grid, report.optimum_value) if args.grid else None
    ok = match and (grid is None or grid.passed)
    _emit(lio.report_to_dict(report, oracle=orc, grid=grid, match=match), args.out)
    if not ok:
        print(f"liftweber: verification mismatch: solver {report.optimum_value!r} "
              f"vs oracle {orc.optimum_value!r}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_gen(args) -> int:
    inst = lio.generate_instance(args.m, args.coord_range, args.weight_range, args.seed)
    _emit(lio.instance_to_dict(inst), args.out)
    return EXIT_OK


def _cmd_bench(args) -> int:
    if args.trials < 1:
        raise UsageError("liftweber bench: --trials must be >= 1")
    times, d = [], []
    for t in range(args.trials):
        inst = lio.generate_instance(args.m, args.coord_range, args.weight_range, args.seed + t)
        t0 = time.perf_counter()
        report = solve(inst)
        times.append(time.perf_counter() - t0)
        d.append(report.d)
    _emit({
        "m": args.m,
        "trials": args.trials,
        "mean_d": statistics.fmean(d),
        "seconds": {"min": min(times), "mean": statistics.fmean(times), "max": max(times)},
    }, args.out)
    return EXIT_OK


COMMANDS = {
    "solve": _cmd_solve,
    "discrete": _cmd_discrete,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def run_cli(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        print(f"liftweber: file not found: {e.filename}", file=sys.stderr)
        return EXIT_INVALID
    except (InstanceError, ValueError, OSError) as e:
        print(f"liftweber: {e}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run_cli())
