"""Command line surface: diagrams, distances, isometry verification, transfer.

Exit codes: 0 success, 1 property violation, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import io as fileio
from .grid import to_grid
from .intervals import CLOSED, OPEN, CircleInterval, CircleModule, diagram_of, diagram_of_line
from .interleaving import BudgetExceeded, DEFAULT_BUDGET, bruteforce_distance, interleaving_distance_circle
from .matching_transfer import invariant_cost, lift_matching, project_matching
from .metric_plane import bottleneck_plane
from .metric_quotient import (
    bottleneck_quotient,
    matching_cost_quotient,
    quotient_linf_with_shift,
)
from .rationals import format_ratio

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


@dataclass
class RunConfig:
    """Knobs of the randomized verification harness."""

    seed: int = 0
    trials: int = 100
    grid: int = 8
    budget: int = DEFAULT_BUDGET
    window: int = 3
    fmt: str = "text"

    def validate(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.grid < 2:
            raise ValueError("grid resolution must be at least 2")
        if self.budget < 1:
            raise ValueError("budget must be positive")
        if self.window < 0:
            raise ValueError("window must be nonnegative")


def random_circle_module(rng: random.Random, grid: int, max_intervals: int = 3) -> CircleModule:
    """Random on-grid circle module, as used by `verify-isometry`.

    Draw order (documented so runs are reproducible): interval count uniform
    on 0..max_intervals, then per interval a start uniform on {0,...,grid-1}/grid
    and a length uniform on {1,...,grid}/grid.  Intervals are closed-open.
    """
    count = rng.randint(0, max_intervals)
    intervals = []
    for _ in range(count):
        start = Fraction(rng.randrange(grid), grid)
        length = Fraction(rng.randint(1, grid), grid)
        intervals.append(CircleInterval(start, start + length, CLOSED, OPEN))
    return CircleModule(tuple(intervals))


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _cmd_dgm(args) -> int:
    text = _read_text(args.input)
    if args.mode == "line":
        diagram = diagram_of_line(fileio.read_line_module(text))
        out = fileio.write_plane_diagram(diagram, args.format)
    else:
        diagram = diagram_of(fileio.read_circle_module(text))
        out = fileio.write_quotient_diagram(diagram, args.format)
    _emit(out, args.output)
    return EXIT_OK


def _witness_lines(result, quotient_points=None, fmt="text") -> list[str]:
    lines = []
    for i, j in sorted(result.witness.pairs):
        if quotient_points is not None:
            a_points, b_points = quotient_points
            _, k = quotient_linf_with_shift(a_points[i], b_points[j])
            if fmt == "json-lines":
                lines.append(json.dumps({"pair": [i, j], "shift": -k}))
            else:
                lines.append(f"pair {i} {j} {-k}")
        else:
            if fmt == "json-lines":
                lines.append(json.dumps({"pair": [i, j]}))
            else:
                lines.append(f"pair {i} {j}")
    for i in sorted(result.witness.unmatched_a):
        lines.append(json.dumps({"unmatchedA": i}) if fmt == "json-lines" else f"unmatchedA {i}")
    for j in sorted(result.witness.unmatched_b):
        lines.append(json.dumps({"unmatchedB": j}) if fmt == "json-lines" else f"unmatchedB {j}")
    return lines


def _cmd_distance(args) -> int:
    text_a = _read_text(args.diagram_a)
    text_b = _read_text(args.diagram_b)
    quotient_points = None
    if args.metric == "bottleneck":
        a = fileio.read_plane_diagram(text_a)
        b = fileio.read_plane_diagram(text_b)
        result = bottleneck_plane(a, b)
    elif args.metric == "bottleneck-q":
        a = fileio.read_quotient_diagram(text_a, canonicalize=not args.no_canonicalize)
        b = fileio.read_quotient_diagram(text_b, canonicalize=not args.no_canonicalize)
        result = bottleneck_quotient(a, b)
        quotient_points = (a.points, b.points)
    else:  # interleave-circle: inputs are interval lists for circle modules
        va = fileio.read_circle_module(text_a)
        vb = fileio.read_circle_module(text_b)
        a = diagram_of(va)
        b = diagram_of(vb)
        result = bottleneck_quotient(a, b)
        quotient_points = (a.points, b.points)

    lines = []
    if args.format == "json-lines":
        lines.append(json.dumps({"metric": args.metric, "value": format_ratio(result.value)}))
    else:
        lines.append(format_ratio(result.value))
    if args.witness:
        lines.extend(_witness_lines(result, quotient_points, args.format))
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_verify_isometry(args) -> int:
    cfg = RunConfig(
        seed=args.seed,
        trials=args.trials,
        grid=args.grid,
        budget=args.budget,
        window=args.window,
        fmt=args.format,
    )
    cfg.validate()
    rng = random.Random(cfg.seed)
    bound = Fraction(1, cfg.grid)
    worst = Fraction(0)
    violations = 0
    exhausted = 0
    lines = []
    for trial in range(cfg.trials):
        module_v = random_circle_module(rng, cfg.grid)
        module_w = random_circle_module(rng, cfg.grid)
        circle = interleaving_distance_circle(module_v, module_w)
        try:
            grid_value = bruteforce_distance(
                to_grid(module_v, cfg.grid), to_grid(module_w, cfg.grid), cfg.budget
            )
        except BudgetExceeded:
            exhausted += 1
            if cfg.fmt == "json-lines":
                lines.append(json.dumps({"trial": trial, "circle": format_ratio(circle), "status": "budget-exhausted"}))
            else:
                lines.append(f"trial {trial}: circle={format_ratio(circle)} budget-exhausted")
            continue
        gap = abs(grid_value - circle)
        worst = max(worst, gap)
        status = "ok"
        if gap > bound:
            violations += 1
            status = "violation"
        if cfg.fmt == "json-lines":
            lines.append(
                json.dumps(
                    {
                        "trial": trial,
                        "circle": format_ratio(circle),
                        "grid": format_ratio(grid_value),
                        "discrepancy": format_ratio(gap),
                        "status": status,
                    }
                )
            )
        else:
            lines.append(
                f"trial {trial}: circle={format_ratio(circle)} grid={format_ratio(grid_value)} "
                f"discrepancy={format_ratio(gap)} {status}"
            )
    if cfg.fmt == "json-lines":
        lines.append(
            json.dumps(
                {
                    "record": "summary",
                    "trials": cfg.trials,
                    "max_discrepancy": format_ratio(worst),
                    "bound": format_ratio(bound),
                    "violations": violations,
                    "budget_exhausted": exhausted,
                }
            )
        )
    else:
        lines.append(
            f"max discrepancy {format_ratio(worst)} over {cfg.trials} trials "
            f"(bound {format_ratio(bound)}); violations {violations}; budget exhausted {exhausted}"
        )
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_VIOLATION if violations else EXIT_OK


def _cmd_transfer(args) -> int:
    canonicalize = not args.no_canonicalize
    diagram_a = fileio.read_quotient_diagram(_read_text(args.diagram_a), canonicalize)
    diagram_b = fileio.read_quotient_diagram(_read_text(args.diagram_b), canonicalize)
    matching_text = _read_text(args.matching)

    if args.direction == "lift":
        quotient_matching = fileio.read_quotient_matching(
            matching_text, len(diagram_a.points), len(diagram_b.points)
        )
        lifted = lift_matching(diagram_a, diagram_b, quotient_matching)
        quotient_cost = matching_cost_quotient(diagram_a, diagram_b, quotient_matching)
        plane_cost = invariant_cost(lifted)
        _emit(fileio.write_invariant_matching(lifted), args.output)
        ok = plane_cost == quotient_cost
        report = {
            "direction": "lift",
            "quotient_cost": format_ratio(quotient_cost),
            "invariant_cost": format_ratio(plane_cost),
            "costs_equal": ok,
        }
    else:
        orbit_matching = fileio.read_invariant_matching(
            matching_text, diagram_a.points, diagram_b.points, window=args.window
        )
        projected = project_matching(orbit_matching)
        plane_cost = invariant_cost(orbit_matching)
        quotient_cost = matching_cost_quotient(diagram_a, diagram_b, projected)
        _emit(fileio.write_partial_matching(projected), args.output)
        ok = quotient_cost <= plane_cost
        report = {
            "direction": "project",
            "invariant_cost": format_ratio(plane_cost),
            "quotient_cost": format_ratio(quotient_cost),
            "cost_not_increased": ok,
        }

    if args.format == "json-lines":
        sys.stderr.write(json.dumps(report) + "\n")
    else:
        for key, value in report.items():
            sys.stderr.write(f"{key} {value}\n")
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlepers",
        description=(
            "Persistence diagrams and exact bottleneck/interleaving distances "
            "for interval modules on the line and the circle."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dgm = sub.add_parser("dgm", help="compute a persistence diagram from an interval list")
    p_dgm.add_argument("mode", choices=["line", "circle"])
    p_dgm.add_argument("input", help="interval list file (`KIND lo hi` per line)")
    p_dgm.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    p_dgm.add_argument("--format", choices=["text", "json-lines"], default="text")

    p_dist = sub.add_parser("distance", help="distance between two diagrams or circle modules")
    p_dist.add_argument("metric", choices=["bottleneck", "bottleneck-q", "interleave-circle"])
    p_dist.add_argument(
        "diagram_a",
        help="first input: diagram file, or interval list for interleave-circle",
    )
    p_dist.add_argument("diagram_b", help="second input")
    p_dist.add_argument("--witness", action="store_true", help="also print an optimal matching")
    p_dist.add_argument(
        "--no-canonicalize",
        action="store_true",
        help="reject non-canonical quotient points instead of canonicalizing",
    )
    p_dist.add_argument("--format", choices=["text", "json-lines"], default="text")

    p_verify = sub.add_parser(
        "verify-isometry",
        help="compare the diagram distance against the brute-force grid search on random modules",
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--grid", type=int, default=8, help="grid resolution N")
    p_verify.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_verify.add_argument("--window", type=int, default=3)
    p_verify.add_argument("--format", choices=["text", "json-lines"], default="text")

    p_transfer = sub.add_parser(
        "transfer", help="lift a quotient matching to orbits, or project one back"
    )
    p_transfer.add_argument("direction", choices=["lift", "project"])
    p_transfer.add_argument("--diagram-a", required=True, help="quotient diagram file for side A")
    p_transfer.add_argument("--diagram-b", required=True, help="quotient diagram file for side B")
    p_transfer.add_argument("--matching", required=True, help="matching file")
    p_transfer.add_argument("-o", "--output", default=None, help="matching output (default: stdout)")
    p_transfer.add_argument("--window", type=int, default=3)
    p_transfer.add_argument(
        "--no-canonicalize",
        action="store_true",
        help="reject non-canonical quotient points instead of canonicalizing",
    )
    p_transfer.add_argument("--format", choices=["text", "json-lines"], default="text")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "dgm": _cmd_dgm,
        "distance": _cmd_distance,
        "verify-isometry": _cmd_verify_isometry,
        "transfer": _cmd_transfer,
    }
    try:
        return handlers[args.command](args)
    except fileio.ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
