"""Command-line front end.

Subcommands: region (half-spaces and vertices), frontier (sampled Pareto
boundary export), compare (sum-power equivalence certificate), validate
(Monte Carlo rate checks), sweep (best sum rate across a noise grid).

Documents are JSON by default; CSV is available everywhere for plotting.
Floats are serialized with shortest-round-trip precision, so re-parsing any
output reproduces the in-memory doubles exactly.  Exit codes: 0 success,
1 domain error, 2 usage error, 3 verification or validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .core import ChannelConfig, PerUser, SumPower, shannon_rate, sum_capacity
from .montecarlo import SampleConfig, validate_sic_chain
from .regions import (
    DEFAULT_RESOLUTION,
    DEFAULT_TOLERANCE,
    fd_frontier,
    superposition_frontier,
    superposition_region,
    td_frontier,
    verify_equivalence,
)

__all__ = ["build_parser", "main", "entry"]


class _UsageError(Exception):
    """Bad flag combination; distinct from domain errors in the math."""


def _from_db(value: float) -> float:
    return 10.0 ** (value / 10.0)


def _power(args, name: str):
    """Flag value in linear units, honoring --db; None passes through."""
    value = getattr(args, name, None)
    if value is None or not args.db:
        return value
    return _from_db(value)


def _resolve_budget(args):
    """Exactly one budget: --p1 with --p2, or --sum-power alone."""
    p1 = _power(args, "p1")
    p2 = _power(args, "p2")
    total = _power(args, "sum_power")
    per_user = p1 is not None or p2 is not None
    if per_user and total is not None:
        raise _UsageError("give either --p1/--p2 or --sum-power, not both")
    if per_user:
        if p1 is None or p2 is None:
            raise _UsageError("--p1 and --p2 must be given together")
        return PerUser(p1, p2)
    if total is not None:
        return SumPower(total)
    raise _UsageError("a power budget is required: --p1 with --p2, or --sum-power")


def _budget_params(budget) -> dict:
    if isinstance(budget, PerUser):
        return {"p1": budget.p1, "p2": budget.p2}
    return {"sum_power": budget.p_total}


def _manifest(command: str, parameters: dict) -> dict:
    # parameters echo linear units after any --db conversion; re-running the
    # same command with these values reproduces the document byte for byte
    return {
        "tool": "macregions",
        "version": __version__,
        "command": command,
        "parameters": parameters,
    }


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def _csv_doc(header: str, rows) -> str:
    lines = [header]
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_doc(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _pairs(points) -> list:
    return [[float(a), float(b)] for a, b in np.asarray(points, dtype=float)]


def _emit(args, text: str, manifest: dict) -> None:
    """Write the document; a CSV body cannot embed its manifest, so that
    goes to stderr as one JSON line instead."""
    if args.format == "csv":
        sys.stderr.write(json.dumps(manifest) + "\n")
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_region(args) -> int:
    budget = _resolve_budget(args)
    ch = ChannelConfig(_power(args, "noise"))
    region = superposition_region(budget, ch)
    params = {**_budget_params(budget), "noise": ch.noise_power,
              "format": args.format}
    manifest = _manifest("region", params)
    if args.format == "json":
        doc = {
            "manifest": manifest,
            "halfspaces": [[h.a1, h.a2, h.b] for h in region.halfspaces],
            "vertices": _pairs(region.vertices),
        }
        text = _json_doc(doc)
    else:
        text = _csv_doc("r1,r2", region.vertices)
    _emit(args, text, manifest)
    return 0


_FRONTIERS = {"sc": superposition_frontier, "td": td_frontier, "fd": fd_frontier}


def cmd_frontier(args) -> int:
    budget = _resolve_budget(args)
    ch = ChannelConfig(_power(args, "noise"))
    frontier = _FRONTIERS[args.scheme](budget, ch, args.resolution)
    params = {"scheme": args.scheme, **_budget_params(budget),
              "noise": ch.noise_power, "resolution": args.resolution,
              "format": args.format}
    manifest = _manifest("frontier", params)
    if args.format == "json":
        doc = {"manifest": manifest, "scheme": args.scheme,
               "points": _pairs(frontier.points)}
        text = _json_doc(doc)
    else:
        text = _csv_doc("r1,r2", frontier.points)
    _emit(args, text, manifest)
    return 0


def cmd_compare(args) -> int:
    ch = ChannelConfig(_power(args, "noise"))
    report = verify_equivalence(_power(args, "sum_power"), ch,
                                resolution=args.resolution, tol=args.tol)
    params = {"sum_power": _power(args, "sum_power"), "noise": ch.noise_power,
              "resolution": args.resolution, "tol": args.tol,
              "format": args.format}
    manifest = _manifest("compare", params)
    fields = [
        ("sum_capacity", report.sum_capacity),
        ("sc_td", report.sc_td),
        ("sc_fd", report.sc_fd),
        ("td_fd", report.td_fd),
        ("tolerance", report.tolerance),
        ("verdict", report.verdict),
    ]
    if args.format == "json":
        text = _json_doc({"manifest": manifest, **dict(fields)})
    else:
        text = _csv_doc("key,value", fields)
    _emit(args, text, manifest)
    return 0 if report.verdict else 3


def cmd_validate(args) -> int:
    ch = ChannelConfig(_power(args, "noise"))
    p1 = _power(args, "p1")
    p2 = _power(args, "p2")
    cfg = SampleConfig(seed=args.seed, m=args.samples, stream=args.stream)
    report = validate_sic_chain(p1, p2, ch, cfg, tol=args.tol)
    params = {"p1": p1, "p2": p2, "noise": ch.noise_power,
              "samples": args.samples, "seed": args.seed,
              "stream": args.stream, "tol": args.tol, "format": args.format}
    manifest = _manifest("validate", params)
    if args.format == "json":
        doc = {
            "manifest": manifest,
            "checks": [
                {
                    "name": c.name,
                    "estimate": c.estimate,
                    "std_error": c.std_error,
                    "target": c.target,
                    "tolerance": c.tolerance,
                    "passed": c.passed,
                }
                for c in report.checks
            ],
            "passed": report.passed,
            "note": report.note,
        }
        text = _json_doc(doc)
    else:
        rows = [
            (c.name, c.estimate, c.std_error, c.target, c.tolerance, c.passed)
            for c in report.checks
        ]
        text = _csv_doc("name,estimate,std_error,target,tolerance,passed", rows)
    _emit(args, text, manifest)
    return 0 if report.passed else 3


def _best_sum_rate(scheme: str, budget, ch: ChannelConfig) -> float:
    """Largest achievable rate sum for the scheme under the budget.

    Superposition and frequency division both reach the sum capacity;
    time division under per-user powers peaks by giving every slot to the
    stronger user.  Under a sum-power budget all three coincide.
    """
    if isinstance(budget, SumPower) or scheme in ("sc", "fd"):
        return float(sum_capacity(budget, ch))
    return float(max(shannon_rate(budget.p1, ch), shannon_rate(budget.p2, ch)))


def cmd_sweep(args) -> int:
    if args.steps < 1:
        raise _UsageError("--steps must be at least 1")
    noise_min = _from_db(args.noise_min) if args.db else args.noise_min
    noise_max = _from_db(args.noise_max) if args.db else args.noise_max
    if noise_min > noise_max:
        raise _UsageError("--noise-min must not exceed --noise-max")
    if noise_min <= 0:
        raise ValueError("noise powers must be positive")
    budget = _resolve_budget(args)
    grid = np.geomspace(noise_min, noise_max, args.steps)
    rows = [
        (float(n), _best_sum_rate(args.scheme, budget, ChannelConfig(float(n))))
        for n in grid
    ]
    params = {"scheme": args.scheme, **_budget_params(budget),
              "noise_min": noise_min, "noise_max": noise_max,
              "steps": args.steps, "format": args.format}
    manifest = _manifest("sweep", params)
    if args.format == "json":
        text = _json_doc({"manifest": manifest, "scheme": args.scheme,
                          "points": _pairs(rows)})
    else:
        text = _csv_doc("noise,sum_rate", rows)
    _emit(args, text, manifest)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(sub, budget="both", noise=True):
    if budget in ("both", "per_user"):
        sub.add_argument("--p1", type=float, help="user-1 power")
        sub.add_argument("--p2", type=float, help="user-2 power")
    if budget in ("both", "sum"):
        sub.add_argument("--sum-power", type=float, dest="sum_power",
                         help="total power, split freely between the users")
    if noise:
        sub.add_argument("--noise", type=float, required=True,
                         help="noise power N")
    sub.add_argument("--db", action="store_true",
                     help="interpret all power flags as dB (10^(x/10))")
    sub.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macregions",
        description="Two-user Gaussian multiple-access rate regions: "
                    "construct, export, compare, and validate.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    region = subs.add_parser(
        "region", help="half-spaces and vertices of the achievable region")
    _add_common(region)
    region.set_defaults(func=cmd_region)

    frontier = subs.add_parser(
        "frontier", help="export a sampled Pareto frontier")
    frontier.add_argument("--scheme", choices=("sc", "td", "fd"), required=True,
                          help="superposition, time division, or frequency division")
    _add_common(frontier)
    frontier.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    frontier.add_argument("--out", help="write to this file instead of stdout")
    frontier.set_defaults(func=cmd_frontier)

    compare = subs.add_parser(
        "compare", help="certify the three schemes agree under a sum power")
    compare.add_argument("--sum-power", type=float, dest="sum_power",
                         required=True)
    compare.add_argument("--noise", type=float, required=True)
    compare.add_argument("--db", action="store_true")
    compare.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    compare.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    compare.add_argument("--format", choices=("json", "csv"), default="json")
    compare.set_defaults(func=cmd_compare)

    validate = subs.add_parser(
        "validate", help="Monte Carlo check of the cancellation-chain rates")
    validate.add_argument("--p1", type=float, required=True)
    validate.add_argument("--p2", type=float, required=True)
    validate.add_argument("--noise", type=float, required=True)
    validate.add_argument("--db", action="store_true")
    validate.add_argument("--samples", type=int, default=1_000_000)
    validate.add_argument("--seed", type=int, default=0)
    validate.add_argument("--stream", type=int, default=0)
    validate.add_argument("--tol", type=float, default=0.01)
    validate.add_argument("--format", choices=("json", "csv"), default="json")
    validate.set_defaults(func=cmd_validate)

    sweep = subs.add_parser(
        "sweep", help="best achievable sum rate across a noise grid")
    sweep.add_argument("--scheme", choices=("sc", "td", "fd"), default="sc")
    _add_common(sweep, noise=False)
    sweep.add_argument("--noise-min", type=float, required=True,
                       dest="noise_min")
    sweep.add_argument("--noise-max", type=float, required=True,
                       dest="noise_max")
    sweep.add_argument("--steps", type=int, default=33,
                       help="points on the log-spaced noise grid")
    sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message; normalize to a return code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
