"""Command-line front end.

Exit codes: 0 success, 1 property failure, 2 input error, 3 domain error.
"""

import argparse
import json
import sys

import numpy as np

from . import correlations, quantum, rra, verify
from .errors import NonFiniteStrengthError, ZeroStrengthError
from .quantum import Side


def _fail(code: int, message: str) -> int:
    print(f"superdiscord: {message}", file=sys.stderr)
    return code


def cmd_analyze(args) -> int:
    try:
        rho = quantum.load_density(args.state)
    except (OSError, ValueError) as exc:
        return _fail(2, f"cannot read state file {args.state!r}: {exc}")
    try:
        report = correlations.compute_report(rho, args.x, Side(args.side))
    except (ZeroStrengthError, NonFiniteStrengthError) as exc:
        return _fail(3, str(exc))
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(correlations.report_to_json(report), fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        return _fail(2, f"cannot write report to {args.out!r}: {exc}")
    return 0


def cmd_rra_sweep(args) -> int:
    if not (0.0 <= args.c_min <= args.c_max <= 1.0):
        return _fail(2, f"need 0 <= c-min <= c-max <= 1, got [{args.c_min}, {args.c_max}]")
    if not (0.0 < args.x_min <= args.x_max):
        return _fail(2, f"need 0 < x-min <= x-max, got [{args.x_min}, {args.x_max}]")
    if args.c_steps < 2 or args.x_steps < 2:
        return _fail(2, "step counts must be >= 2")
    records = rra.sweep(
        np.linspace(args.c_min, args.c_max, args.c_steps),
        np.linspace(args.x_min, args.x_max, args.x_steps),
    )
    try:
        rra.write_sweep_csv(records, args.out)
    except OSError as exc:
        return _fail(2, f"cannot write CSV to {args.out!r}: {exc}")
    return 0


def cmd_verify(args) -> int:
    if args.trials < 1:
        return _fail(2, "trials must be >= 1")
    results = verify.run_suites(args.seed, args.trials, corrupt=args.corrupt_tolerance)
    name_w = max(len(r.name) for r in results)
    print(f"{'check':<{name_w}}  {'n':>6}  {'worst':>10}  {'limit':>10}  result")
    for r in results:
        status = "pass" if r.passed else "FAIL"
        print(f"{r.name:<{name_w}}  {r.count:>6}  {r.worst:>10.3e}  {r.limit:>10.3e}  {status}")
    failures = [r for r in results if not r.passed]
    if failures:
        for r in failures:
            print(f"counterexample [{r.name}] {r.counterexample}", file=sys.stderr)
        return 1
    print(f"all {len(results)} checks passed (seed={args.seed}, trials={args.trials})")
    return 0


def cmd_random(args) -> int:
    rho = quantum.random_density(args.seed)
    try:
        quantum.save_density(rho, args.out)
    except OSError as exc:
        return _fail(2, f"cannot write state to {args.out!r}: {exc}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superdiscord",
        description="Mutual information, classical correlation, discord and "
        "weak-measurement super discord for two-qubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="correlation report for a state file")
    p.add_argument("--state", required=True, help="input state JSON")
    p.add_argument("--x", type=float, default=1.0, help="measurement strength (default 1.0)")
    p.add_argument("--side", choices=["A", "B"], default="B", help="measured qubit (default B)")
    p.add_argument("--out", required=True, help="output report JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("rra-sweep", help="super-discord surface of the optimal RRA family")
    p.add_argument("--c-min", type=float, default=0.0)
    p.add_argument("--c-max", type=float, default=1.0)
    p.add_argument("--c-steps", type=int, default=51)
    p.add_argument("--x-min", type=float, default=0.05)
    p.add_argument("--x-max", type=float, default=2.0)
    p.add_argument("--x-steps", type=int, default=40)
    p.add_argument("--out", required=True, help="output CSV")
    p.set_defaults(func=cmd_rra_sweep)

    p = sub.add_parser("verify", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--corrupt-tolerance", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="write a seeded Ginibre-random two-qubit state")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output state JSON")
    p.set_defaults(func=cmd_random)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
