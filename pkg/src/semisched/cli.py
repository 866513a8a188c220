"""Command-line entry point.

Reports go to stdout as JSON; diagnostics go to stderr.

Exit codes:
    0  success
    2  invalid input (parse error, violated instance invariant, bad domain, k out of range)
    3  policy / machine-count mismatch
    4  exact-optimum search budget exceeded
    5  SD reached a branch its rules leave undefined
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .adversary.audit import audit_upper_bound
from .adversary.enumerate import EnumerationDomain, PatternFilter
from .adversary.families import FAMILIES
from .adversary.trees import solve
from .algorithms import PolicyKind, run_online
from .core import to_rational
from .errors import MachineCountMismatch, ScheduleError, SearchBudgetExceeded, UnspecifiedBranch
from .oracle import RatioKind, lb_reference, opt_exact
from .reports import audit_report, dumps, load_instance_text, lowerbound_report, run_report

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4
EXIT_UNSPECIFIED = 5

POLICY_CHOICES = [p.value for p in PolicyKind]


def _rational(text: str) -> Fraction:
    try:
        return to_rational(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semisched",
        description="Semi-online makespan scheduling with known Decr and Sum.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a policy on an instance file")
    run.add_argument("--algo", required=True, choices=POLICY_CHOICES)
    run.add_argument("--input", required=True, type=Path, help="instance JSON file")
    run.add_argument("--ratio", choices=["lb", "exact", "both"], default="lb")
    run.add_argument("--trace", action="store_true", help="include the step-by-step trace")

    lb = sub.add_parser("lowerbound", help="solve an adversary family exactly")
    lb.add_argument("--family", required=True, choices=sorted(FAMILIES))
    lb.add_argument("--k", type=_rational, help="family parameter (t1, t2 only)")
    lb.add_argument("--ratio", choices=["lb", "exact"], default="lb")

    audit = sub.add_parser("audit", help="worst-case ratio of a policy over an enumerated domain")
    audit.add_argument("--algo", required=True, choices=POLICY_CHOICES)
    audit.add_argument("--machines", type=int, required=True)
    audit.add_argument("--n-min", type=int, required=True)
    audit.add_argument("--n-max", type=int, required=True)
    audit.add_argument("--sum-max", type=int, help="largest total size (default: --n-max)")
    audit.add_argument("--sum-min", type=int, default=1)
    audit.add_argument("--size-max", type=int, help="largest individual size")
    audit.add_argument("--pattern", choices=[p.value for p in PatternFilter], default="decr")
    audit.add_argument("--last-min", type=int, help="only instances with p_n >= this")
    audit.add_argument("--last-min-share", type=_rational,
                       help="only instances with p_n >= share * Sum")
    audit.add_argument("--last-max-gap", type=int,
                       help="only instances with p_n <= p_1 - gap")
    audit.add_argument("--ratio", choices=["lb", "exact"], default="lb")
    audit.add_argument("--claimed", type=_rational, required=True)
    audit.add_argument("--parallel", type=int, default=1, help="worker processes")
    return parser


def _cmd_run(args) -> dict:
    try:
        text = args.input.read_text()
    except OSError as exc:
        raise ScheduleError(f"cannot read {args.input}: {exc}") from exc
    instance = load_instance_text(text)
    policy = PolicyKind(args.algo)
    outcome = run_online(instance, policy)
    kinds = {
        "lb": [RatioKind.VS_LB_FORMULA],
        "exact": [RatioKind.VS_EXACT],
        "both": [RatioKind.VS_LB_FORMULA, RatioKind.VS_EXACT],
    }[args.ratio]
    ref = opt_exact(instance) if RatioKind.VS_EXACT in kinds else lb_reference(instance)
    return run_report(policy, outcome, ref, kinds, trace=args.trace)


def _cmd_lowerbound(args) -> dict:
    build = FAMILIES[args.family]
    if args.family == "t6":
        if args.k is not None:
            raise ScheduleError("family t6 takes no --k")
        tree, k = build(), None
    else:
        if args.k is None:
            raise ScheduleError(f"family {args.family} requires --k")
        tree, k = build(args.k), args.k
    kind = RatioKind(args.ratio)
    return lowerbound_report(args.family, k, tree, solve(tree, kind), kind)


def _cmd_audit(args) -> dict:
    if args.parallel < 1:
        raise ScheduleError("--parallel must be at least 1")
    domain = EnumerationDomain(
        machines=args.machines,
        n_min=args.n_min,
        n_max=args.n_max,
        sum_max=args.n_max if args.sum_max is None else args.sum_max,
        pattern=PatternFilter(args.pattern),
        sum_min=args.sum_min,
        size_max=args.size_max,
        last_min=args.last_min,
        last_min_share=args.last_min_share,
        last_max_gap=args.last_max_gap,
    )
    domain.validate()
    policy = PolicyKind(args.algo)
    policy.check_machines(args.machines)
    report = audit_upper_bound(
        policy, domain, RatioKind(args.ratio), args.claimed, parallel=args.parallel
    )
    return audit_report(report)


COMMANDS = {"run": _cmd_run, "lowerbound": _cmd_lowerbound, "audit": _cmd_audit}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = COMMANDS[args.command](args)
    except MachineCountMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except UnspecifiedBranch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSPECIFIED
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:  # ScheduleError and friends
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(dumps(doc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
