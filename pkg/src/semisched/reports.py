"""JSON instance files and report documents.

Every number that is a size, load, ratio or bound is written as an exact
fraction string (``"21/20"``).  ``*_decimal`` fields are a convenience for
people and are never read back.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .adversary.audit import AuditReport, KindResult
from .adversary.trees import AdversaryTree, Solution, leaf_value, tree_summary
from .algorithms import PolicyKind
from .core import Instance, ScheduleOutcome, apply_assignment, build_instance, fraction_str, to_rational
from .errors import ScheduleError
from .oracle import OptReference, RatioKind, lb_reference

REPORT_VERSION = 1

__all__ = [
    "REPORT_VERSION",
    "InstanceFileError",
    "parse_instance",
    "load_instance_text",
    "dump_instance",
    "outcome_dict",
    "run_report",
    "audit_report",
    "lowerbound_report",
    "dumps",
]


class InstanceFileError(ScheduleError):
    pass


def parse_instance(doc: Any) -> Instance:
    """Validate an instance document (already JSON-decoded)."""
    if not isinstance(doc, dict):
        raise InstanceFileError("instance file must be a JSON object")
    unknown = set(doc) - {"machines", "sizes", "declared_sum"}
    if unknown:
        raise InstanceFileError(f"unknown instance fields: {sorted(unknown)}")
    machines = doc.get("machines")
    if isinstance(machines, bool) or not isinstance(machines, int):
        raise InstanceFileError("'machines' must be an integer")
    sizes = doc.get("sizes")
    if not isinstance(sizes, list):
        raise InstanceFileError("'sizes' must be a list of numbers or fraction strings")
    try:
        values = [to_rational(p) for p in sizes]
    except (TypeError, ValueError) as exc:
        raise InstanceFileError(f"bad size: {exc}") from exc
    instance = build_instance(machines, values)
    if "declared_sum" in doc:
        try:
            declared = to_rational(doc["declared_sum"])
        except (TypeError, ValueError) as exc:
            raise InstanceFileError(f"bad declared_sum: {exc}") from exc
        if declared != instance.sum:
            raise InstanceFileError(
                f"declared_sum {fraction_str(declared)} does not equal the sum of sizes "
                f"{fraction_str(instance.sum)}"
            )
    return instance


def load_instance_text(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFileError(f"instance file is not valid JSON: {exc}") from exc
    return parse_instance(doc)


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def dump_instance(instance: Instance) -> str:
    """Canonical form of an instance file; parsing it back is lossless."""
    return dumps({
        "machines": instance.machines,
        "sizes": [fraction_str(p) for p in instance.sizes],
        "declared_sum": fraction_str(instance.sum),
    })


def _fracs(values) -> list[str]:
    return [fraction_str(v) for v in values]


def _instance_dict(instance: Instance) -> dict:
    return {
        "machines": instance.machines,
        "sizes": _fracs(instance.sizes),
        "sum": fraction_str(instance.sum),
        "pmax": fraction_str(instance.pmax),
        "pattern": instance.pattern.value,
    }


def _trace(outcome: ScheduleOutcome) -> list[dict]:
    return [
        {"job": s.job, "size": fraction_str(s.size), "machine": s.machine,
         "loads_after": _fracs(s.loads_after)}
        for s in outcome.trace
    ]


def outcome_dict(outcome: ScheduleOutcome, trace: bool = True) -> dict:
    doc = {
        "instance": _instance_dict(outcome.instance),
        "assignment": list(outcome.assignment),
        "loads": _fracs(outcome.loads),
        "makespan": fraction_str(outcome.makespan),
    }
    if trace:
        doc["trace"] = _trace(outcome)
    return doc


def run_report(
    policy: PolicyKind,
    outcome: ScheduleOutcome,
    ref: OptReference,
    kinds: list[RatioKind],
    trace: bool = False,
) -> dict:
    opt: dict[str, Any] = {"lb_formula": fraction_str(ref.lb_formula)}
    if ref.exact is not None:
        opt["exact"] = fraction_str(ref.exact)
        opt["exact_assignment"] = list(ref.exact_assignment)
    ratios = {k.value: outcome.makespan / ref.denominator(k) for k in kinds}
    doc = {
        "report_version": REPORT_VERSION,
        "command": "run",
        "policy": policy.value,
        **outcome_dict(outcome, trace=False),
        "pattern": outcome.instance.pattern.value,
        "opt": opt,
        "ratios": {k: fraction_str(v) for k, v in ratios.items()},
        "ratios_decimal": {k: round(float(v), 6) for k, v in ratios.items()},
    }
    if trace:
        doc["trace"] = _trace(outcome)
    return doc


def _kind_dict(res: KindResult) -> dict:
    return {
        "worst": None if res.worst is None else fraction_str(res.worst),
        "worst_decimal": None if res.worst is None else round(float(res.worst), 6),
        "verdict": None if res.verdict is None else res.verdict.value,
        "exceeding_claim": res.exceeding,
        "witness_sizes": None if res.witness is None else _fracs(res.witness.sizes),
        "by_pattern": {
            pattern.value: {
                "count": pr.count,
                "worst": fraction_str(pr.worst),
                "witness_sizes": _fracs(pr.witness.sizes),
            }
            for pattern, pr in sorted(res.by_pattern.items(), key=lambda kv: kv[0].value)
        },
    }


def audit_report(report: AuditReport) -> dict:
    primary = report.primary
    return {
        "report_version": REPORT_VERSION,
        "command": "audit",
        "policy": report.policy.value,
        "domain": None if report.domain is None else report.domain.describe(),
        "ratio": report.kind.value,
        "claimed": fraction_str(report.claimed),
        "examined": report.examined,
        "skipped": report.skipped,
        "worst": None if primary.worst is None else fraction_str(primary.worst),
        "verdict": None if primary.verdict is None else primary.verdict.value,
        "witness": None if primary.witness_outcome is None else outcome_dict(primary.witness_outcome),
        "by_denominator": {k.value: _kind_dict(res) for k, res in report.results.items()},
    }


def lowerbound_report(
    family: str, k: Fraction | None, tree: AdversaryTree, solution: Solution, kind: RatioKind
) -> dict:
    leaf = solution.leaf
    outcome = apply_assignment(leaf.instance, leaf.assignment)
    ref = lb_reference(leaf.instance)
    strategy = []
    for actor, move in solution.path:
        if actor == "adversary":
            strategy.append({"actor": actor, "size": fraction_str(move)})
        else:
            strategy.append({"actor": actor, "machine": move})
    return {
        "report_version": REPORT_VERSION,
        "command": "lowerbound",
        "family": family,
        "k": None if k is None else fraction_str(k),
        "machines": tree.machines,
        "sum": fraction_str(tree.total),
        "ratio": kind.value,
        "tree": tree_summary(tree),
        "value": fraction_str(solution.value),
        "value_decimal": round(float(solution.value), 6),
        "strategy": strategy,
        "leaf": {
            **outcome_dict(outcome, trace=False),
            "lb_formula": fraction_str(ref.lb_formula),
            "ratio": fraction_str(leaf_value(leaf, kind)),
        },
    }
