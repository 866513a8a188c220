"""Empirical worst-case ratios of a policy over an enumerated domain.

Per-instance evaluation can fan out to worker processes; the reduction runs
in enumeration order and breaks equal ratios by the lexicographically
smallest size sequence, so a report never depends on the worker count.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from ..algorithms import PolicyKind, run_online
from ..core import Instance, PatternClass, ScheduleOutcome, build_instance
from ..errors import SearchBudgetExceeded, UnspecifiedBranch
from ..oracle import RatioKind, default_node_budget, opt_exact, opt_lower_bound
from .enumerate import EnumerationDomain, enumerate_decreasing_instances

__all__ = [
    "Verdict",
    "KindResult",
    "AuditReport",
    "audit_upper_bound",
    "audit_instances",
    "LoadClaimReport",
    "audit_load_claim",
]


class Verdict(enum.Enum):
    CONFIRMED = "ConfirmedOnDomain"
    COUNTEREXAMPLE = "CounterexampleFound"


@dataclass
class PatternResult:
    count: int = 0
    worst: Fraction | None = None
    witness: Instance | None = None


@dataclass
class KindResult:
    kind: RatioKind
    worst: Fraction | None = None
    witness: Instance | None = None
    witness_outcome: ScheduleOutcome | None = None
    verdict: Verdict | None = None
    exceeding: int = 0  # instances whose ratio is above the claimed bound
    by_pattern: dict[PatternClass, PatternResult] = field(default_factory=dict)


@dataclass
class AuditReport:
    policy: PolicyKind
    domain: EnumerationDomain | None
    kind: RatioKind
    claimed: Fraction
    examined: int
    skipped: dict[str, int]
    results: dict[RatioKind, KindResult]

    @property
    def primary(self) -> KindResult:
        return self.results[self.kind]

    @property
    def worst(self) -> Fraction | None:
        return self.primary.worst

    @property
    def witness(self) -> Instance | None:
        return self.primary.witness

    @property
    def verdict(self) -> Verdict | None:
        return self.primary.verdict


def _evaluate(job) -> tuple:
    """Worker: ratios of one instance, or the reason it was skipped."""
    policy_value, machines, sizes, kind_values, budget = job
    instance = build_instance(machines, sizes)
    policy = PolicyKind(policy_value)
    try:
        outcome = run_online(instance, policy)
    except UnspecifiedBranch:
        return ("skip", "unspecified_branch")
    ratios = {}
    for value in kind_values:
        kind = RatioKind(value)
        if kind is RatioKind.VS_LB_FORMULA:
            ratios[value] = outcome.makespan / opt_lower_bound(instance)
        else:
            try:
                ratios[value] = outcome.makespan / opt_exact(instance, budget).exact
            except SearchBudgetExceeded:
                return ("skip", "search_budget_exceeded")
    return ("ok", ratios)


def _better_witness(ratio, instance, worst, witness) -> bool:
    if worst is None or ratio > worst:
        return True
    return ratio == worst and instance.sizes < witness.sizes


def audit_instances(
    policy: PolicyKind,
    instances: Iterable[Instance],
    kind: RatioKind,
    claimed,
    *,
    kinds: Sequence[RatioKind] | None = None,
    parallel: int = 1,
    node_budget: int | None = None,
    domain: EnumerationDomain | None = None,
) -> AuditReport:
    """Audit ``policy`` over an explicit collection of instances.

    ``kinds`` lists the denominators to compute (default: both); ``kind``
    must be among them and drives the headline verdict.
    """
    claimed = Fraction(claimed)
    kinds = tuple(kinds) if kinds is not None else tuple(RatioKind)
    if kind not in kinds:
        kinds = kinds + (kind,)
    budget = default_node_budget() if node_budget is None else node_budget
    instances = list(instances)
    if not instances:
        raise ValueError("audit domain contains no instances")
    for inst in instances:
        policy.check_machines(inst.machines)

    jobs = [(policy.value, inst.machines, inst.sizes, tuple(k.value for k in kinds), budget)
            for inst in instances]
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            evaluated = list(pool.map(_evaluate, jobs, chunksize=max(1, len(jobs) // (8 * parallel))))
    else:
        evaluated = [_evaluate(job) for job in jobs]

    results = {k: KindResult(k) for k in kinds}
    skipped: dict[str, int] = {}
    examined = 0
    for inst, (status, payload) in zip(instances, evaluated):
        if status == "skip":
            skipped[payload] = skipped.get(payload, 0) + 1
            continue
        examined += 1
        for k in kinds:
            ratio = payload[k.value]
            res = results[k]
            if ratio > claimed:
                res.exceeding += 1
            if _better_witness(ratio, inst, res.worst, res.witness):
                res.worst, res.witness = ratio, inst
            pat = res.by_pattern.setdefault(inst.pattern, PatternResult())
            pat.count += 1
            if _better_witness(ratio, inst, pat.worst, pat.witness):
                pat.worst, pat.witness = ratio, inst

    for res in results.values():
        if res.witness is not None:
            res.witness_outcome = run_online(res.witness, policy)
            res.verdict = Verdict.CONFIRMED if res.worst <= claimed else Verdict.COUNTEREXAMPLE
    return AuditReport(policy, domain, kind, claimed, examined, dict(sorted(skipped.items())), results)


def audit_upper_bound(
    policy: PolicyKind,
    domain: EnumerationDomain,
    kind: RatioKind,
    claimed,
    *,
    kinds: Sequence[RatioKind] | None = None,
    parallel: int = 1,
    node_budget: int | None = None,
) -> AuditReport:
    """Run ``policy`` on every instance of ``domain`` and report the worst
    ratio against ``claimed``."""
    return audit_instances(
        policy,
        enumerate_decreasing_instances(domain),
        kind,
        claimed,
        kinds=kinds,
        parallel=parallel,
        node_budget=node_budget,
        domain=domain,
    )


@dataclass
class LoadClaimReport:
    policy: PolicyKind
    machine: int
    share: Fraction
    examined: int
    violations: int
    max_share: Fraction | None  # largest final load / Sum seen on ``machine``
    witness: Instance | None  # instance attaining max_share


def audit_load_claim(
    policy: PolicyKind, domain: EnumerationDomain, machine: int, share
) -> LoadClaimReport:
    """Test the hypothesis ``final load of machine <= share * Sum`` on a domain."""
    share = Fraction(share)
    examined = violations = 0
    max_share = witness = None
    for inst in enumerate_decreasing_instances(domain):
        try:
            outcome = run_online(inst, policy)
        except UnspecifiedBranch:
            continue
        examined += 1
        seen = outcome.loads[machine - 1] / inst.sum
        if seen > share:
            violations += 1
        if _better_witness(seen, inst, max_share, witness):
            max_share, witness = seen, inst
    return LoadClaimReport(policy, machine, share, examined, violations, max_share, witness)
