"""Reference makespans: the max{Sum/m, p_max} bound and the true optimum.

The exact optimum comes from a depth-first branch-and-bound over integer
scaled sizes.  :func:`opt_exact_bruteforce` is a deliberately naive second
implementation (plain enumeration of all m^n assignments) kept for
cross-checking.
"""

from __future__ import annotations

import enum
import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .core import Instance, ScheduleOutcome
from .errors import MismatchedInstance, SearchBudgetExceeded

__all__ = [
    "RatioKind",
    "OptReference",
    "DEFAULT_NODE_BUDGET",
    "default_node_budget",
    "opt_lower_bound",
    "opt_exact",
    "opt_exact_bruteforce",
    "lb_reference",
    "competitive_ratio",
]

DEFAULT_NODE_BUDGET = 10**8
BUDGET_ENV = "SEMISCHED_NODE_BUDGET"


def default_node_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_NODE_BUDGET
    budget = int(raw)
    if budget <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {raw!r}")
    return budget


class RatioKind(enum.Enum):
    VS_LB_FORMULA = "lb"
    VS_EXACT = "exact"


@dataclass(frozen=True)
class OptReference:
    """Both optimum references for one instance.

    ``exact`` and ``exact_assignment`` are None when only the formula was
    requested (see :func:`lb_reference`).
    """

    instance: Instance
    lb_formula: Fraction
    exact: Fraction | None = None
    exact_assignment: tuple[int, ...] | None = None

    def denominator(self, kind: RatioKind) -> Fraction:
        if kind is RatioKind.VS_LB_FORMULA:
            return self.lb_formula
        if self.exact is None:
            raise ValueError("exact optimum was not computed for this reference")
        return self.exact


def opt_lower_bound(instance: Instance) -> Fraction:
    return max(instance.sum / instance.machines, instance.pmax)


def lb_reference(instance: Instance) -> OptReference:
    return OptReference(instance, opt_lower_bound(instance))


def _scaled(sizes) -> tuple[list[int], int]:
    scale = math.lcm(*(p.denominator for p in sizes))
    return [int(p * scale) for p in sizes], scale


def _lpt_ints(sizes: list[int], m: int) -> tuple[int, list[int]]:
    loads = [0] * m
    assign = []
    for p in sizes:
        j = loads.index(min(loads))
        loads[j] += p
        assign.append(j)
    return max(loads), assign


def _branch_and_bound(sizes: list[int], m: int, budget: int) -> tuple[int, list[int]]:
    """Minimum makespan of non-increasing integer ``sizes`` on ``m`` machines."""
    n = len(sizes)
    total = sum(sizes)
    floor = max(-(-total // m), sizes[0])
    best, best_assign = _lpt_ints(sizes, m)
    if best == floor:
        return best, best_assign

    loads = [0] * m
    current = [0] * n
    nodes = 0

    def search(i: int, cur_max: int) -> bool:
        """Returns True once the floor is reached, which ends the search."""
        nonlocal best, best_assign, nodes
        if i == n:
            best, best_assign = cur_max, current.copy()
            return best == floor
        p = sizes[i]
        tried = set()
        for j in sorted(range(m), key=lambda j: (loads[j], j)):
            load = loads[j]
            if load + p >= best:
                break  # later machines are at least as loaded
            if load in tried:
                continue
            tried.add(load)
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            loads[j] = load + p
            current[i] = j
            done = search(i + 1, max(cur_max, load + p))
            loads[j] = load
            if done:
                return True
        return False

    search(0, 0)
    return best, best_assign


def opt_exact(instance: Instance, node_budget: int | None = None) -> OptReference:
    budget = default_node_budget() if node_budget is None else node_budget
    ints, scale = _scaled(instance.sizes)
    best, assign = _branch_and_bound(ints, instance.machines, budget)
    return OptReference(
        instance,
        opt_lower_bound(instance),
        Fraction(best, scale),
        tuple(j + 1 for j in assign),
    )


def opt_exact_bruteforce(instance: Instance) -> OptReference:
    """Exact optimum by trying every one of the m^n assignments."""
    m = instance.machines
    best = None
    witness = None
    for assignment in itertools.product(range(m), repeat=instance.n):
        loads = [Fraction(0)] * m
        for p, j in zip(instance.sizes, assignment):
            loads[j] += p
        makespan = max(loads)
        if best is None or makespan < best:
            best, witness = makespan, assignment
    return OptReference(
        instance, opt_lower_bound(instance), best, tuple(j + 1 for j in witness)
    )


def competitive_ratio(
    outcome: ScheduleOutcome, ref: OptReference, kind: RatioKind
) -> Fraction:
    if outcome.instance != ref.instance:
        raise MismatchedInstance("schedule and reference come from different instances")
    return outcome.makespan / ref.denominator(kind)
