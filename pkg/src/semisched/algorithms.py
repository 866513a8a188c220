"""Online policies for identical machines with known Decr and Sum.

Every policy sees one job at a time together with the loads so far, the
declared total ``Sum`` and the machine count; nothing about the remaining
jobs.  Machine indices are 1-based throughout, as in the algorithm
descriptions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .core import Instance, ScheduleOutcome, apply_assignment, fraction_str
from .errors import MachineCountMismatch, UnspecifiedBranch

__all__ = [
    "PolicyKind",
    "PolicyState",
    "step_2ds",
    "step_i2ds",
    "step_3ds",
    "step_i3ds",
    "step_sd",
    "step_ls",
    "assign_online",
    "run_online",
    "lpt_offline",
    "THRESHOLDS",
    "threshold_violations",
]


class PolicyKind(enum.Enum):
    LS = "ls"
    LPT = "lpt"
    SD = "sd"
    TWO_DS = "2ds"
    I2DS = "i2ds"
    THREE_DS = "3ds"
    I3DS = "i3ds"

    @property
    def required_machines(self) -> int | None:
        """Machine count the policy is defined for, or None for any m >= 2."""
        return _REQUIRED_MACHINES.get(self)

    def check_machines(self, machines: int) -> None:
        need = self.required_machines
        if need is not None and machines != need:
            raise MachineCountMismatch(
                f"policy {self.value} requires m={need}, instance has m={machines}"
            )


_REQUIRED_MACHINES = {
    PolicyKind.SD: 2,
    PolicyKind.TWO_DS: 2,
    PolicyKind.I2DS: 2,
    PolicyKind.THREE_DS: 3,
    PolicyKind.I3DS: 3,
}


@dataclass
class PolicyState:
    """Mutable view a policy has while the sequence is revealed.

    ``sd_remaining`` and ``sd_rule`` belong to SD only: once a stopping
    criterion fires they name the machine that receives every later job and
    the rule that fixed it.
    """

    loads: list[Fraction]
    total: Fraction
    jobs_seen: int = 0
    sd_remaining: int | None = None
    sd_rule: str | None = None

    @classmethod
    def start(cls, machines: int, total) -> "PolicyState":
        return cls([Fraction(0)] * machines, Fraction(total))

    def assign(self, machine: int, p: Fraction) -> None:
        self.loads[machine - 1] += p
        self.jobs_seen += 1


def step_2ds(state: PolicyState, p: Fraction) -> int:
    return 1 if state.loads[0] + p <= state.total / 2 else 2


def step_i2ds(state: PolicyState, p: Fraction) -> int:
    return 1 if state.loads[0] + p <= state.total * Fraction(7, 12) else 2


def step_3ds(state: PolicyState, p: Fraction) -> int:
    l1, l2, l3 = state.loads
    if l1 + p <= state.total / 3:
        return 1
    # ties between M2 and M3 go to M2
    return 2 if l2 <= l3 else 3


def step_i3ds(state: PolicyState, p: Fraction) -> int:
    # The M2 test uses M2's own load; this is what keeps l2 <= 10/27 Sum.
    l1, l2, _ = state.loads
    if l1 + p <= state.total / 3:
        return 1
    if l2 + p <= state.total * Fraction(10, 27):
        return 2
    return 3


def step_sd(state: PolicyState, p: Fraction, job_index: int) -> int:
    """SD for two machines; records the remaining-jobs machine on ``state``.

    J2 rule, with x = l1 + p2:
      4/9 Sum <= x <= 5/9 Sum            -> M1, all later jobs to M2
      7/18 Sum <= x < 4/9 Sum or x > 5/9 -> M2, later jobs by the criteria
      x < 7/18 Sum                       -> UnspecifiedBranch

    From J3 on (until a criterion fires), criterion 1 places the job on a
    machine it fits under 5/9 Sum, preferring the fuller one when both fit;
    criterion 2 (fits nowhere) uses the less loaded machine.  Equal loads
    always resolve to M2.  Whichever fires, the other machine takes all
    remaining jobs.
    """
    if state.sd_remaining is not None:
        return state.sd_remaining
    total = state.total
    l1, l2 = state.loads
    if job_index == 1:
        return 1
    if job_index == 2:
        x = l1 + p
        if total * Fraction(4, 9) <= x <= total * Fraction(5, 9):
            state.sd_remaining, state.sd_rule = 2, "J2 on M1"
            return 1
        if total * Fraction(7, 18) <= x < total * Fraction(4, 9) or x > total * Fraction(5, 9):
            return 2
        raise UnspecifiedBranch(
            f"SD leaves J2 undefined when l1+p2={fraction_str(x)} < 7/18 Sum "
            f"(Sum={fraction_str(total)})"
        )

    cap = total * Fraction(5, 9)
    fits = [j for j in (1, 2) if state.loads[j - 1] + p <= cap]
    if fits:
        rule = "criterion 1"
        if len(fits) == 1:
            chosen = fits[0]
        else:
            chosen = 1 if l1 > l2 else 2
    else:
        rule = "criterion 2"
        chosen = 1 if l1 < l2 else 2
    state.sd_remaining, state.sd_rule = 3 - chosen, rule
    return chosen


def step_ls(state: PolicyState, p: Fraction) -> int:
    loads = state.loads
    return loads.index(min(loads)) + 1


_STEPS: dict[PolicyKind, Callable[[PolicyState, Fraction], int]] = {
    PolicyKind.LS: step_ls,
    PolicyKind.TWO_DS: step_2ds,
    PolicyKind.I2DS: step_i2ds,
    PolicyKind.THREE_DS: step_3ds,
    PolicyKind.I3DS: step_i3ds,
}


def assign_online(
    policy: PolicyKind, machines: int, sizes: Sequence[Fraction], total
) -> list[int]:
    """Feed ``sizes`` one by one to ``policy`` with declared total ``total``.

    ``total`` need not equal ``sum(sizes)``; that is what makes prefix runs
    possible.  LPT is offline and sorts first; on a non-increasing sequence it
    coincides with LS.
    """
    policy.check_machines(machines)
    if policy is PolicyKind.LPT:
        return _lpt_assignment(machines, sizes)
    state = PolicyState.start(machines, total)
    out = []
    for i, p in enumerate(sizes, start=1):
        if policy is PolicyKind.SD:
            j = step_sd(state, p, i)
        else:
            j = _STEPS[policy](state, p)
        state.assign(j, p)
        out.append(j)
    return out


def run_online(instance: Instance, policy: PolicyKind) -> ScheduleOutcome:
    assignment = assign_online(policy, instance.machines, instance.sizes, instance.sum)
    return apply_assignment(instance, assignment)


def _lpt_assignment(machines: int, sizes: Sequence[Fraction]) -> list[int]:
    order = sorted(range(len(sizes)), key=lambda i: -sizes[i])  # stable
    loads = [Fraction(0)] * machines
    out = [0] * len(sizes)
    for i in order:
        j = loads.index(min(loads))
        loads[j] += sizes[i]
        out[i] = j + 1
    return out


def lpt_offline(instance: Instance) -> ScheduleOutcome:
    return apply_assignment(instance, _lpt_assignment(instance.machines, instance.sizes))


# Load caps each threshold policy maintains at every step: (machine, fraction of Sum).
THRESHOLDS: dict[PolicyKind, tuple[tuple[int, Fraction], ...]] = {
    PolicyKind.TWO_DS: ((1, Fraction(1, 2)),),
    PolicyKind.I2DS: ((1, Fraction(7, 12)),),
    PolicyKind.THREE_DS: ((1, Fraction(1, 3)),),
    PolicyKind.I3DS: ((1, Fraction(1, 3)), (2, Fraction(10, 27))),
}


@dataclass(frozen=True)
class ThresholdViolation:
    job: int
    machine: int
    load: Fraction
    cap: Fraction


def threshold_violations(
    outcome: ScheduleOutcome, policy: PolicyKind
) -> list[ThresholdViolation]:
    caps = THRESHOLDS.get(policy, ())
    total = outcome.instance.sum
    found = []
    for step in outcome.trace:
        for machine, frac in caps:
            if step.loads_after[machine - 1] > frac * total:
                found.append(
                    ThresholdViolation(step.job, machine, step.loads_after[machine - 1], frac * total)
                )
    return found
