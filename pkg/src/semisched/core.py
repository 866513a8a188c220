"""Exact data model: instances, pattern classes, loads and schedule outcomes.

All quantities are :class:`fractions.Fraction`.  Floats never enter the core;
a float given as input is read through its decimal ``repr`` so ``2.5`` means
exactly 5/2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import (
    EmptyInstance,
    LengthMismatch,
    MachineCountTooSmall,
    MachineIndexOutOfRange,
    NonPositiveSize,
    NotNonIncreasing,
)

__all__ = [
    "Fraction",
    "PatternClass",
    "Instance",
    "TraceStep",
    "ScheduleOutcome",
    "to_rational",
    "fraction_str",
    "validate_sizes",
    "classify_pattern",
    "build_instance",
    "apply_assignment",
]


def to_rational(value) -> Fraction:
    """Convert an int, Fraction, ``"a/b"`` / decimal string or float to a Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not sizes")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot interpret {value!r} as a rational")


def fraction_str(value: Fraction) -> str:
    """Canonical text form: ``"7"`` for integers, ``"21/20"`` otherwise."""
    return str(Fraction(value))


class PatternClass(enum.Enum):
    I1 = "I1"  # all sizes equal
    I2 = "I2"  # strictly decreasing
    MIXED_DECR = "MixedDecr"


def validate_sizes(sizes: Sequence[Fraction]) -> None:
    if len(sizes) == 0:
        raise EmptyInstance("instance must contain at least one job")
    for i, p in enumerate(sizes, start=1):
        if p <= 0:
            raise NonPositiveSize(f"job {i} has non-positive size {fraction_str(p)}")
    for i in range(1, len(sizes)):
        if sizes[i] > sizes[i - 1]:
            raise NotNonIncreasing(
                f"sizes must be non-increasing: p_{i + 1}={fraction_str(sizes[i])} "
                f"> p_{i}={fraction_str(sizes[i - 1])}"
            )


def classify_pattern(sizes: Iterable) -> PatternClass:
    sizes = [to_rational(p) for p in sizes]
    validate_sizes(sizes)
    if all(p == sizes[0] for p in sizes):
        return PatternClass.I1
    if all(a > b for a, b in zip(sizes, sizes[1:])):
        return PatternClass.I2
    return PatternClass.MIXED_DECR


@dataclass(frozen=True)
class Instance:
    """A validated job sequence for ``machines`` identical machines.

    Build through :func:`build_instance`; the constructor trusts its inputs.
    """

    machines: int
    sizes: tuple[Fraction, ...]
    sum: Fraction
    pmax: Fraction
    pattern: PatternClass

    @property
    def n(self) -> int:
        return len(self.sizes)

    def key(self) -> tuple:
        """Total order used to break ties deterministically between instances."""
        return (self.machines, self.n, self.sizes)


def build_instance(machines: int, sizes: Iterable) -> Instance:
    if machines < 2:
        raise MachineCountTooSmall(f"need at least 2 machines, got {machines}")
    sizes = tuple(to_rational(p) for p in sizes)
    pattern = classify_pattern(sizes)
    return Instance(machines, sizes, sum(sizes, Fraction(0)), sizes[0], pattern)


@dataclass(frozen=True)
class TraceStep:
    job: int  # 1-based
    size: Fraction
    machine: int  # 1-based
    loads_after: tuple[Fraction, ...]


@dataclass(frozen=True)
class ScheduleOutcome:
    instance: Instance
    assignment: tuple[int, ...]
    loads: tuple[Fraction, ...]
    makespan: Fraction
    trace: tuple[TraceStep, ...]


def apply_assignment(instance: Instance, assignment: Sequence[int]) -> ScheduleOutcome:
    """Replay a 1-based machine assignment and account the loads."""
    if len(assignment) != instance.n:
        raise LengthMismatch(
            f"assignment has {len(assignment)} entries for {instance.n} jobs"
        )
    loads = [Fraction(0)] * instance.machines
    trace = []
    for i, (p, j) in enumerate(zip(instance.sizes, assignment), start=1):
        if not 1 <= j <= instance.machines:
            raise MachineIndexOutOfRange(
                f"job {i} assigned to machine {j}, valid range is 1..{instance.machines}"
            )
        loads[j - 1] += p
        trace.append(TraceStep(i, p, j, tuple(loads)))
    loads = tuple(loads)
    return ScheduleOutcome(instance, tuple(assignment), loads, max(loads), tuple(trace))
