"""Generators for I1 sequences and exhaustive integer instance domains."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from ..core import Instance, build_instance, fraction_str, to_rational

__all__ = ["PatternFilter", "EnumerationDomain", "gen_i1", "partitions", "enumerate_decreasing_instances"]


def gen_i1(n: int, x) -> list[Fraction]:
    x = to_rational(x)
    if n < 1 or x <= 0:
        raise ValueError("gen_i1 needs n >= 1 and x > 0")
    return [x] * n


class PatternFilter(enum.Enum):
    I1 = "i1"
    I2 = "i2"
    DECR = "decr"  # any non-increasing sequence


@dataclass(frozen=True)
class EnumerationDomain:
    """A finite set of integer-size instances.

    Every non-increasing sequence of positive integers with ``n_min <= n <=
    n_max`` and ``sum_min <= Sum <= sum_max`` is included, subject to the
    pattern filter and the optional scope restrictions on the largest and
    last job.
    """

    machines: int
    n_min: int
    n_max: int
    sum_max: int
    pattern: PatternFilter = PatternFilter.DECR
    sum_min: int = 1
    size_max: int | None = None
    last_min: int | None = None  # p_n >= last_min
    last_min_share: Fraction | None = None  # p_n >= last_min_share * Sum
    last_max_gap: int | None = None  # p_n <= p_1 - last_max_gap

    def validate(self) -> None:
        if self.machines < 2:
            raise ValueError("domain needs machines >= 2")
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(f"bad job-count range [{self.n_min}, {self.n_max}]")
        if not 1 <= self.sum_min <= self.sum_max:
            raise ValueError(f"bad sum range [{self.sum_min}, {self.sum_max}]")
        if self.size_max is not None and self.size_max < 1:
            raise ValueError("size_max must be positive")

    def admits(self, sizes: tuple[int, ...]) -> bool:
        total = sum(sizes)
        last = sizes[-1]
        if self.last_min is not None and last < self.last_min:
            return False
        if self.last_min_share is not None and last < self.last_min_share * total:
            return False
        if self.last_max_gap is not None and last > sizes[0] - self.last_max_gap:
            return False
        return True

    def describe(self) -> dict:
        out = {
            "machines": self.machines,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "sum_min": self.sum_min,
            "sum_max": self.sum_max,
            "pattern": self.pattern.value,
            "size_max": self.size_max,
            "last_min": self.last_min,
            "last_min_share": None if self.last_min_share is None else fraction_str(self.last_min_share),
            "last_max_gap": self.last_max_gap,
        }
        return out


def partitions(total: int, parts: int, cap: int, strict: bool = False) -> Iterator[tuple[int, ...]]:
    """Non-increasing (strictly decreasing if ``strict``) tuples of ``parts``
    positive integers, each <= ``cap``, summing to ``total``.

    Emitted in lexicographically decreasing order.
    """
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    for first in range(min(cap, total - (parts - 1)), 0, -1):
        nxt = first - 1 if strict else first
        if total - first > (parts - 1) * nxt:
            break  # smaller firsts only make the tail heavier
        for rest in partitions(total - first, parts - 1, nxt, strict):
            yield (first,) + rest


def _raw_sequences(domain: EnumerationDomain) -> Iterator[tuple[int, ...]]:
    for n in range(domain.n_min, domain.n_max + 1):
        for total in range(domain.sum_min, domain.sum_max + 1):
            cap = total if domain.size_max is None else domain.size_max
            if domain.pattern is PatternFilter.I1:
                if total % n == 0 and total // n <= cap:
                    yield (total // n,) * n
            else:
                yield from partitions(total, n, cap, strict=domain.pattern is PatternFilter.I2)


def enumerate_decreasing_instances(domain: EnumerationDomain) -> Iterator[Instance]:
    """Every instance of ``domain`` exactly once, ordered by n, then Sum,
    then lexicographically decreasing sizes."""
    domain.validate()
    for sizes in _raw_sequences(domain):
        if domain.admits(sizes):
            yield build_instance(domain.machines, sizes)
