"""Lower-bound families encoded as adversary trees.

t1: two machines, Sum = k > 6.  First job (k+3)/3; the adversary then picks
    the second job from {(2k-3)/6, k/3}; the third job closes the total.
t2: two machines, Sum = k >= 7, sizes 12k/25, 7k/25, 6k/25 with no
    adversary choice after the start.
t6: three machines, Sum = 27, first job 9, then every integer continuation
    of three more non-increasing jobs summing to 18.
"""

from __future__ import annotations

from fractions import Fraction

from ..core import to_rational
from ..errors import KOutOfRange
from .trees import AdversaryTree, build_tree

__all__ = ["theorem1_tree", "theorem2_tree", "theorem6_tree", "integer_continuations", "FAMILIES"]


def theorem1_tree(k) -> AdversaryTree:
    k = to_rational(k)
    if k <= 6:
        raise KOutOfRange(f"family t1 needs k > 6, got {k}")

    def options(sizes, placed):
        if len(sizes) == 0:
            return [(k + 3) / 3]
        if len(sizes) == 1:
            return [(2 * k - 3) / 6, k / 3]
        rest = k - sum(sizes)
        return [rest] if rest > 0 else []

    return build_tree(f"t1(k={k})", 2, k, options)


def theorem2_tree(k) -> AdversaryTree:
    k = to_rational(k)
    if k < 7:
        raise KOutOfRange(f"family t2 needs k >= 7, got {k}")
    sequence = [k * 12 / 25, k * 7 / 25, k * 6 / 25]

    def options(sizes, placed):
        return sequence[len(sizes):len(sizes) + 1]

    return build_tree(f"t2(k={k})", 2, k, options)


def integer_continuations(sizes: tuple, total: int, n_jobs: int) -> list[int]:
    """Integer next sizes (largest first) that still admit a non-increasing
    completion to exactly ``n_jobs`` positive jobs summing to ``total``."""
    left = n_jobs - len(sizes)
    if left == 0:
        return []
    remaining = int(total - sum(sizes))
    cap = int(sizes[-1]) if sizes else remaining
    out = []
    for s in range(min(cap, remaining), 0, -1):
        rest = remaining - s
        if left == 1:
            if rest == 0:
                out.append(s)
        elif left - 1 <= rest <= (left - 1) * s:
            out.append(s)
    return out


def theorem6_tree() -> AdversaryTree:
    total, n_jobs = 27, 4

    def options(sizes, placed):
        if not sizes:
            return [9]
        return integer_continuations(sizes, total, n_jobs)

    return build_tree("t6", 3, total, options)


FAMILIES = {
    "t1": theorem1_tree,
    "t2": theorem2_tree,
    "t6": theorem6_tree,
}
