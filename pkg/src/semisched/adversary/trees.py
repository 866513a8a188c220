"""Adversary game trees and their exact minimax solution.

A tree alternates between the adversary revealing the next job size and the
algorithm placing that job.  Leaves are completed instances together with
the placements made along the path, so the solver needs no knowledge of the
family that produced the tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, Union

from ..core import Instance, apply_assignment, build_instance
from ..oracle import RatioKind, competitive_ratio, lb_reference, opt_exact

__all__ = [
    "Leaf",
    "AlgorithmMove",
    "AdversaryMove",
    "AdversaryTree",
    "Solution",
    "build_tree",
    "leaf_value",
    "minimax_value",
    "solve",
    "iter_leaves",
    "tree_summary",
    "check_tree",
]


@dataclass(frozen=True)
class Leaf:
    instance: Instance
    assignment: tuple[int, ...]


@dataclass(frozen=True)
class AlgorithmMove:
    size: Fraction
    children: tuple["Node", ...]  # children[j - 1] is "place on machine j"


@dataclass(frozen=True)
class AdversaryMove:
    options: tuple[tuple[Fraction, "Node"], ...]  # (next size, AlgorithmMove)


Node = Union[Leaf, AlgorithmMove, AdversaryMove]


@dataclass(frozen=True)
class AdversaryTree:
    name: str
    machines: int
    total: Fraction
    root: Node


# Options callback: (sizes revealed so far, placements so far) -> next sizes.
# An empty result means the sequence is complete.
Continuation = Callable[[tuple[Fraction, ...], tuple[int, ...]], Sequence[Fraction]]


def build_tree(name: str, machines: int, total, continuation: Continuation) -> AdversaryTree:
    total = Fraction(total)

    def grow(sizes: tuple, placed: tuple) -> Node:
        options = tuple(Fraction(s) for s in continuation(sizes, placed))
        if not options:
            return Leaf(build_instance(machines, sizes), placed)
        return AdversaryMove(tuple(
            (s, AlgorithmMove(s, tuple(
                grow(sizes + (s,), placed + (j,)) for j in range(1, machines + 1)
            )))
            for s in options
        ))

    return AdversaryTree(name, machines, total, grow((), ()))


@lru_cache(maxsize=4096)
def _exact_ref(instance: Instance):
    return opt_exact(instance)


def leaf_value(leaf: Leaf, kind: RatioKind) -> Fraction:
    outcome = apply_assignment(leaf.instance, leaf.assignment)
    if kind is RatioKind.VS_EXACT:
        ref = _exact_ref(leaf.instance)
    else:
        ref = lb_reference(leaf.instance)
    return competitive_ratio(outcome, ref, kind)


@dataclass(frozen=True)
class Solution:
    """Game value plus one principal line of play.

    ``path`` alternates ("adversary", size) and ("algorithm", machine) moves;
    ties pick the first option / lowest machine.
    """

    value: Fraction
    path: tuple[tuple[str, object], ...]
    leaf: Leaf


def solve(tree: AdversaryTree | Node, kind: RatioKind) -> Solution:
    node = tree.root if isinstance(tree, AdversaryTree) else tree

    def rec(node: Node) -> tuple[Fraction, tuple, Leaf]:
        if isinstance(node, Leaf):
            return leaf_value(node, kind), (), node
        if isinstance(node, AlgorithmMove):
            best = None
            for j, child in enumerate(node.children, start=1):
                value, path, leaf = rec(child)
                if best is None or value < best[0]:
                    best = (value, (("algorithm", j),) + path, leaf)
            return best
        best = None
        for size, child in node.options:
            value, path, leaf = rec(child)
            if best is None or value > best[0]:
                best = (value, (("adversary", size),) + path, leaf)
        return best

    value, path, leaf = rec(node)
    return Solution(value, path, leaf)


def minimax_value(tree: AdversaryTree | Node, kind: RatioKind) -> Fraction:
    """Best ratio a deterministic algorithm can guarantee against the family."""
    return solve(tree, kind).value


def iter_leaves(node: Node, sizes: tuple = (), placed: tuple = ()):
    """Yield (leaf, sizes revealed on the path, placements on the path)."""
    if isinstance(node, Leaf):
        yield node, sizes, placed
    elif isinstance(node, AlgorithmMove):
        for j, child in enumerate(node.children, start=1):
            yield from iter_leaves(child, sizes + (node.size,), placed + (j,))
    else:
        for _, child in node.options:
            yield from iter_leaves(child, sizes, placed)


def tree_summary(tree: AdversaryTree) -> dict:
    counts = {"adversary_nodes": 0, "algorithm_nodes": 0, "leaves": 0, "depth": 0}

    def walk(node: Node, depth: int) -> None:
        counts["depth"] = max(counts["depth"], depth)
        if isinstance(node, Leaf):
            counts["leaves"] += 1
        elif isinstance(node, AlgorithmMove):
            counts["algorithm_nodes"] += 1
            for child in node.children:
                walk(child, depth + 1)
        else:
            counts["adversary_nodes"] += 1
            for _, child in node.options:
                walk(child, depth + 1)

    walk(tree.root, 0)
    return counts


def check_tree(tree: AdversaryTree) -> list[str]:
    """Structural problems in ``tree``; an empty list means it is well formed."""
    problems = []

    def walk(node: Node) -> None:
        if isinstance(node, AlgorithmMove):
            if len(node.children) != tree.machines:
                problems.append(f"algorithm move for size {node.size} has "
                                f"{len(node.children)} children, expected {tree.machines}")
            for child in node.children:
                walk(child)
        elif isinstance(node, AdversaryMove):
            for size, child in node.options:
                if not isinstance(child, AlgorithmMove) or child.size != size:
                    problems.append(f"adversary option {size} does not lead to its placement")
                walk(child)

    walk(tree.root)
    for leaf, sizes, placed in iter_leaves(tree.root):
        if leaf.instance.sizes != sizes or leaf.assignment != placed:
            problems.append(f"leaf {leaf.instance.sizes} disagrees with its path {sizes}")
        if sum(sizes, Fraction(0)) != tree.total:
            problems.append(f"path {sizes} totals {sum(sizes)}, family Sum is {tree.total}")
        if any(b > a for a, b in zip(sizes, sizes[1:])):
            problems.append(f"path {sizes} is not non-increasing")
    return problems
