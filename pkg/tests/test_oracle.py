import itertools
from fractions import Fraction

import pytest
from hypothesis import given

from semisched.algorithms import PolicyKind, run_online
from semisched.core import apply_assignment, build_instance
from semisched.errors import MismatchedInstance, SearchBudgetExceeded, UnspecifiedBranch
from semisched.oracle import (
    RatioKind,
    competitive_ratio,
    default_node_budget,
    lb_reference,
    opt_exact,
    opt_exact_bruteforce,
    opt_lower_bound,
)

from conftest import instances

F = Fraction


def two_machine_optimum(sizes):
    """Best split over all subsets for m=2; independent of the library."""
    total = sum(sizes)
    best = total
    for r in range(len(sizes) + 1):
        for subset in itertools.combinations(sizes, r):
            best = min(best, max(sum(subset), total - sum(subset)))
    return best


@pytest.mark.parametrize(
    "m, sizes, expected",
    [(3, [6, 5, 4, 3, 2], F(20, 3)), (2, [12, 1], 12), (2, [3, 2, 1], 3)],
)
def test_opt_lower_bound(m, sizes, expected):
    assert opt_lower_bound(build_instance(m, sizes)) == expected


def test_opt_exact_30_25_24_21():
    sizes = [30, 25, 24, 21]
    assert two_machine_optimum(sizes) == 51
    ref = opt_exact(build_instance(2, sizes))
    assert ref.exact == 51
    groups = {j: sorted(p for p, a in zip(sizes, ref.exact_assignment) if a == j) for j in (1, 2)}
    assert sorted(groups.values()) == [[21, 30], [24, 25]]


@pytest.mark.parametrize("m, sizes, expected", [(3, [6, 5, 4, 3, 2], 7), (2, [5], 5)])
def test_opt_exact(m, sizes, expected):
    inst = build_instance(m, sizes)
    assert opt_exact(inst).exact == expected
    assert opt_exact_bruteforce(inst).exact == expected


def test_witness_places_first_job_on_machine_one():
    assert opt_exact(build_instance(3, [6, 5, 4, 3, 2])).exact_assignment[0] == 1


def test_budget_exhaustion_is_an_error():
    # LPT gives 7 here while the optimum is 6, so the search must expand nodes.
    inst = build_instance(2, [3, 3, 2, 2, 2])
    assert opt_exact(inst).exact == 6
    with pytest.raises(SearchBudgetExceeded):
        opt_exact(inst, node_budget=1)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("SEMISCHED_NODE_BUDGET", "1")
    assert default_node_budget() == 1
    with pytest.raises(SearchBudgetExceeded):
        opt_exact(build_instance(2, [3, 3, 2, 2, 2]))
    monkeypatch.delenv("SEMISCHED_NODE_BUDGET")
    assert default_node_budget() == 10**8


def test_competitive_ratio_examples():
    inst = build_instance(3, [6, 5, 4, 3, 2])
    out = run_online(inst, PolicyKind.THREE_DS)
    assert competitive_ratio(out, opt_exact(inst), RatioKind.VS_LB_FORMULA) == F(21, 20)

    inst = build_instance(2, [1, 1, 1])
    out = run_online(inst, PolicyKind.TWO_DS)
    ref = opt_exact(inst)
    assert competitive_ratio(out, ref, RatioKind.VS_LB_FORMULA) == F(4, 3)
    assert competitive_ratio(out, ref, RatioKind.VS_EXACT) == 1

    witness = apply_assignment(inst, ref.exact_assignment)
    assert competitive_ratio(witness, ref, RatioKind.VS_EXACT) == 1


def test_competitive_ratio_rejects_foreign_reference():
    out = run_online(build_instance(2, [1, 1, 1]), PolicyKind.TWO_DS)
    with pytest.raises(MismatchedInstance):
        competitive_ratio(out, lb_reference(build_instance(2, [2, 1])), RatioKind.VS_LB_FORMULA)


def test_lb_reference_has_no_exact():
    ref = lb_reference(build_instance(2, [2, 1]))
    with pytest.raises(ValueError):
        ref.denominator(RatioKind.VS_EXACT)


@given(instances(max_n=6))
def test_sandwich_and_witness(inst):
    ref = opt_exact(inst)
    assert ref.lb_formula <= ref.exact
    assert apply_assignment(inst, ref.exact_assignment).makespan == ref.exact
    assert ref.exact == opt_exact_bruteforce(inst).exact
    policies = [PolicyKind.LS, PolicyKind.LPT]
    policies += ([PolicyKind.TWO_DS, PolicyKind.I2DS, PolicyKind.SD] if inst.machines == 2
                 else [PolicyKind.THREE_DS, PolicyKind.I3DS])
    for policy in policies:
        try:
            out = run_online(inst, policy)
        except UnspecifiedBranch:
            continue
        assert ref.exact <= out.makespan
        assert competitive_ratio(out, ref, RatioKind.VS_EXACT) >= 1
