from fractions import Fraction
from functools import lru_cache

import pytest

from semisched.adversary import (
    EnumerationDomain,
    PatternFilter,
    enumerate_decreasing_instances,
    gen_i1,
    partitions,
)
from semisched.core import PatternClass


@lru_cache(maxsize=None)
def partition_count(total, parts):
    """Partitions of ``total`` into exactly ``parts`` positive parts (recurrence)."""
    if parts == 0:
        return 1 if total == 0 else 0
    if total < parts:
        return 0
    # either some part equals 1, or subtract 1 from every part
    return partition_count(total - 1, parts - 1) + partition_count(total - parts, parts)


def sizes_of(domain):
    return [tuple(int(p) for p in inst.sizes) for inst in enumerate_decreasing_instances(domain)]


@pytest.mark.parametrize(
    "n, x, expected",
    [(3, 1, [1, 1, 1]), (4, 1, [1, 1, 1, 1]), (1, 5, [5])],
)
def test_gen_i1(n, x, expected):
    assert gen_i1(n, x) == [Fraction(v) for v in expected]


def test_gen_i1_rejects_bad_input():
    with pytest.raises(ValueError):
        gen_i1(0, 1)
    with pytest.raises(ValueError):
        gen_i1(2, 0)


@pytest.mark.parametrize(
    "n, total, pattern, expected",
    [
        (3, 5, PatternFilter.DECR, {(3, 1, 1), (2, 2, 1)}),
        (2, 3, PatternFilter.DECR, {(2, 1)}),
        (3, 6, PatternFilter.I1, {(2, 2, 2)}),
        (3, 6, PatternFilter.I2, {(3, 2, 1)}),
    ],
)
def test_small_domains(n, total, pattern, expected):
    domain = EnumerationDomain(2, n, n, total, pattern, sum_min=total)
    got = sizes_of(domain)
    assert set(got) == expected
    assert len(got) == len(expected)


def test_completeness_against_partition_counts():
    for n in range(1, 5):
        for total in range(1, 13):
            got = sizes_of(EnumerationDomain(2, n, n, total, sum_min=total))
            assert len(got) == len(set(got)) == partition_count(total, n)


def test_every_instance_matches_filter():
    for inst in enumerate_decreasing_instances(EnumerationDomain(3, 1, 6, 15, PatternFilter.I2)):
        assert inst.pattern is PatternClass.I2 or inst.n == 1
    for inst in enumerate_decreasing_instances(EnumerationDomain(3, 2, 6, 15, PatternFilter.I1)):
        assert inst.pattern is PatternClass.I1


def test_partitions_order_is_lexicographically_decreasing():
    got = list(partitions(8, 3, 8))
    assert got == sorted(got, reverse=True)
    assert list(partitions(8, 3, 8, strict=True)) == [(5, 2, 1), (4, 3, 1)]


def test_scope_filters():
    domain = EnumerationDomain(2, 3, 3, 12, PatternFilter.I2, sum_min=12, last_min=3)
    assert sizes_of(domain) == [(5, 4, 3)]
    domain = EnumerationDomain(2, 3, 3, 24, PatternFilter.I2, sum_min=24,
                               last_min_share=Fraction(1, 4))
    assert all(s[-1] * 4 >= 24 for s in sizes_of(domain))
    domain = EnumerationDomain(2, 3, 3, 12, PatternFilter.DECR, sum_min=12, last_max_gap=2)
    assert all(s[-1] <= s[0] - 2 for s in sizes_of(domain))
    domain = EnumerationDomain(2, 3, 3, 12, PatternFilter.DECR, size_max=4)
    assert max(max(s) for s in sizes_of(domain)) == 4


def test_enumeration_is_deterministic():
    domain = EnumerationDomain(2, 1, 5, 14)
    assert sizes_of(domain) == sizes_of(domain)


@pytest.mark.parametrize(
    "kwargs",
    [dict(n_min=3, n_max=2), dict(n_min=0, n_max=2), dict(sum_max=0), dict(machines=1)],
)
def test_invalid_domains(kwargs):
    base = dict(machines=2, n_min=1, n_max=3, sum_max=5)
    base.update(kwargs)
    with pytest.raises(ValueError):
        list(enumerate_decreasing_instances(EnumerationDomain(**base)))
