import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FINITE_GROUPS, ORDERS, perm_closure
from polyfree.enumerate import (
    EnumerationLimit,
    characteristic_core,
    conjugates,
    intersect_tables,
    low_index_subgroups,
    todd_coxeter,
)
from polyfree.presentation import Presentation, free_group

Z3 = Presentation(("a",), ((1, 1, 1),))
D_INF = Presentation(("a", "b"), ((1, 1), (2, 2)))
S3 = Presentation(("a", "b"), ((1, 1), (2, 2), (1, 2) * 3))


def hall_counts(rank, n):
    """Number of subgroups of index exactly k in F_rank, k = 1..n (Hall's recursion)."""
    a = []
    for k in range(1, n + 1):
        total = k * math.factorial(k) ** (rank - 1)
        total -= sum(math.factorial(k - j) ** (rank - 1) * a[j - 1] for j in range(1, k))
        a.append(total)
    return a


def subgroup_count_by_index(tables, n):
    counts = [0] * n
    for t in tables:
        counts[t.index - 1] += len(conjugates(t))
    return counts


def all_subgroups(perms):
    """Every subgroup of a small permutation group, by joining cyclic subgroups to a fixed point."""
    group = perm_closure(perms)
    subs = {frozenset(perm_closure([g])) for g in group}
    frontier = set(subs)
    while frontier:
        new = set()
        for h in frontier:
            for k in subs:
                j = frozenset(perm_closure(list(h | k)))
                if j not in subs and j not in new:
                    new.add(j)
        subs |= new
        frontier = new
    return subs, len(group)


def test_examples():
    assert len(low_index_subgroups(free_group(2), 2)) == 4
    assert [t.index for t in low_index_subgroups(Z3, 3)] == [1, 3]
    assert [t.index for t in low_index_subgroups(S3, 3)] == [1, 2, 3]


def test_sorted_and_valid():
    res = low_index_subgroups(D_INF, 4)
    keys = [(t.index, t.table) for t in res]
    assert keys == sorted(keys)
    assert all(t.verify() == [] for t in res)
    assert not res.partial


@pytest.mark.parametrize("rank, n", [(1, 6), (2, 5), (3, 4)])
def test_hall_formula(rank, n):
    res = low_index_subgroups(free_group(rank), n)
    assert subgroup_count_by_index(res, n) == hall_counts(rank, n)


@pytest.mark.parametrize("name", sorted(FINITE_GROUPS))
def test_finite_groups_against_subgroup_lattice(name):
    p, perms = FINITE_GROUPS[name]
    subs, order = all_subgroups(perms)
    assert order == ORDERS[name]
    expected = [0] * order
    for h in subs:
        expected[order // len(h) - 1] += 1
    res = low_index_subgroups(p, order)
    assert subgroup_count_by_index(res, order) == expected


def test_classes_are_not_conjugate():
    res = low_index_subgroups(S3, 6)
    seen = set()
    for t in res:
        tabs = {c.table for c in conjugates(t)}
        assert not (tabs & seen)
        seen |= tabs


def test_node_limit_reports_partial():
    res = low_index_subgroups(free_group(3), 5, max_nodes=50)
    assert res.partial
    with pytest.raises(EnumerationLimit):
        characteristic_core(free_group(3), 5, max_nodes=50)
    with pytest.raises(ValueError):
        low_index_subgroups(Z3, 0)


def test_intersection_examples():
    f2 = free_group(2)
    ta = todd_coxeter(f2, [(1,), (2, 2), (2, 1, -2)])
    tb = todd_coxeter(f2, [(2,), (1, 1), (1, 2, -1)])
    t = intersect_tables(ta, tb)
    assert t.index == 4
    assert t.verify() == []
    assert t.contains((1, 1)) and t.contains((2, 2)) and not t.contains((1,))


words = st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=5).map(tuple)


@settings(max_examples=40, deadline=None)
@given(words)
def test_intersection_membership(w):
    res = low_index_subgroups(S3, 3)
    for t1 in res:
        for t2 in res:
            t = intersect_tables(t1, t2)
            assert t.contains(w) == (t1.contains(w) and t2.contains(w))


@pytest.mark.parametrize("p, d, index", [(D_INF, 2, 4), (Z3, 2, 1), (free_group(1), 3, 6)])
def test_characteristic_core_examples(p, d, index):
    core = characteristic_core(p, d)
    assert core.index == index
    assert core.is_normal()
    assert core.verify() == []


def test_core_contained_in_every_small_subgroup():
    f2 = free_group(2)
    core = characteristic_core(f2, 2)
    assert core.is_normal()
    for t in low_index_subgroups(f2, 2):
        for c in conjugates(t):
            for w in core.generators:
                assert c.contains(w)
