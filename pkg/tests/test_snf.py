import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_presentation
from polyfree.presentation import Presentation, free_group, free_product
from polyfree.snf import AbelianInvariants, abelianization, smith_normal_form


def cofactor_det(m):
    if not m:
        return 1
    return sum(
        (-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]])
        for j in range(len(m))
    )


def determinantal_divisors(m):
    """Invariant factors from gcds of k x k minors: an independent route to the SNF."""
    rows, cols = len(m), len(m[0]) if m else 0
    ds = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                g = math.gcd(g, cofactor_det([[m[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        ds.append(g)
    return [ds[i] // ds[i - 1] for i in range(1, len(ds))]


def test_examples():
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[3]]) == [3]
    assert smith_normal_form([[0, 0]]) == []


def test_frozen_oracle_value():
    # gcd of entries 2, det -8: d1 = 2, d2 = 8 / 2
    assert determinantal_divisors([[2, 4], [6, 8]]) == [2, 4]


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_agrees_with_determinantal_divisors(m):
    d = smith_normal_form(m)
    assert d == determinantal_divisors(m)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert all(x > 0 for x in d)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
))
def test_product_is_abs_det(m):
    det = cofactor_det(m)
    d = smith_normal_form(m)
    if det:
        assert len(d) == len(m)
        assert math.prod(d) == abs(det)
    else:
        assert len(d) < len(m)


def test_abelianization_examples():
    assert abelianization(free_group(2)) == AbelianInvariants(2, ())
    assert abelianization(Presentation(("a", "b"), ((1, 1), (2, 2)))) == AbelianInvariants(0, (2, 2))
    tilde_a2 = Presentation(
        ("s1", "s2", "s3"),
        ((1, 2, 1, -2, -1, -2), (1, 3, 1, -3, -1, -3), (2, 3, 2, -3, -2, -3)),
    )
    assert abelianization(tilde_a2) == AbelianInvariants(1, ())


def elementary_divisors(torsion):
    """Prime-power decomposition; direct sums just concatenate these."""
    out = []
    for t in torsion:
        p = 2
        while t > 1:
            q = 1
            while t % p == 0:
                t //= p
                q *= p
            if q > 1:
                out.append(q)
            p += 1
    return sorted(out)


def test_free_product_abelianization_is_direct_sum(rng):
    for _ in range(60):
        ps = [random_presentation(rng, max_gens=2, max_rels=2, max_len=4) for _ in range(rng.randint(1, 3))]
        got = abelianization(free_product(ps))
        parts = [abelianization(p) for p in ps]
        assert got.free_rank == sum(a.free_rank for a in parts)
        assert elementary_divisors(got.torsion) == sorted(
            e for a in parts for e in elementary_divisors(a.torsion)
        )
