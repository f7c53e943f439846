import math
from fractions import Fraction

import pytest

from polyfree.enumerate import low_index_subgroups, reidemeister_schreier, table_from_action, todd_coxeter
from polyfree.enumerate.schreier import schreier_generators
from polyfree.orbifold import FreeProductGroup, euler_characteristic
from polyfree.presentation import Presentation, free_group
from polyfree.tietze import tietze_simplify


def test_index_one_is_identity_rewriting():
    p = Presentation(("a", "b"), ((1, 1), (1, 2, -1, -2)))
    t = todd_coxeter(p, [(1,), (2,)])
    assert t.index == 1
    q = reidemeister_schreier(p, t)
    assert q.ngens == 2
    assert q.relators == p.relators


def test_kernel_of_z_free_z2():
    # t -> 0, c -> 1 in Z/2; rank by Euler characteristic: 1 - 2 * (-1/2) = 2
    p = Presentation(("t", "c"), ((2, 2),))
    t = table_from_action(p, [(0, 1), (1, 0)])
    q = tietze_simplify(reidemeister_schreier(p, t)).presentation
    assert q.relators == () and q.ngens == 2


def test_index_two_in_f2():
    f2 = free_group(2)
    t = todd_coxeter(f2, [(1, 1), (2,), (1, 2, -1)])
    q = reidemeister_schreier(f2, t)
    assert q.ngens == 3 and q.relators == ()


def test_incomplete_table_rejected():
    p = Presentation(("a",), ((1, 1, 1),))
    t = todd_coxeter(p, [], max_cosets=2)
    with pytest.raises(ValueError):
        reidemeister_schreier(p, t)


def test_schreier_generator_count_and_membership():
    p = Presentation(("a", "b"), ((1, 1), (2, 2, 2), (1, 2) * 3))
    for t in low_index_subgroups(p, 4):
        gens = schreier_generators(t)
        assert len(gens) == t.index * p.ngens - (t.index - 1)
        assert all(t.contains(w) for w in gens.values())


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_nielsen_schreier(rank):
    f = free_group(rank)
    for t in low_index_subgroups(f, 4):
        q = tietze_simplify(reidemeister_schreier(f, t)).presentation
        assert q.relators == ()
        assert q.ngens == 1 + t.index * (rank - 1)


def euler_from_shape(q: Presentation):
    """Euler characteristic when q is visibly a free product of cyclic groups."""
    seen = set()
    chi = Fraction(1 - q.ngens)
    for r in q.relators:
        gens = {abs(x) for x in r}
        if len(gens) != 1 or gens & seen:
            return None
        seen |= gens
        chi += Fraction(1, len(r))
    return chi


@pytest.mark.parametrize(
    "free_rank, orders",
    [(1, (2,)), (0, (2, 3)), (0, (2, 2, 2)), (1, (3,)), (2, (2,)), (0, (3, 3))],
)
def test_euler_characteristic_multiplicative(free_rank, orders):
    g = FreeProductGroup(free_rank, orders)
    p = g.presentation
    chi = euler_characteristic(g)
    tables = low_index_subgroups(p, 4)
    assert len(tables) > 1
    for t in tables:
        q = tietze_simplify(reidemeister_schreier(p, t)).presentation
        sub_chi = euler_from_shape(q)
        assert sub_chi is not None, q
        assert sub_chi == t.index * chi
