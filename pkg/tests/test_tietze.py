from polyfree.enumerate import reidemeister_schreier, todd_coxeter
from polyfree.presentation import Presentation, free_group
from polyfree.snf import abelianization
from polyfree.tietze import tietze_simplify

from conftest import random_presentation


def size(p):
    return p.ngens + p.total_length()


def test_kill_trivial_generator():
    out = tietze_simplify(Presentation(("a", "b"), ((2,),))).presentation
    assert out == Presentation(("a",))


def test_substitute_length_two():
    out = tietze_simplify(Presentation(("a", "b"), ((1, 2),))).presentation
    assert out == Presentation(("a",))


def test_index_two_subgroup_of_f2_is_free_of_rank_three():
    f2 = free_group(2)
    t = todd_coxeter(f2, [(1, 1), (2,), (1, 2, -1)])
    assert t.index == 2
    out = tietze_simplify(reidemeister_schreier(f2, t)).presentation
    # Nielsen-Schreier: 1 + 2 * (2 - 1)
    assert out.ngens == 3 and out.relators == ()


def test_power_relator_becomes_power_of_generator():
    out = tietze_simplify(Presentation(("a", "b"), ((1, 2) * 3,))).presentation
    assert out.relators == ((2, 2, 2),)


def test_images_map_old_generators_into_new_group():
    p = Presentation(("a", "b", "c"), ((3, 1, 3), (2, -1)))
    r = tietze_simplify(p)
    assert len(r.images) == 3
    # every original relator maps to a relator consequence; here the result is free
    assert r.presentation.relators == ()
    assert r.presentation.ngens == 1


def test_budget_returns_best_so_far():
    p = Presentation(("a", "b", "c"), ((1,), (2,), (3,)))
    r = tietze_simplify(p, budget=1)
    assert r.exhausted
    assert r.presentation.ngens == 2


def test_invariants_preserved_on_random_corpus(rng):
    for _ in range(80):
        p = random_presentation(rng)
        r = tietze_simplify(p)
        assert abelianization(r.presentation) == abelianization(p)
        assert size(r.presentation) <= size(p)


def test_deterministic(rng):
    for _ in range(20):
        p = random_presentation(rng)
        assert tietze_simplify(p) == tietze_simplify(p)
