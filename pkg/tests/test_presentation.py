import json

import pytest

from polyfree.presentation import (
    GroupHom,
    Presentation,
    free_group,
    free_product,
    free_product_with_offsets,
    relation_matrix,
)


def test_relators_stored_cyclically_reduced_in_order():
    p = Presentation(("a", "b"), ((-1, 2, 2, 1), (1, -1), (2, 1)))
    assert p.relators == ((2, 2), (2, 1))


def test_duplicate_generator_names():
    with pytest.raises(ValueError):
        Presentation(("a", "a"))


def test_free_product_examples():
    a = Presentation(("a",))
    b2 = Presentation(("b",), ((1, 1),))
    p = free_product([a, b2])
    assert p.generators == ("a", "b") and p.relators == ((2, 2),)
    a2 = Presentation(("a",), ((1, 1),))
    assert free_product([a2, b2]).relators == ((1, 1), (2, 2))
    fp = free_product_with_offsets([free_group(2), b2, Presentation(("c", "d"))])
    assert fp.presentation.ngens == 5
    assert fp.offsets == (0, 2, 3)
    assert fp.presentation.relators == ((3, 3),)


def test_free_product_renames_clashes():
    p = free_product([Presentation(("a",), ((1, 1),)), Presentation(("a",), ((1, 1, 1),))])
    assert p.generators == ("a_1", "a_2")
    assert p.relators == ((1, 1), (2, 2, 2))


def test_relation_matrix():
    assert relation_matrix(Presentation(("a",), ((1, 1, 1),))) == [[3]]
    assert relation_matrix(Presentation(("a", "b"), ((1, 2, -1, -2),))) == [[0, 0]]
    braid = Presentation(("a", "b"), ((1, 2, 1, -2, -1, -2),))
    assert relation_matrix(braid) == [[1, -1]]


def test_json_round_trip_bit_exact():
    text = '{"generators": ["a", "b"], "relators": ["aa", "bb", "abAB"]}'
    p = Presentation.from_json(text)
    assert p.relators[2] == (1, 2, -1, -2)
    assert json.loads(p.to_json()) == json.loads(text)
    assert Presentation.from_json(p.to_json()) == p
    assert p.to_json() == Presentation.from_json(p.to_json()).to_json()


def test_hom_validity():
    d_inf = Presentation(("a", "b"), ((1, 1), (2, 2)))
    z2 = Presentation(("e",), ((1, 1),))
    assert GroupHom(d_inf, z2, ((1,), (1,))).is_valid()
    z3 = Presentation(("e",), ((1, 1, 1),))
    assert not GroupHom(d_inf, z3, ((1,), ())).is_valid()
    # free target: decided by reduction
    f2 = free_group(2)
    assert GroupHom(Presentation(("x",), ((1, -1),)), f2, ((1, 2),)).is_valid()
    assert not GroupHom(Presentation(("x",), ((1, 1),)), f2, ((1,),)).is_valid()


def test_hom_validity_unknown_for_infinite_target():
    z = Presentation(("t", "u"), ((1, 2, -1, -2),))
    src = Presentation(("x",), ((1, 1),))
    assert GroupHom(src, z, ((1,),)).is_valid(max_cosets=50) is None
