import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyfree.config import Config
from polyfree.orbifold import (
    FreeProductGroup,
    OrbifoldDisc,
    VFCert,
    euler_characteristic,
    free_subgroup_cert,
    orb_fundamental_group,
    puncture_regular,
    verify_vf_cert,
)
from polyfree.report import FAIL, INCONCLUSIVE, PASS


def test_fundamental_groups():
    assert orb_fundamental_group(OrbifoldDisc(1)) == FreeProductGroup(1)
    assert orb_fundamental_group(OrbifoldDisc(2)) == FreeProductGroup(2)
    g = orb_fundamental_group(OrbifoldDisc(0, (2, 2)))
    assert str(g.presentation) == "<c1, c2 | c1c1, c2c2>"
    assert str(g) == "Z/2 * Z/2"


def test_presentation_shape():
    g = FreeProductGroup(2, (3, 2))
    p = g.presentation
    assert p.ngens == 4
    assert p.relators == ((3, 3, 3), (4, 4))


def test_euler_characteristic():
    assert euler_characteristic(FreeProductGroup(2)) == -1
    assert euler_characteristic(FreeProductGroup(0, (2, 2))) == 0
    assert euler_characteristic(FreeProductGroup(1, (2,))) == Fraction(-1, 2)


@pytest.mark.parametrize(
    "group, index, rank",
    [(FreeProductGroup(2), 1, 2), (FreeProductGroup(0, (2, 2)), 4, 1), (FreeProductGroup(1, (2,)), 2, 2)],
)
def test_certificates(group, index, rank):
    c = free_subgroup_cert(group)
    assert (c.kernel_index, c.kernel_rank) == (index, rank)
    rep = verify_vf_cert(c)
    assert rep.overall == PASS, rep.render()


def test_tampered_rank_fails():
    c = free_subgroup_cert(FreeProductGroup(0, (2, 2)))
    rep = verify_vf_cert(VFCert(c.group, c.kernel_index, c.kernel_rank + 1))
    assert rep.overall == FAIL
    assert any("rank" in f.name for f in rep.failures())


def test_tampered_index_fails():
    c = free_subgroup_cert(FreeProductGroup(1, (3,)))
    rep = verify_vf_cert(VFCert(c.group, 6, c.kernel_rank))
    assert rep.overall == FAIL


def test_limits_give_inconclusive():
    c = free_subgroup_cert(FreeProductGroup(1, (3, 3)))
    rep = verify_vf_cert(c, Config(max_cosets=3))
    assert rep.overall == INCONCLUSIVE


def test_puncture_regular():
    assert puncture_regular(OrbifoldDisc(1), 1) == OrbifoldDisc(2)
    assert puncture_regular(OrbifoldDisc(1, (2,)), 2) == OrbifoldDisc(3, (2,))
    o = OrbifoldDisc(0, (3, 2))
    assert puncture_regular(o, 0) == o
    with pytest.raises(ValueError):
        puncture_regular(o, -1)


def test_parse_and_format():
    o = OrbifoldDisc.parse("1,1;2")
    assert o == OrbifoldDisc(1, (2,))
    assert str(o) == "C(1,1;(2))"
    assert OrbifoldDisc.parse("0,2;(2,2)") == OrbifoldDisc(0, (2, 2))
    assert OrbifoldDisc.parse(o.compact()) == o
    assert OrbifoldDisc.from_dict(o.to_dict()) == o
    for bad in ["1,2;2", "x", "1,1;1"]:
        with pytest.raises(ValueError):
            OrbifoldDisc.parse(bad)


def small_orbifolds(total, max_order):
    for m in range(total + 1):
        for k in range(total - m + 1):
            for qs in itertools.product(range(2, max_order + 1), repeat=k):
                yield OrbifoldDisc(m, qs)


def test_all_small_certificates_verify():
    for o in small_orbifolds(4, 4):
        c = free_subgroup_cert(orb_fundamental_group(o))
        rep = verify_vf_cert(c)
        assert rep.overall == PASS, (str(o), rep.render())


def test_rank_zero_exactly_for_finite_groups():
    for o in small_orbifolds(4, 4):
        c = free_subgroup_cert(orb_fundamental_group(o))
        assert c.kernel_rank >= 0
        assert (c.kernel_rank == 0) == ((o.punctures, o.cone_points) in [(0, 0), (0, 1)])
        assert 1 - c.kernel_rank == c.kernel_index * euler_characteristic(c.group)


orbifolds = st.builds(
    OrbifoldDisc, st.integers(0, 5), st.lists(st.integers(2, 6), max_size=3).map(tuple)
)


@given(orbifolds, st.integers(0, 5), st.integers(0, 5))
def test_puncture_regular_additive(o, s, t):
    assert puncture_regular(puncture_regular(o, s), t) == puncture_regular(o, s + t)


@given(orbifolds)
def test_cone_orders_kept_in_input_order(o):
    assert orb_fundamental_group(o).cyclic_orders == o.cone_orders
