from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kr2.autgroup import Automorphism, ParamMismatch, act_on_point
from kr2.coordring import make_params
from kr2.geometry import (BIG_ORBIT, CUSP_FAMILY, ORIGIN, PUNCTURED_LINE, FiberType, NotOnX,
                          fiber_type, make_point, orbit_classify, same_orbit)
from kr2.parsing import parse_poly as P
from kr2.sampling import cusp_point, witness_points
from kr2.scalars import scalar_pow, zeta

from conftest import TUPLES, polys, nonzero_rationals


def test_make_point(kr3123):
    make_point(kr3123, 0, 0, 0, 0)
    make_point(kr3123, 1, -1, 1, 1)
    with pytest.raises(NotOnX):
        make_point(kr3123, 1, 1, 1, 1)


def test_fiber_examples(kr3123):
    assert fiber_type(kr3123, 1, 1) == FiberType("Line", 1)
    assert fiber_type(kr3123, -1, 1) == FiberType("MultiLine", 3)
    assert fiber_type(kr3123, 0, 0) == FiberType("Line", 1)
    assert str(fiber_type(kr3123, -1, 1)) == "MultiLine 3"


def test_multiline_root_count(params):
    # over the cusp point with w = 1, x0 = -1: t^a3 = 1 has a3 distinct roots zeta^(2j)
    pt = cusp_point(params, Fraction(1), Fraction(0))
    n = 2 * params.a3
    z = zeta(n)
    roots = {scalar_pow(z, j) for j in range(n) if pt.x + scalar_pow(z, j) ** params.a3 == 0}
    assert len(roots) == params.a3 == fiber_type(params, pt.x, pt.z).count


def test_orbit_examples(kr3123):
    assert orbit_classify(make_point(kr3123, 0, 5, 0, 0)).tag == PUNCTURED_LINE
    assert orbit_classify(make_point(kr3123, 0, 0, 0, 0)).tag == ORIGIN
    big = orbit_classify(make_point(kr3123, 1, -1, 1, 1))
    assert (big.tag, big.key) == (BIG_ORBIT, (1, -1))
    assert str(big) == "BigOrbit [1 : -1]"
    cusp = orbit_classify(make_point(kr3123, -1, 7, 1, 1))
    assert (cusp.tag, cusp.key) == (CUSP_FAMILY, 7)
    assert cusp.to_json() == {"tag": "CuspFamily", "key": {"num": 7, "den": 1}}


def test_same_orbit_examples(kr3123):
    o = make_point(kr3123, 0, 0, 0, 0)
    assert same_orbit(o, o)
    pt = make_point(kr3123, 1, -1, 1, 1)
    assert same_orbit(pt, act_on_point(Automorphism(kr3123, P("0"), Fraction(2)), pt))
    assert not same_orbit(make_point(kr3123, -1, 7, 1, 1), make_point(kr3123, -1, 8, 1, 1))
    with pytest.raises(ParamMismatch):
        same_orbit(o, make_point(make_params(2, 1, 3, 4), 0, 0, 0, 0))


def test_witnesses_realize_every_tag(params):
    for tag, pt in witness_points(params).items():
        assert orbit_classify(pt).tag == tag


@pytest.mark.parametrize("tup", TUPLES)
@given(nonzero_rationals, st.integers(-5, 5), nonzero_rationals)
def test_cusp_key_is_torus_invariant(tup, w, y, mu):
    prm = make_params(*tup)
    pt = cusp_point(prm, w, Fraction(y))
    moved = act_on_point(Automorphism(prm, P("0"), mu), pt)
    assert orbit_classify(moved) == orbit_classify(pt)


@pytest.mark.parametrize("tup", TUPLES)
@given(polys("xz", 3, 3), st.sampled_from([1, -1, 2, Fraction(1, 2)]))
def test_big_orbit_key_invariant(tup, p, mu):
    prm = make_params(*tup)
    pt = witness_points(prm)[BIG_ORBIT]
    moved = act_on_point(Automorphism(prm, p, Fraction(mu)), pt)
    assert orbit_classify(moved) == orbit_classify(pt)


def test_additive_moves_y_on_cusp_fiber(kr3123):
    # A fixes x, z, t over the cusp curve but shifts y by -a3*t^(a3-1)*p(x0, z0)
    pt = make_point(kr3123, -1, 7, 1, 1)
    moved = act_on_point(Automorphism(kr3123, P("1"), Fraction(1)), pt)
    assert (moved.x, moved.z, moved.t) == (pt.x, pt.z, pt.t)
    assert moved.y == 7 - 3
    assert orbit_classify(moved).key == 4


def test_cyclotomic_key_collapses(kr3123):
    z3 = zeta(3)
    pt = make_point(kr3123, -1, 7, 1, 1)
    moved = act_on_point(Automorphism(kr3123, P("0"), z3), pt)
    assert orbit_classify(moved) == orbit_classify(pt)
