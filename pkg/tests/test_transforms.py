from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from trigrid.grid import GridError
from trigrid.oracle import effective_resistance
from trigrid.grid import WeightedGraph
from trigrid.transforms import delta, delta_to_y, series, wye, y_to_delta

from conftest import positive_rationals


def sym(q):
    return sympy.Rational(q.numerator, q.denominator)


def test_series():
    assert series(F(1, 3), F(1, 3)) == F(2, 3)
    assert series(F(1, 4), F(1, 4)) == F(1, 2) == sympy.Rational(1, 4) + sympy.Rational(1, 4)
    with pytest.raises(GridError):
        series(1, 0)


def test_delta_examples():
    assert delta(1, 1, 1) == F(1, 3)
    expected = sympy.Integer(1) / (2 + sympy.Rational(2, 3))
    assert delta(1, 1, F(2, 3)) == F(3, 8) == expected
    assert delta(2, 2, 2) == F(2, 3)


def test_wye_examples():
    third = F(1, 3)
    assert wye(third, third, third) == 1
    a, b, c = (sympy.Rational(1, 3), sympy.Rational(1, 3), sympy.Rational(3, 8))
    assert wye(F(1, 3), F(1, 3), F(3, 8)) == F(13, 12) == (a * b + b * c + c * a) / a


@pytest.mark.parametrize("fn", [delta, wye])
@pytest.mark.parametrize("args", [(0, 1, 1), (1, -1, 1), (1, 1, F(-1, 2))])
def test_kernels_reject_nonpositive(fn, args):
    with pytest.raises(GridError):
        fn(*args)


def test_delta_to_y_examples():
    third = F(1, 3)
    assert delta_to_y(1, 1, 1) == (third, third, third)
    assert delta_to_y(1, 2, 3) == (1, F(1, 2), F(1, 3))
    assert y_to_delta(third, third, third) == (1, 1, 1)
    assert y_to_delta(1, F(1, 2), F(1, 3)) == (1, 2, 3)
    with pytest.raises(GridError):
        delta_to_y(1, 0, 1)
    with pytest.raises(GridError):
        y_to_delta(1, 1, -1)


@given(positive_rationals, positive_rationals, positive_rationals)
def test_round_trips(a, b, c):
    assert y_to_delta(*delta_to_y(a, b, c)) == (a, b, c)
    assert delta_to_y(*y_to_delta(a, b, c)) == (a, b, c)


@given(positive_rationals, positive_rationals, positive_rationals, positive_rationals)
def test_homogeneity_and_symmetry(x, y, z, k):
    assert delta(k * x, k * y, k * z) == k * delta(x, y, z)
    assert wye(k * x, k * y, k * z) == k * wye(x, y, z)
    assert wye(x, y, z) == wye(x, z, y)
    assert delta_to_y(k * x, k * y, k * z) == tuple(k * v for v in delta_to_y(x, y, z))


@given(positive_rationals, positive_rationals, positive_rationals)
def test_scalar_and_triple_forms_agree(ra, rb, rc):
    # leg R_1 sits at N1, where R_B and R_C meet
    r1, r2, r3 = delta_to_y(ra, rb, rc)
    assert r1 == delta(rb, rc, ra)
    assert r2 == delta(ra, rc, rb)
    assert r3 == delta(ra, rb, rc)
    # R_A faces away from leg R_1
    assert y_to_delta(r1, r2, r3)[0] == wye(r1, r2, r3)


small = st.builds(F, st.integers(1, 9), st.integers(1, 9))


@given(st.tuples(small, small, small), st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), small), max_size=6))
def test_delta_y_is_electrically_equivalent(tri, extra):
    # terminals 0, 1, 2 carry the delta; 3 and 4 hang off the host graph
    ra, rb, rc = tri  # R_A: 1-2, R_B: 0-2, R_C: 0-1
    host = {frozenset({2, 3}): F(1), frozenset({3, 4}): F(1, 2), frozenset({0, 4}): F(2)}
    for u, v, r in extra:
        if u != v and frozenset({u, v}) not in (frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})):
            host[frozenset({u, v})] = 1 / r
    with_delta = dict(host)
    for pair, r in ((frozenset({1, 2}), ra), (frozenset({0, 2}), rb), (frozenset({0, 1}), rc)):
        with_delta[pair] = with_delta.get(pair, 0) + 1 / r
    r1, r2, r3 = delta_to_y(ra, rb, rc)
    with_y = dict(host)
    for leaf, r in ((0, r1), (1, r2), (2, r3)):
        with_y[frozenset({leaf, "c"})] = 1 / r
    g_delta = WeightedGraph(frozenset(range(5)), with_delta)
    g_y = WeightedGraph(frozenset([0, 1, 2, 3, 4, "c"]), with_y)
    for u in range(5):
        for v in range(u + 1, 5):
            assert effective_resistance(g_delta, u, v) == effective_resistance(g_y, u, v)
