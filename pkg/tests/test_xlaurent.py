import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdyson.errors import DimensionMismatch, RingMismatch
from qdyson.exactalg import ONE, Q, ZERO, QLaurent
from qdyson.xlaurent import RationalPoint, XPoly, coeff_of, coeff_of_product, eval_at, xp_mul

from conftest import xpolys

x1 = XPoly.var(2, 0)
x2 = XPoly.var(2, 1)
r12 = x1 * x2**-1  # x1/x2
r21 = x2 * x1**-1


def test_mul_examples():
    p = 1 - r12
    assert xp_mul(p, XPoly.one(2)) == p
    prod = xp_mul(1 - r12, 1 - r21 * Q)
    # hand expansion: 1 + q - x1/x2 - q x2/x1
    expected = XPoly(2, {(0, 0): 1 + Q, (1, -1): QLaurent(-1), (-1, 1): -Q})
    assert prod == expected
    assert x1 * x1**-1 == XPoly.one(2)


def test_coeff_examples():
    p = xp_mul(1 - r12, 1 - r21 * Q)
    assert coeff_of(p, (0, 0)) == 1 + Q
    assert coeff_of(p, (3, -3)) == ZERO
    assert coeff_of(r12, (1, -1)) == ONE
    with pytest.raises(DimensionMismatch):
        coeff_of(p, (0, 0, 0))


def test_eval_examples():
    assert eval_at(1 - r12, RationalPoint(Fraction(1, 2), (1, 2))) == Fraction(1, 2)
    assert eval_at(r21 * Q, RationalPoint(2, (3, 6))) == 4
    with pytest.raises(DimensionMismatch):
        eval_at(r21, RationalPoint(2, (1, 2, 3)))


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        x1 * XPoly.var(3, 0)


def test_rational_point_rejects_zero():
    with pytest.raises(ValueError):
        RationalPoint(0, (1, 2))
    with pytest.raises(ValueError):
        RationalPoint(2, (0, 2))


_pts = st.builds(
    RationalPoint,
    st.sampled_from([Fraction(2), Fraction(-1, 3), Fraction(5, 7), Fraction(3, 2)]),
    st.tuples(*[st.sampled_from([Fraction(1, 2), Fraction(-2), Fraction(3), Fraction(7, 5)])] * 2),
)


@settings(max_examples=500, deadline=None)
@given(xpolys(), xpolys(), xpolys(), _pts)
def test_evaluation_is_homomorphism(a, b, c, pt):
    ea, eb, ec = (eval_at(p, pt) for p in (a, b, c))
    assert eval_at(a + b, pt) == ea + eb
    assert eval_at(a * b, pt) == ea * eb
    assert eval_at(a * (b + c), pt) == ea * (eb + ec)


@settings(max_examples=200, deadline=None)
@given(xpolys(), st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_monomial_shift(p, u, v):
    shifted = p * XPoly.monomial(u)
    assert coeff_of(shifted, v) == coeff_of(p, (v[0] - u[0], v[1] - u[1]))


@settings(max_examples=200, deadline=None)
@given(xpolys(), xpolys(), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_coeff_of_product_matches_full_product(a, b, v):
    assert coeff_of_product(a, b, v) == coeff_of(a * b, v)


def test_items_are_ordered():
    rng = random.Random(3)
    p = XPoly(2, {(rng.randint(-3, 3), rng.randint(-3, 3)): QLaurent(rng.randint(1, 5)) for _ in range(20)})
    keys = [m for m, _ in p.items()]
    assert keys == sorted(keys)


def test_embed():
    p = 1 - r12
    e = p.embed(4, (0, 2))
    assert e == 1 - XPoly.monomial((1, 0, -1, 0))
