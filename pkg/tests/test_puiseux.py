from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tropbasis.errors import DivisionByZeroSeries, PrecisionExhausted
from tropbasis.puiseux import ONE, ZERO, Puiseux, deg, parse
from tropbasis.tropical import INF

t = Puiseux.monomial(1, 1)

exps = st.fractions(min_value=0, max_value=3, max_denominator=2)
coefs = st.fractions(min_value=-5, max_value=5, max_denominator=3).filter(bool)
polys = st.lists(st.tuples(exps, coefs), max_size=4).map(Puiseux)


def test_deg_examples():
    assert deg(Puiseux.monomial(1, Fraction(1, 2)) + t) == Fraction(1, 2)
    assert deg(ZERO) == INF
    assert deg(3) == 0


def test_arith_examples():
    assert (1 + t) * (1 - t) == 1 - t * t
    inv = (1 + t).inv(precision=3)
    assert inv.terms == ((0, 1), (1, -1), (2, 1)) and inv.order == 3
    back = inv * (1 + t)
    assert back.terms == ((0, 1),)
    z = t - t
    assert z.is_zero() and z.exact and z.deg() == INF


def test_truncated_zero_is_not_guessed():
    i = (1 + t).inv(precision=3)
    z = i - i
    with pytest.raises(PrecisionExhausted):
        z.deg()
    with pytest.raises(PrecisionExhausted):
        z.is_zero()


def test_division_by_zero():
    with pytest.raises(DivisionByZeroSeries):
        ONE / ZERO


def test_parse():
    f = parse("1 - 2*t^(1/2) + 3/4*t^2")
    assert f.terms == ((0, 1), (Fraction(1, 2), -2), (2, Fraction(3, 4)))
    assert parse(str(f)) == f
    assert parse("t") == t and parse("-t^3") == -(t**3)
    with pytest.raises(ValueError):
        parse("1 2")


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == ZERO


@given(polys, polys)
def test_deg_is_a_valuation(f, g):
    df, dg = f.deg(), g.deg()
    prod = f * g
    assert prod.deg() == (INF if INF in (df, dg) else df + dg)
    s = (f + g).deg()
    assert s >= min(df, dg)
    if df != dg:
        assert s == min(df, dg)


@given(polys.filter(lambda f: f.terms))
def test_inverse(f):
    g = f.inv(precision=4)
    prod = f * g
    # 1 + O(t^order): every surviving term below the truncation is the constant
    assert prod.terms == ((0, 1),)
    assert prod.order is None or prod.order > 0
