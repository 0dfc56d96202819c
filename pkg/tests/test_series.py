from fractions import Fraction

import pytest
from hypothesis import given, settings

from hyperion.errors import ParseError, ZeroSeries
from hyperion.lhm import UNIT, ell, inv, monomial_key
from hyperion.order import Order
from hyperion.ordinal import OMEGA
from hyperion.series import (
    Series, asymp_eq, cmp_order, constant, decompose, dominant_monomial, format_series, is_infinitesimal,
    is_positive_infinite, is_purely_large, is_truncation, of_monomial, parse_series, prec, preceq, series_to_json,
    truncate_above,
)
from tests.strategies import series

S = parse_series
l0, l1, l2 = (of_monomial(ell(i)) for i in range(3))


def test_ring_examples():
    assert (l0 + 1) * (l0 - 1) == l0 * l0 - 1
    assert S("(l[0] + 1)*(l[0] - 1)") == S("l[0]^2 - 1")
    assert l1 + 0 == l1
    assert (2 * l1) * of_monomial(inv(ell(1)), 3) == 6


def test_dominant_examples():
    assert dominant_monomial(S("3*l[0] - 5*l[1]")) == ell(0)
    assert dominant_monomial(constant(7)) == UNIT
    assert dominant_monomial(S("l[1]^-1 + l[2]^-1")) == inv(ell(2))
    with pytest.raises(ZeroSeries):
        dominant_monomial(Series())


def test_order_examples():
    assert cmp_order(l0 - 1000, 0) is Order.GREATER
    f = S("l[0] - l[3]^(1/2)")
    assert cmp_order(f, f) is Order.EQUAL
    assert cmp_order(-l1 + 5, 0) is Order.LESS


def test_asymptotic_relations():
    assert prec(l1, l0)
    assert asymp_eq(3 * l0, 5 * l0)
    assert prec(Series(), S("l[2]^-1"))
    assert preceq(l1, 2 * l1) and not prec(l1, 2 * l1)


def test_truncation_examples():
    f = S("l[0] + 2 + l[1]^-1")
    assert truncate_above(f, UNIT) == l0
    assert truncate_above(f, dominant_monomial(f)) == Series()
    assert truncate_above(Series(), ell(3)) == Series()
    assert is_truncation(l0, l0 + l1)
    assert is_truncation(Series(), f)
    assert not is_truncation(l1, l0 + l1)


def test_decompose_examples():
    assert decompose(S("l[0] + 2 + l[1]^-1")) == (l0, 2, S("l[1]^-1"))
    assert decompose(constant(7)) == (Series(), 7, Series())
    assert is_positive_infinite(of_monomial(ell(OMEGA)) - 3)
    assert is_purely_large(l0 - l2) and is_infinitesimal(S("l[0]^-1"))


def test_text_form():
    assert format_series(S("3*l[0] - 5*l[1]")) == "3*l[0] - 5*l[1]"
    assert format_series(S("5 - l[1]")) == "-l[1] + 5"
    assert format_series(S("2*(l[0] + 1/2)")) == "2*l[0] + 1"
    assert format_series(Series()) == "0"
    assert series_to_json(S("l[0] - 1/2")) == [
        {"monomial": "l[0]", "coefficient": "1"}, {"monomial": "1", "coefficient": "-1/2"},
    ]
    for bad in ["", "l[0] +", "3*", "(l[0]", "l[0]]"]:
        with pytest.raises(ParseError):
            S(bad)


@settings(max_examples=300)
@given(series(), series(), series())
def test_ordered_field_laws(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f and f * g == g * f
    if cmp_order(f, g) is Order.LESS:
        assert cmp_order(f + h, g + h) is Order.LESS
        if cmp_order(h, 0) is Order.GREATER:
            assert cmp_order(f * h, g * h) is Order.LESS


@settings(max_examples=300)
@given(series(), series(), series())
def test_dominance_relations(f, g, h):
    if prec(f, g) and prec(g, h):
        assert prec(f, h)
    if not (f.is_zero() or g.is_zero()):
        assert prec(f, g) != preceq(g, f)
        assert asymp_eq(f, g) == asymp_eq(g, f)


@given(series())
def test_decompose_recomposes(f):
    large, c, small = decompose(f)
    one = monomial_key(UNIT)
    assert all(monomial_key(m) > one for m in large.support())
    assert all(monomial_key(m) < one for m in small.support())
    assert large + c + small == f


@given(series(), series())
def test_truncation_matches_cuts(g, f):
    cuts = [truncate_above(f, m) for m in f.support()] + [f]
    assert is_truncation(g, f) == (g in cuts or g.is_zero())


@given(series())
def test_round_trip(f):
    assert S(format_series(f)) == f
    assert S(format_series(f - Fraction(1, 3))) == f - Fraction(1, 3)
