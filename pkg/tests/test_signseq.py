import itertools
from fractions import Fraction

import pytest
from hypothesis import given

from hyperion.errors import EmptyCut, NotFinite, ParseError
from hyperion.order import Order
from hyperion.ordinal import OMEGA, parse_ordinal
from hyperion.signseq import (
    EMPTY, SignSeq, bracket, cmp_num, common_ancestor, format_signseq, from_dyadic,
    is_simpler, options, ordinal_embed, parse_signseq, to_dyadic,
)
from tests.strategies import finite_signs

S = parse_signseq
D = from_dyadic

ALL_8 = [SignSeq.from_signs(s) for n in range(9) for s in itertools.product((1, -1), repeat=n)]


def test_cmp_examples():
    assert cmp_num(S("(+)"), EMPTY) is Order.GREATER
    assert cmp_num(S("(+ -)"), S("(+)")) is Order.LESS
    assert cmp_num(S("(+^w)"), S("(+^3)")) is Order.GREATER
    assert cmp_num(S("(+^w -)"), S("(+^w)")) is Order.LESS
    assert cmp_num(S("(+^w)"), S("(+^w -)")) is Order.GREATER


def test_simplicity_examples():
    assert is_simpler(EMPTY, S("(- + -)"))
    assert is_simpler(S("(+)"), S("(+^w)"))
    assert not is_simpler(S("(+ -)"), S("(+ +)"))


def test_bracket_examples():
    assert bracket() == EMPTY
    assert bracket([EMPTY]) == D(1)
    assert bracket([EMPTY], [D(1)]) == S("(+ -)")
    assert bracket([D(1), D(Fraction(1, 2))], [D(3)]) == D(2)
    assert to_dyadic(bracket([D(1)], [D(2)])) == Fraction(3, 2)
    with pytest.raises(EmptyCut):
        bracket([D(1)], [D(1)])


def test_common_ancestor_examples():
    x = D(Fraction(3, 8))
    assert common_ancestor(x, x) == x
    assert common_ancestor(EMPTY, D(1)) == EMPTY
    assert common_ancestor(D(Fraction(1, 2)), D(Fraction(3, 4))) == D(Fraction(1, 2))


def test_dyadic_examples():
    assert to_dyadic(S("(+ -)")) == Fraction(1, 2)
    assert to_dyadic(S("(+ +)")) == 2
    assert to_dyadic(S("(+ - -)")) == Fraction(1, 4)
    assert from_dyadic(Fraction(-3, 4)) == S("(- + -)")
    with pytest.raises(NotFinite):
        from_dyadic(Fraction(1, 3))
    with pytest.raises(NotFinite):
        to_dyadic(S("(+^w)"))


def test_ordinal_embed():
    assert ordinal_embed(0) == EMPTY
    assert ordinal_embed(5) == S("(+^5)")
    assert ordinal_embed(OMEGA) == S("(+^w)")


def test_text_form():
    assert format_signseq(S("(+ + + - -)")) == "(+^3 -^2)"
    assert format_signseq(S("(+^(w+1) -)")) == "(+^(w+1) -)"
    assert S("(+^(w+1) -)").length == parse_ordinal("w+2")
    for bad in ["+", "(+ x)", "(+^0)", "(+"]:
        with pytest.raises(ParseError):
            S(bad)


def test_order_matches_rationals_exhaustively():
    vals = [to_dyadic(s) for s in ALL_8]
    for a, va in zip(ALL_8[::7], vals[::7]):
        for b, vb in zip(ALL_8, vals):
            assert cmp_num(a, b) is Order.of((va > vb) - (va < vb))


def test_common_ancestor_is_simplest_in_closed_interval():
    ranked = sorted(ALL_8, key=to_dyadic)
    for i in range(0, len(ranked), 9):
        for j in range(i, len(ranked), 13):
            lo, hi = ranked[i], ranked[j]
            inside = ranked[i:j + 1]
            assert common_ancestor(lo, hi) == min(inside, key=lambda s: len(s.signs()))


@given(finite_signs)
def test_dyadic_round_trip(s):
    assert from_dyadic(to_dyadic(s)) == s
    assert S(format_signseq(s)) == s
    assert -(-s) == s


@given(finite_signs)
def test_canonical_options_bracket_back(s):
    left, right = options(s)
    assert bracket(left, right) == s


@given(finite_signs, finite_signs)
def test_prefix_is_simpler(a, b):
    if is_simpler(a, b) and a != b:
        assert len(a.signs()) < len(b.signs())
        assert b.signs()[: len(a.signs())] == a.signs()
