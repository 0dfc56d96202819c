import itertools
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings

from hyperion.conway import (
    RationalInterval, add_dyadic, add_ordinal, gonshor_exp_cut, mul_dyadic, negate, taylor_bracket, thinned_add,
)
from hyperion.errors import DegenerateCut
from hyperion.ordinal import parse_ordinal
from hyperion.signseq import EMPTY, SignSeq, from_dyadic, parse_signseq, to_dyadic
from tests.strategies import finite_signs

D = from_dyadic
Q = Fraction


def _mp(q):
    return mpmath.mpf(q.numerator) / q.denominator


def test_add_examples():
    assert add_dyadic(D(Q(1, 2)), D(Q(1, 2))) == D(1)
    assert add_dyadic(EMPTY, D(Q(-5, 8))) == D(Q(-5, 8))
    assert add_dyadic(D(1), D(1)) == D(2)


def test_negate_examples():
    assert negate(parse_signseq("(+)")) == parse_signseq("(-)")
    assert negate(EMPTY) == EMPTY
    assert negate(parse_signseq("(+ -)")) == parse_signseq("(- +)")


def test_mul_examples():
    assert mul_dyadic(D(Q(1, 2)), D(2)) == D(1)
    assert mul_dyadic(EMPTY, D(Q(3, 4))) == EMPTY
    assert mul_dyadic(D(-1), D(Q(3, 4))) == negate(D(Q(3, 4)))


def test_add_ordinal():
    P = parse_ordinal
    assert add_ordinal(P("w"), P("1")) == P("w+1")
    assert add_ordinal(P("w+1"), P("w")) == P("w*2+1")
    assert add_ordinal(P("2"), P("3")) == P("5")


def test_taylor_bracket():
    assert taylor_bracket(0, 7) == 1
    assert taylor_bracket(1, 2) == Q(5, 2)
    assert taylor_bracket(2, 1) == 3


SMALL = [SignSeq.from_signs(s) for n in range(5) for s in itertools.product((1, -1), repeat=n)]


def test_ring_laws_on_grid():
    for a in SMALL[::3]:
        for b in SMALL[::2]:
            for c in SMALL[::5]:
                assert mul_dyadic(a, add_dyadic(b, c)) == add_dyadic(mul_dyadic(a, b), mul_dyadic(a, c))


@settings(max_examples=200)
@given(finite_signs, finite_signs)
def test_matches_rational_arithmetic(a, b):
    assert to_dyadic(add_dyadic(a, b)) == to_dyadic(a) + to_dyadic(b)
    assert to_dyadic(mul_dyadic(a, b)) == to_dyadic(a) * to_dyadic(b)
    assert negate(negate(a)) == a


def _value(opt):
    return to_dyadic(SignSeq.from_signs(opt))


@pytest.mark.parametrize("policy", ["extreme", "random"])
def test_uniformity_under_option_thinning(policy):
    rng = random.Random(11)

    def keep(opts, side):
        if not opts:
            return opts
        best = max(opts, key=_value) if side == "L" else min(opts, key=_value)
        if policy == "extreme":
            return [best]
        return [o for o in opts if o == best or rng.random() < 0.5]

    for _ in range(300):
        a = D(Q(rng.randint(-40, 40), 2 ** rng.randint(0, 3)))
        b = D(Q(rng.randint(-40, 40), 2 ** rng.randint(0, 3)))
        assert thinned_add(a, b, keep) == add_dyadic(a, b)


def test_gonshor_zero_sentinel():
    cut = gonshor_exp_cut(EMPTY, 4)
    assert cut == RationalInterval(Q(0), None)
    assert 1 in cut and cut.width is None


def test_gonshor_e():
    cut = gonshor_exp_cut(D(1), 5)
    assert _mp(cut.lo) < mpmath.e < _mp(cut.hi)
    assert cut.width < Q(1, 10)


def test_gonshor_inverse_e():
    with mpmath.workdps(50):
        cut = gonshor_exp_cut(D(-1), 8)
        assert _mp(cut.lo) < mpmath.exp(-1) < _mp(cut.hi)


def test_gonshor_nested():
    for k in (-7, -3, 1, 5, 11):
        cuts = [gonshor_exp_cut(D(Q(k, 4)), d) for d in range(1, 9)]
        for outer, inner in zip(cuts, cuts[1:]):
            assert inner.lo >= outer.lo
            assert outer.hi is None or (inner.hi is not None and inner.hi <= outer.hi)


def test_gonshor_depth_must_be_positive():
    with pytest.raises(DegenerateCut):
        gonshor_exp_cut(D(1), 0)
