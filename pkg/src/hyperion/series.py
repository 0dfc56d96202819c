"""Finite-support series over the hypermonomial group.

Terms iterate in descending monomial order, dominant term first.
"""

import re
from fractions import Fraction

from ._scan import Scanner, format_fraction
from .errors import ZeroSeries
from .lhm import UNIT, Monomial, format_monomial, inv, monomial_key, mul as mono_mul, parse_factor_at
from .order import Order

__all__ = [
    "Series", "ZERO_SERIES", "constant", "of_monomial", "dominant_monomial",
    "leading_coefficient", "sign", "cmp_order", "prec", "preceq", "asymp_eq",
    "truncate_above", "is_truncation", "decompose", "is_purely_large",
    "is_infinitesimal", "is_positive_infinite", "inverse_monomial",
    "parse_series", "format_series", "series_to_json",
]

_RATIONAL_PAREN = re.compile(r"-?\d+(?:/\d+)?\s*\)")


class Series:
    __slots__ = ("_terms", "_order")

    def __init__(self, terms=None):
        clean = {}
        for m, c in (terms or {}).items():
            if type(c) is not Fraction:
                c = Fraction(c)
            if c:
                clean[m] = c
        self._terms = clean
        self._order = None

    @property
    def terms(self):
        """``(monomial, coefficient)`` pairs, dominant first."""
        if self._order is None:
            self._order = tuple(sorted(self._terms.items(), key=lambda t: monomial_key(t[0]), reverse=True))
        return self._order

    def coefficient(self, m):
        return self._terms.get(m, Fraction(0))

    def support(self):
        return [m for m, _ in self.terms]

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = constant(other)
        if not isinstance(other, Series):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Series(out)

    __radd__ = __add__

    def __neg__(self):
        return Series({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Series(out)

    __rmul__ = __mul__

    def scale(self, r):
        return Series({m: c * Fraction(r) for m, c in self._terms.items()})

    def __str__(self):
        return format_series(self)

    def __repr__(self):
        return f"Series({format_series(self)!r})"


ZERO_SERIES = Series()


def _coerce(x):
    if isinstance(x, Series):
        return x
    if isinstance(x, Monomial):
        return of_monomial(x)
    return constant(x)


def constant(r):
    return Series({UNIT: r})


def of_monomial(m, c=1):
    return Series({m: c})


def dominant_monomial(f):
    if f.is_zero():
        raise ZeroSeries("0 has no dominant monomial")
    return f.terms[0][0]


def leading_coefficient(f):
    if f.is_zero():
        raise ZeroSeries("0 has no leading coefficient")
    return f.terms[0][1]


def sign(f):
    return 0 if f.is_zero() else (1 if leading_coefficient(f) > 0 else -1)


def cmp_order(f, g):
    """Ordered-field comparison: sign of the leading coefficient of ``f - g``."""
    return Order.of(sign(_coerce(f) - _coerce(g)))


def _dom_cmp(f, g):
    # -1, 0, 1 comparing dominant monomials, with 0 below everything
    if f.is_zero() or g.is_zero():
        return (not f.is_zero()) - (not g.is_zero())
    a, b = monomial_key(dominant_monomial(f)), monomial_key(dominant_monomial(g))
    return (a > b) - (a < b)


def prec(f, g):
    """``f ≺ g``."""
    return _dom_cmp(f, g) < 0


def preceq(f, g):
    """``f ≼ g``."""
    return _dom_cmp(f, g) <= 0


def asymp_eq(f, g):
    """``f ≍ g``."""
    return _dom_cmp(f, g) == 0


def truncate_above(f, m):
    """``f_{≻m}``: the terms whose monomial is strictly above ``m``."""
    k = monomial_key(m)
    return Series({n: c for n, c in f.terms if monomial_key(n) > k})


def is_truncation(g, f):
    """``g ⊴ f``: every monomial of ``g`` lies above every monomial of ``f - g``."""
    rest = f - g
    if g.is_zero() or rest.is_zero():
        return True
    lowest = monomial_key(g.terms[-1][0])
    return lowest > monomial_key(rest.terms[0][0]) and all(
        f.coefficient(m) == c for m, c in g.terms
    )


def decompose(f):
    """Split ``f`` into ``(purely large, constant, infinitesimal)`` parts."""
    one = monomial_key(UNIT)
    large = {m: c for m, c in f.terms if monomial_key(m) > one}
    small = {m: c for m, c in f.terms if monomial_key(m) < one}
    return Series(large), f.coefficient(UNIT), Series(small)


def is_purely_large(f):
    return decompose(f)[0] == f


def is_infinitesimal(f):
    return decompose(f)[2] == f


def is_positive_infinite(f):
    """``f > R``: dominant monomial infinite with a positive coefficient."""
    return not f.is_zero() and monomial_key(dominant_monomial(f)) > monomial_key(UNIT) and leading_coefficient(f) > 0


def inverse_monomial(f):
    """``1/(c m) = (1/c) m^-1`` for a single-term series."""
    if len(f) != 1:
        raise ValueError(f"{f} is not a single term")
    m, c = f.terms[0]
    return Series({inv(m): 1 / c})


# -- text form -------------------------------------------------------------


def _format_term(m, c):
    mag = abs(c)
    if m.is_unit():
        return format_fraction(mag)
    if mag == 1:
        return format_monomial(m)
    return f"{format_fraction(mag)}*{format_monomial(m)}"


def format_series(f):
    if f.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(f.terms):
        body = _format_term(m, c)
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)


def series_to_json(f):
    return [{"monomial": format_monomial(m), "coefficient": format_fraction(c)} for m, c in f.terms]


def _parse_factor(sc):
    if sc.peek() in ("l", "L"):
        return of_monomial(parse_factor_at(sc))
    save = sc.pos
    if sc.accept("("):
        if sc.match(_RATIONAL_PAREN) is None:
            f = parse_series_at(sc)
            sc.expect(")")
            if sc.accept("^"):
                n = sc.integer()
                out = constant(1)
                for _ in range(n):
                    out = out * f
                return out
            return f
        sc.pos = save
    return constant(sc.rational(signed=False))


def _parse_product(sc):
    f = _parse_factor(sc)
    while sc.accept("*"):
        f = f * _parse_factor(sc)
    return f


def parse_series_at(sc):
    """``expr := [-] product (('+' | '-') product)*`` with ``*`` products."""
    negative = sc.accept("-")
    total = _parse_product(sc)
    if negative:
        total = -total
    while True:
        if sc.accept("+"):
            total = total + _parse_product(sc)
        elif sc.accept("-"):
            total = total - _parse_product(sc)
        else:
            return total


def parse_series(text):
    sc = Scanner(text)
    f = parse_series_at(sc)
    sc.finish()
    return f
