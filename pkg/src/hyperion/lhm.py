"""Logarithmic hypermonomials ``prod l[g]^e`` with ordinal-interval exponent maps.

A :class:`Monomial` stores its exponent function as sorted, disjoint
half-open pieces ``[lo, hi) -> value``.  ``l[g]`` is the single piece
``[g, g+1) -> 1``; ``dagger(g)`` is ``[0, g+1) -> -1``, so transfinite
supports stay finite data.
"""

from fractions import Fraction
from functools import cmp_to_key

from ._scan import Scanner, format_fraction
from .errors import InfiniteSupport, UnitMonomial
from .order import Order
from .ordinal import ONE, ZERO, Ordinal, add, difference, format_ordinal, parse_ordinal_at

__all__ = [
    "Monomial", "UNIT", "ell", "dagger", "mul", "shift_below", "inv", "power", "cmp", "min_support",
    "exponent_at", "is_finite_support", "support_points", "log_monomial",
    "parse_monomial", "format_monomial", "monomial_key",
]


def _canonical(pieces):
    out = []
    pieces = list(pieces)
    if any(pieces[i][0] > pieces[i + 1][0] for i in range(len(pieces) - 1)):
        pieces.sort(key=lambda p: p[0])
    for lo, hi, v in pieces:
        if v == 0 or lo >= hi:
            continue
        if out and out[-1][1] == lo and out[-1][2] == v:
            out[-1] = (out[-1][0], hi, v)
        else:
            out.append((lo, hi, v))
    return tuple(out)


class Monomial:
    __slots__ = ("pieces", "_hash")

    def __init__(self, pieces=()):
        self.pieces = _canonical((Ordinal.of(lo), Ordinal.of(hi), Fraction(v)) for lo, hi, v in pieces)
        self._hash = None

    @classmethod
    def _typed(cls, pieces):
        # pieces already hold Ordinal bounds and Fraction values
        m = cls.__new__(cls)
        m.pieces = _canonical(pieces)
        m._hash = None
        return m

    def is_unit(self):
        return not self.pieces

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.pieces)
        return self._hash

    def __mul__(self, other):
        return mul(self, other)

    def __truediv__(self, other):
        return mul(self, inv(other))

    def __pow__(self, q):
        return power(self, q)

    def __lt__(self, other):
        return cmp(self, other) is Order.LESS

    def __gt__(self, other):
        return cmp(self, other) is Order.GREATER

    def __le__(self, other):
        return cmp(self, other) is not Order.GREATER

    def __ge__(self, other):
        return cmp(self, other) is not Order.LESS

    def __str__(self):
        return format_monomial(self)

    def __repr__(self):
        return f"Monomial({format_monomial(self)!r})"


UNIT = Monomial()


def ell(gamma):
    gamma = Ordinal.of(gamma)
    return Monomial([(gamma, add(gamma, ONE), 1)])


def dagger(gamma):
    """``prod_{i <= gamma} l[i]^-1``."""
    return Monomial([(ZERO, add(Ordinal.of(gamma), ONE), -1)])


_NIL = Fraction(0)


def _values_on(pieces, cuts):
    out, j, n = [], 0, len(pieces)
    for c in cuts:
        while j < n and pieces[j][1] <= c:
            j += 1
        out.append(pieces[j][2] if j < n and pieces[j][0] <= c else _NIL)
    return out


def _overlay(a, b):
    """``(lo, hi, exponent in a, exponent in b)`` over the common refinement of both piece lists."""
    ps = a.pieces + b.pieces
    cuts = sorted({p[0] for p in ps} | {p[1] for p in ps})
    starts = cuts[:-1]
    return list(zip(starts, cuts[1:], _values_on(a.pieces, starts), _values_on(b.pieces, starts)))


def mul(a, b):
    if a.is_unit():
        return b
    if b.is_unit():
        return a
    return Monomial._typed([(lo, hi, x + y) for lo, hi, x, y in _overlay(a, b)])


def shift_below(a, bound, delta):
    """``a`` times ``prod_{i < bound} l[i]^delta``; ``dagger(g) * a`` is ``shift_below(a, g+1, -1)``."""
    delta = Fraction(delta)
    out, cursor = [], ZERO
    for lo, hi, v in a.pieces:
        if cursor < lo and cursor < bound:
            out.append((cursor, min(lo, bound), delta))
        if hi <= bound:
            out.append((lo, hi, v + delta))
        elif lo < bound:
            out.append((lo, bound, v + delta))
            out.append((bound, hi, v))
        else:
            out.append((lo, hi, v))
        cursor = max(cursor, hi)
    if cursor < bound:
        out.append((cursor, bound, delta))
    return Monomial._typed(out)


def inv(a):
    return Monomial._typed([(lo, hi, -v) for lo, hi, v in a.pieces])


def power(a, q):
    q = Fraction(q)
    return Monomial((lo, hi, v * q) for lo, hi, v in a.pieces)


def _cmp(a, b):
    if a == b:
        return 0
    # the first position where the exponents differ decides
    for lo, _, x, y in _overlay(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0  # pragma: no cover


def cmp(a, b):
    """``a ≻ b`` iff ``a/b ≻ 1``, i.e. the first nonzero exponent of ``a/b`` is positive."""
    return Order.of(_cmp(a, b))


monomial_key = cmp_to_key(_cmp)


def min_support(a):
    if a.is_unit():
        raise UnitMonomial("the unit monomial has empty support")
    return a.pieces[0][0]


def exponent_at(a, gamma):
    gamma = Ordinal.of(gamma)
    for lo, hi, v in a.pieces:
        if lo <= gamma < hi:
            return v
        if gamma < lo:
            break
    return Fraction(0)


def is_finite_support(a):
    return all(difference(lo, hi).is_finite() for lo, hi, _ in a.pieces)


def support_points(a):
    """``(gamma, exponent)`` pairs of a finite-support monomial, ascending."""
    if not is_finite_support(a):
        raise InfiniteSupport(f"{a} has an interval of transfinite width")
    out = []
    for lo, hi, v in a.pieces:
        for i in range(int(difference(lo, hi))):
            out.append((add(lo, i), v))
    return out


def log_monomial(a):
    """``log prod l[g]^e = sum e * l[g+1]`` as a series."""
    from .series import Series

    return Series({ell(add(g, ONE)): e for g, e in support_points(a)})


# -- text form -------------------------------------------------------------


def _format_exp(q):
    if q == 1:
        return ""
    if q.denominator == 1:
        return f"^{q.numerator}"
    return f"^({format_fraction(q)})"


def format_monomial(a):
    if a.is_unit():
        return "1"
    parts = []
    for lo, hi, v in a.pieces:
        width = difference(lo, hi)
        if width.is_finite():
            for i in range(int(width)):
                parts.append(f"l[{format_ordinal(add(lo, i))}]{_format_exp(v)}")
        else:
            parts.append(f"L[{format_ordinal(lo)},{format_ordinal(hi)}){_format_exp(v)}")
    return "*".join(parts)


def _parse_exp(sc):
    if not sc.accept("^"):
        return Fraction(1)
    return sc.rational()


def parse_factor_at(sc):
    """One ``l[g]^q`` or ``L[lo,hi)^q`` factor."""
    if sc.accept("l["):
        g = parse_ordinal_at(sc)
        sc.expect("]")
        return power(ell(g), _parse_exp(sc))
    if sc.accept("L["):
        lo = parse_ordinal_at(sc)
        sc.expect(",")
        hi = parse_ordinal_at(sc)
        sc.expect(")")
        if not lo < hi:
            sc.fail("empty interval")
        return Monomial([(lo, hi, _parse_exp(sc))])
    sc.fail("expected 'l[' or 'L['")


def parse_monomial_at(sc):
    if sc.peek() == "1" and not sc.text[sc.pos + 1:sc.pos + 2].isdigit():
        sc.expect("1")
        return UNIT
    m = parse_factor_at(sc)
    while sc.peek() == "*":
        save = sc.pos
        sc.expect("*")
        if sc.peek() not in ("l", "L"):
            sc.pos = save
            break
        m = mul(m, parse_factor_at(sc))
    return m


def parse_monomial(text):
    sc = Scanner(text)
    m = parse_monomial_at(sc)
    sc.finish()
    return m
