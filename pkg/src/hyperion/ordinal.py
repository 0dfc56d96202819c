"""Ordinals below epsilon_0 in Cantor normal form.

An :class:`Ordinal` is an immutable tuple of ``(exponent, coefficient)``
pairs with strictly decreasing exponents, e.g. ``w^2*3 + w + 5`` is
``((2, 3), (1, 1), (0, 5))`` with the exponents themselves ordinals.
"""

import os
from enum import Enum

from ._scan import Scanner
from .errors import DepthExceeded, NotOmegaPower, OrderViolation
from .order import Order

__all__ = [
    "Ordinal", "Kind", "ZERO", "ONE", "OMEGA",
    "cmp", "add", "nat_sum", "nat_prod", "omega_power", "pred_info",
    "div_omega", "difference", "parse_ordinal", "format_ordinal",
    "depth_guard", "set_depth_guard",
]

_depth_guard = int(os.environ.get("HYPERION_DEPTH_GUARD", "16"))


def depth_guard():
    return _depth_guard


def set_depth_guard(n):
    """Set the maximal exponent nesting depth accepted by the parser."""
    global _depth_guard
    if n < 1:
        raise ValueError("depth guard must be positive")
    _depth_guard = int(n)


class Ordinal:
    __slots__ = ("terms", "_hash", "_key")

    def __init__(self, terms=()):
        self.terms = tuple(terms)
        self._hash = None
        self._key = None

    @classmethod
    def of(cls, x):
        if isinstance(x, Ordinal):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            if x < 0:
                raise ValueError("ordinals are non-negative")
            return cls(((ZERO, x),)) if x else ZERO
        raise TypeError(f"cannot convert {x!r} to an ordinal")

    # -- structure -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_finite(self):
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero())

    def __int__(self):
        if not self.is_finite():
            raise OverflowError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def is_limit(self):
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def is_successor(self):
        return bool(self.terms) and self.terms[-1][0].is_zero()

    def is_omega_power(self):
        return len(self.terms) == 1 and self.terms[0][1] == 1

    def log_omega(self):
        """The exponent mu of ``w^mu``."""
        if not self.is_omega_power():
            raise NotOmegaPower(f"{self} is not a power of w")
        return self.terms[0][0]

    def last_exponent(self):
        return self.terms[-1][0] if self.terms else None

    def leading_exponent(self):
        return self.terms[0][0] if self.terms else None

    def is_multiple_of(self, alpha):
        """True iff self lies in ``alpha * On`` for ``alpha = w^eta``."""
        eta = alpha.log_omega()
        return self.is_zero() or self.terms[-1][0] >= eta

    @property
    def depth(self):
        if self.is_finite():
            return 0
        return 1 + max(e.depth for e, _ in self.terms)

    # -- ordering ------------------------------------------------------

    @property
    def key(self):
        """Nested tuple whose lexicographic order is the ordinal order (CNF terms compare highest first)."""
        if self._key is None:
            self._key = tuple((e.key, c) for e, c in self.terms)
        return self._key

    def _cmp(self, other):
        a, b = self.key, other.key
        return (a > b) - (a < b)

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.of(other) if other >= 0 else None
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __lt__(self, other):
        if not isinstance(other, Ordinal):
            other = Ordinal.of(other)
        return self.key < other.key

    def __le__(self, other):
        if not isinstance(other, Ordinal):
            other = Ordinal.of(other)
        return self.key <= other.key

    def __gt__(self, other):
        if not isinstance(other, Ordinal):
            other = Ordinal.of(other)
        return self.key > other.key

    def __ge__(self, other):
        if not isinstance(other, Ordinal):
            other = Ordinal.of(other)
        return self.key >= other.key

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(Ordinal.of(other), self)

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f"Ordinal({format_ordinal(self)!r})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


class Kind(Enum):
    ZERO = "Zero"
    SUCCESSOR = "Successor"
    LIMIT = "Limit"


def cmp(a, b):
    return Order.of(Ordinal.of(a)._cmp(Ordinal.of(b)))


def add(a, b):
    """Ordinal sum; trailing terms of `a` below the lead of `b` are absorbed."""
    a, b = Ordinal.of(a), Ordinal.of(b)
    if b.is_zero():
        return a
    lead, coeff = b.terms[0]
    kept = []
    for e, c in a.terms:
        if e > lead:
            kept.append((e, c))
        elif e == lead:
            coeff += c
            break
        else:
            break
    return Ordinal(kept + [(lead, coeff)] + list(b.terms[1:]))


def difference(a, b):
    """The unique ordinal d with ``a + d == b``; requires ``a <= b``."""
    a, b = Ordinal.of(a), Ordinal.of(b)
    if a > b:
        raise OrderViolation(f"{a} > {b}")
    for i, ((ea, ca), (eb, cb)) in enumerate(zip(a.terms, b.terms)):
        if ea != eb or ca != cb:
            if ea == eb and cb > ca:
                return Ordinal(((eb, cb - ca),) + b.terms[i + 1:])
            return Ordinal(b.terms[i:])
    return Ordinal(b.terms[len(a.terms):])


def _collect(pairs):
    acc = {}
    for e, c in pairs:
        acc[e] = acc.get(e, 0) + c
    return Ordinal(sorted(((e, c) for e, c in acc.items() if c), key=lambda t: t[0], reverse=True))


def nat_sum(a, b):
    """Hessenberg natural sum (coefficientwise on CNF)."""
    a, b = Ordinal.of(a), Ordinal.of(b)
    return _collect(a.terms + b.terms)


def nat_prod(a, b):
    """Hessenberg natural product."""
    a, b = Ordinal.of(a), Ordinal.of(b)
    return _collect((nat_sum(ea, eb), ca * cb) for ea, ca in a.terms for eb, cb in b.terms)


def omega_power(gamma):
    return Ordinal(((Ordinal.of(gamma), 1),))


def pred_info(mu):
    """Return ``(kind, mu_minus)``; ``mu_minus == mu`` for limits and zero."""
    mu = Ordinal.of(mu)
    if mu.is_zero():
        return Kind.ZERO, mu
    if mu.is_limit():
        return Kind.LIMIT, mu
    *head, (_, c) = mu.terms
    if c > 1:
        head.append((ZERO, c - 1))
    return Kind.SUCCESSOR, Ordinal(head)


def mu_minus(mu):
    return pred_info(mu)[1]


def div_omega(alpha):
    """``w^mu -> w^(mu_-)``."""
    alpha = Ordinal.of(alpha)
    return omega_power(mu_minus(alpha.log_omega()))


# -- text form -------------------------------------------------------------


def format_ordinal(a):
    a = Ordinal.of(a)
    if a.is_zero():
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero():
            parts.append(str(c))
            continue
        if e == ONE:
            base = "w"
        elif e.is_finite() or e == OMEGA:
            base = f"w^{e}"
        else:
            base = f"w^({e})"
        parts.append(base if c == 1 else f"{base}*{c}")
    return "+".join(parts)


def _parse_sum(sc, depth):
    if depth > _depth_guard:
        sc.fail(f"ordinal nesting deeper than guard {_depth_guard}")
    total = _parse_term(sc, depth)
    while sc.accept("+"):
        total = add(total, _parse_term(sc, depth))
    return total


def _parse_exponent(sc, depth):
    if sc.accept("("):
        e = _parse_sum(sc, depth + 1)
        sc.expect(")")
        return e
    if sc.accept("w") or sc.accept("ω"):
        e = OMEGA
        if sc.accept("^"):
            e = omega_power(_parse_exponent(sc, depth + 1))
        return e
    return Ordinal.of(sc.integer())


def _parse_term(sc, depth):
    if sc.accept("w") or sc.accept("ω"):
        base = omega_power(_parse_exponent(sc, depth + 1) if sc.accept("^") else ONE)
        if base.depth > _depth_guard:
            raise DepthExceeded(f"ordinal nesting deeper than guard {_depth_guard}")
        if sc.accept("*"):
            n = sc.integer()
            return Ordinal(((base.terms[0][0], n),)) if n else ZERO
        return base
    if sc.peek() == "(":
        sc.expect("(")
        inner = _parse_sum(sc, depth)
        sc.expect(")")
        return inner
    return Ordinal.of(sc.integer())


def parse_ordinal_at(sc):
    return _parse_sum(sc, 0)


def parse_ordinal_term_at(sc):
    """One summand only, so the caller may use ``+`` as its own separator."""
    return _parse_term(sc, 0)


def parse_ordinal(text):
    """Parse ``w^2*3+w+5``-style text; non-normal sums are evaluated."""
    sc = Scanner(text)
    value = parse_ordinal_at(sc)
    sc.finish()
    return value
