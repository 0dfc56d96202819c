"""The derivation on finite-support series: ``d m = (sum_g e_g dagger(g)) m``."""

from functools import lru_cache

from .errors import InfiniteSupportDerivative
from .lhm import is_finite_support, shift_below, support_points
from .ordinal import ONE, add
from .series import Series

__all__ = ["derive_monomial", "derive", "derive_k"]


@lru_cache(maxsize=1 << 16)
def _monomial_terms(m):
    if not is_finite_support(m):
        raise InfiniteSupportDerivative(m)
    return tuple((shift_below(m, add(g, ONE), -1), e) for g, e in support_points(m))  # dagger(g) * m


def _accumulate(out, m, c):
    for n, e in _monomial_terms(m):
        out[n] = out.get(n, 0) + c * e


def derive_monomial(m):
    out = {}
    _accumulate(out, m, 1)
    return Series(out)


def derive(f):
    out = {}
    for m, c in f._terms.items():
        if not m.is_unit():
            _accumulate(out, m, c)
    return Series(out)


def derive_k(f, k):
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    for _ in range(k):
        f = derive(f)
    return f
