"""Conway arithmetic on the dyadic and ordinal fragments, plus an exp cut check.

Sums and products of finite sign sequences are computed by Conway's
recursions over the canonical options (all proper prefixes), memoized.
Gonshor's exponential is not represented; :func:`gonshor_exp_cut` evaluates
the option sets of its recursion at finite depth and returns the rational
interval they pin down.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegenerateCut, NotFinite
from .ordinal import nat_sum
from .signseq import SignSeq, to_dyadic

__all__ = [
    "add_dyadic", "negate", "mul_dyadic", "add_ordinal", "taylor_bracket",
    "gonshor_exp_cut", "RationalInterval", "clear_caches",
]

# Internally a finite sign sequence is a tuple of +1/-1.


def _key(a):
    # Appending 0 makes native tuple order agree with - < (absent) < +.
    return a + (0,)


def _cmp(a, b):
    ka, kb = a + (0,), b + (0,)
    return (ka > kb) - (ka < kb)


def _above(lo):
    # simplest sequence strictly greater than lo
    if not lo:
        return (1,)
    if lo[0] < 0:
        return ()
    k = next((i for i, s in enumerate(lo) if s < 0), len(lo))
    return (1,) * (k + 1) if k == len(lo) else (1,) * k


def _below_in(c, sign, r):
    # simplest extension of c + (sign,) on the near side of c + (sign,) + r
    j = next((i for i, s in enumerate(r) if s != -sign), len(r))
    return c + (sign,) + (-sign,) * (j + 1 if j == len(r) else j)


def _simplest(lo, hi):
    if lo is None and hi is None:
        return ()
    if hi is None:
        return _above(lo)
    if lo is None:
        return _neg(_above(_neg(hi)))
    n = 0
    for a, b in zip(lo, hi):
        if a != b:
            break
        n += 1
    c = lo[:n]
    if n == len(lo):
        return _below_in(c, 1, hi[n + 1:])
    if n == len(hi):
        return _below_in(c, -1, lo[n + 1:])
    return c


def _max(xs):
    return max(xs, key=_key) if xs else None


def _min(xs):
    return min(xs, key=_key) if xs else None


def _bracket(left, right):
    lo, hi = _max(left), _min(right)
    assert lo is None or hi is None or _cmp(lo, hi) < 0, "recursion produced an empty cut"
    return _simplest(lo, hi)


@lru_cache(maxsize=None)
def _opts(x):
    left = tuple(x[:i] for i in range(len(x)) if x[i] > 0)
    right = tuple(x[:i] for i in range(len(x)) if x[i] < 0)
    return left, right


def _neg(x):
    return tuple(-s for s in x)


@lru_cache(maxsize=None)
def _add(x, y):
    if not x:
        return y
    if not y:
        return x
    xl, xr = _opts(x)
    yl, yr = _opts(y)
    left = [_add(a, y) for a in xl] + [_add(x, b) for b in yl]
    right = [_add(a, y) for a in xr] + [_add(x, b) for b in yr]
    return _bracket(left, right)


@lru_cache(maxsize=None)
def _ancestors(x):
    # the greatest left and least right canonical option: x = {l | r}
    left, right = _opts(x)
    return left[-1:], right[-1:]


@lru_cache(maxsize=None)
def _add_thin(x, y):
    # Same recursion over the cofinal option sets {max x_L | min x_R};
    # uniformity makes the result independent of this choice.
    if not x:
        return y
    if not y:
        return x
    if y < x:
        return _add_thin(y, x)
    xl, xr = _ancestors(x)
    yl, yr = _ancestors(y)
    left = [_add_thin(a, y) for a in xl] + [_add_thin(x, b) for b in yl]
    right = [_add_thin(a, y) for a in xr] + [_add_thin(x, b) for b in yr]
    return _bracket(left, right)


def _sub(x, y):
    return _add_thin(x, _neg(y))


@lru_cache(maxsize=None)
def _mul(x, y):
    if not x or not y:
        return ()
    if y < x:
        # the recursion is symmetric in its operands; share one memo entry
        return _mul(y, x)
    xl, xr = _opts(x)
    yl, yr = _opts(y)

    def option(a, b):
        # a*y + x*b - a*b
        return _sub(_add_thin(_mul(a, y), _mul(x, b)), _mul(a, b))

    left = [option(a, b) for a in xl for b in yl] + [option(a, b) for a in xr for b in yr]
    right = [option(a, b) for a in xl for b in yr] + [option(a, b) for a in xr for b in yl]
    return _bracket(left, right)


def clear_caches():
    for f in (_opts, _ancestors, _add, _add_thin, _mul):
        f.cache_clear()


def _signs(a):
    if not a.is_finite():
        raise NotFinite(f"{a} has a transfinite run")
    return a.signs()


def add_dyadic(a, b):
    """Conway sum ``{a_L + b, a + b_L | a_R + b, a + b_R}``."""
    return SignSeq.from_signs(_add(_signs(a), _signs(b)))


def mul_dyadic(a, b):
    """Conway product via the canonical-option recursion."""
    return SignSeq.from_signs(_mul(_signs(a), _signs(b)))


def negate(a):
    return -a


def add_ordinal(a, b):
    """Conway sum of two ordinals, i.e. their natural (Hessenberg) sum."""
    return nat_sum(a, b)


def thinned_add(a, b, keep):
    """Conway sum using only a sub-family of each operand's options.

    `keep(options, side)` selects which options survive; any cofinal choice
    must give the same result as :func:`add_dyadic`.
    """
    x, y = _signs(a), _signs(b)
    xl, xr = _opts(x)
    yl, yr = _opts(y)
    xl, xr = keep(xl, "L"), keep(xr, "R")
    yl, yr = keep(yl, "L"), keep(yr, "R")
    left = [_add(p, y) for p in xl] + [_add(x, q) for q in yl]
    right = [_add(p, y) for p in xr] + [_add(x, q) for q in yr]
    return SignSeq.from_signs(_bracket(left, right))


# -- exponential ------------------------------------------------------------


def taylor_bracket(a, n):
    """``[a]_n = sum_{k<=n} a^k / k!`` as an exact rational."""
    a = Fraction(a)
    total, term = Fraction(0), Fraction(1)
    for k in range(n + 1):
        if k:
            term = term * a / k
        total += term
    return total


@dataclass(frozen=True)
class RationalInterval:
    """Open interval ``(lo, hi)``; ``hi is None`` stands for +infinity."""

    lo: Fraction
    hi: Fraction | None

    def __contains__(self, x):
        return self.lo < x and (self.hi is None or x < self.hi)

    @property
    def width(self):
        return None if self.hi is None else self.hi - self.lo


@lru_cache(maxsize=None)
def _exp_cut(x, depth):
    # Bounds on the value exp(x).  exp 0 = {0 |} = 1 exactly; 0 stays an
    # implicit lower bound everywhere since exp is positive.
    if not x:
        return Fraction(1), Fraction(1)
    lo, hi = Fraction(0), None
    a = _dyadic(x)
    xl, xr = _opts(x)
    every = range(depth + 1)
    odd = range(1, depth + 1, 2)
    for p in xl:
        plo, phi = _exp_cut(p, depth)
        b = _dyadic(p)
        for k in every:
            t = taylor_bracket(a - b, k)
            lo = max(lo, plo * t)
        for k in odd:
            t = taylor_bracket(b - a, k)
            if t > 0 and phi is not None:
                cand = phi / t
                hi = cand if hi is None else min(hi, cand)
    for q in xr:
        qlo, qhi = _exp_cut(q, depth)
        c = _dyadic(q)
        for k in odd:
            t = taylor_bracket(a - c, k)
            if t > 0:
                lo = max(lo, qlo * t)
        for k in every:
            t = taylor_bracket(c - a, k)
            if qhi is not None:
                cand = qhi / t
                hi = cand if hi is None else min(hi, cand)
    return lo, hi


def _dyadic(x):
    return to_dyadic(SignSeq.from_signs(x))


def gonshor_exp_cut(a, depth):
    """Rational interval around ``exp(a)`` from Gonshor's recursion.

    Left options ``exp(a_L)[a - a_L]_k`` and ``exp(a_R)[a - a_R]_k`` (k odd),
    right options ``exp(a_R)/[a_R - a]_k`` and ``exp(a_L)/[a_L - a]_k``
    (k odd), with ``k <= depth``.  Values of ``exp`` at the simpler options
    are replaced by the bounds obtained recursively; brackets that are not
    positive are dropped.  ``hi`` is ``None`` when no right option exists
    yet: always for ``a = 0`` (returned as ``(0, None)``), and for ``a = 1``
    below depth 3.
    """
    if depth < 1:
        raise DegenerateCut("depth must be at least 1")
    x = _signs(a)
    if not x:
        return RationalInterval(Fraction(0), None)
    lo, hi = _exp_cut(x, depth)
    return RationalInterval(lo, hi)
