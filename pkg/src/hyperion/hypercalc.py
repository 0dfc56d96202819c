"""Ladder terms built from hyperlogarithms, hyperexponentials, shifts, scalings and powers.

Every constructor takes exactly one argument, so a term is a *word* of
generators applied to the variable ``x``.  Words are stored outermost
first: ``L[w](L[1](x))`` is ``(L_w, L_1)``.

Generators
    ``L``/``E``   hyperlogarithm / hyperexponential of level ``w^eta``
    ``LG``        ``L_gamma`` for an arbitrary ordinal (expanded by rule R1)
    ``T``         ``u -> u + r``
    ``H``         ``u -> r*u``  (``r > 0``)
    ``P``         ``u -> u^r``  (``r > 0``)

``L_gamma`` for ``gamma = w^a1*n1 + ... + w^ap*np`` is the composite whose
*innermost* block is the highest level, so ``l[w+1] = L_1(L_w(x))``.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import mpmath

from ._scan import Scanner, format_fraction
from .errors import DepthExceeded, DomainError, NotAtomic, NotLogarithmic, NotOmegaPower, TransfiniteLevel
from .lhm import ell
from .order import Order
from .ordinal import ONE, ZERO, Kind, Ordinal, add, format_ordinal, omega_power, parse_ordinal_at, pred_info
from .series import cmp_order, constant, of_monomial

__all__ = [
    "Gen", "Term", "X", "RuleSet", "DEFAULT_RULES", "L", "E", "LG", "T", "H", "P",
    "apply_l", "apply_e", "apply_lgamma", "add_const", "scale", "power",
    "l_chain", "e_chain", "normalize", "normalize_random", "rewrite_steps",
    "to_series", "is_atomic", "atomic_by_enumeration", "hyperlog_of_atomic",
    "cmp_terms", "numeric_check", "numeric_sign", "ladder_chains", "ChainReport",
    "parse_term", "format_term",
]


class Gen(NamedTuple):
    kind: str
    arg: object

    def __str__(self):
        if self.kind in ("L", "E", "LG"):
            return f"{self.kind}[{format_ordinal(self.arg)}]"
        return f"{self.kind}{format_fraction(self.arg)}"


def L(level):
    level = Ordinal.of(level)
    level.log_omega()
    return Gen("L", level)


def E(level):
    level = Ordinal.of(level)
    level.log_omega()
    return Gen("E", level)


def LG(gamma):
    return Gen("LG", Ordinal.of(gamma))


def T(r):
    return Gen("T", Fraction(r))


def H(r):
    r = Fraction(r)
    if r <= 0:
        raise ValueError("scale factor must be positive")
    return Gen("H", r)


def P(r):
    r = Fraction(r)
    if r <= 0:
        raise ValueError("power must be positive")
    return Gen("P", r)


@dataclass(frozen=True)
class Term:
    """Generators outermost first, applied to ``x``."""

    word: tuple = ()

    def __str__(self):
        return format_term(self)

    def then(self, gen):
        """Apply one more generator on the outside."""
        return Term((gen,) + self.word)


X = Term()


def apply_l(level, t=X):
    return t.then(L(level))


def apply_e(level, t=X):
    return t.then(E(level))


def apply_lgamma(gamma, t=X):
    return t.then(LG(gamma))


def add_const(t, r):
    return t.then(T(r))


def scale(t, r):
    return t.then(H(r))


def power(t, r):
    return t.then(P(r))


def l_chain(gamma):
    """Word for ``L_gamma``: lowest CNF block outermost."""
    gamma = Ordinal.of(gamma)
    word = []
    for e, n in reversed(gamma.terms):
        word.extend([L(omega_power(e))] * n)
    return tuple(word)


def e_chain(gamma):
    """Word for ``E_gamma``, the inverse of :func:`l_chain`."""
    gamma = Ordinal.of(gamma)
    word = []
    for e, n in gamma.terms:
        word.extend([E(omega_power(e))] * n)
    return tuple(word)


# -- rewriting ----------------------------------------------------------------


@dataclass(frozen=True)
class RuleSet:
    """Rewrite rule parameters; ``fe_shift`` is the constant in R2."""

    fe_shift: Fraction = Fraction(-1)
    max_steps: int = 20000


DEFAULT_RULES = RuleSet()


def _successor_below(level):
    """``w^(mu_-)`` when ``level = w^mu`` with successor ``mu``, else None."""
    kind, mm = pred_info(level.log_omega())
    return omega_power(mm) if kind is Kind.SUCCESSOR else None


def _is_int(r):
    return r.denominator == 1


def _redexes_at(w, i, rules):
    """All ``(name, consumed, replacement)`` rewrites whose pattern starts at ``i``.

    Rules, with ``b = w^mu`` for successor ``mu`` and ``b/w = w^(mu_-)``:

    R1      ``LG_gamma -> l_chain(gamma)``            removes an LG node
    R5      merge ``T T``, ``H H``, ``P P``; drop units; ``H_s T_r -> T_sr H_s``
    R4      ``L_b E_b``, ``E_b L_b`` cancel             shrinks the word
    R2      ``L_b L_{b/w} -> T_c L_b``, ``c = fe_shift``  one hyperlog fewer
    R2'     ``L_b E_{b/w} -> T_-c L_b``
    R2b     ``L_b T_k L_{b/w} -> T_c L_b G^|k|``, ``G`` one level lower
    R2c     ``L_b G^n E_{b/w} -> T_-c L_b T_+-n``
    R3      ``E_b T_r -> G^|n| E_b T_(r-n)``, ``n = floor r``

    R1, R2, R2', R2c, R4 and R5 lower ``(LG count, multiset of L/E levels,
    word length)`` lexicographically, and R2b trades one generator of level
    ``b/w`` for lower ones.  R3 adds lower-level generators while
    removing an integer shift from under ``E_b``; no single measure covering it
    is proved here, so ``RuleSet.max_steps`` bounds every run.
    """
    g = w[i]
    h = w[i + 1] if i + 1 < len(w) else None
    k = w[i + 2] if i + 2 < len(w) else None
    out = []
    if g.kind == "LG":
        out.append(("R1", 1, l_chain(g.arg)))
    if (g.kind == "T" and g.arg == 0) or (g.kind in ("H", "P") and g.arg == 1):
        out.append(("R5-unit", 1, ()))
    if h is None:
        return out
    if g.kind == h.kind == "T":
        out.append(("R5-T", 2, (T(g.arg + h.arg),)))
    if g.kind == h.kind == "H":
        out.append(("R5-H", 2, (H(g.arg * h.arg),)))
    if g.kind == h.kind == "P":
        out.append(("R5-P", 2, (P(g.arg * h.arg),)))
    if g.kind == "H" and h.kind == "T":
        out.append(("R5-HT", 2, (T(g.arg * h.arg), g)))
    if {g.kind, h.kind} == {"L", "E"} and g.arg == h.arg:
        out.append(("R4", 2, ()))
    if g.kind == "L":
        below = _successor_below(g.arg)
        if below is not None:
            if h.kind == "L" and h.arg == below:
                out.append(("R2", 2, (T(rules.fe_shift), g)))
            if h.kind == "E" and h.arg == below:
                out.append(("R2'", 2, (T(-rules.fe_shift), g)))
            lower = _successor_below(below)
            if lower is not None:
                out.extend(_hidden_prefix(w, i, below, lower, rules))
    if g.kind == "E" and h.kind == "T" and (k is None or k.kind != "T"):
        below = _successor_below(g.arg)
        r = h.arg
        if below is not None and not (0 <= r < 1):
            n = math.floor(r)
            frac = r - n
            step = E(below) if n > 0 else L(below)
            out.append(("R3", 2, (step,) * abs(n) + (g,) + ((T(frac),) if frac else ())))
    return out


def _hidden_prefix(w, i, below, lower, rules):
    """R2 applied through a disguised ``L_below`` / ``E_below`` right under ``w[i]``.

    ``T_k L_below = L_below E_lower^k`` (R2b) and ``E_lower^n E_below =
    E_below T_n`` (R2c, likewise with ``L_lower``) are the forms in which the
    integer parts pushed outward at level ``below`` hide its generators.
    """
    g, h = w[i], w[i + 1]
    k = w[i + 2] if i + 2 < len(w) else None
    after = w[i + 3] if i + 3 < len(w) else None
    if (h.kind == "T" and _is_int(h.arg) and h.arg != 0 and k == L(below)
            and after != E(below)):
        n = int(h.arg)
        step = E(lower) if n > 0 else L(lower)
        return [("R2b", 3, (T(rules.fe_shift), g) + (step,) * abs(n))]
    if h in (E(lower), L(lower)):
        j = i + 1
        while j < len(w) and w[j] == h:
            j += 1
        if j < len(w) and w[j] == E(below):
            n = j - i - 1
            return [("R2c", j - i + 1, (T(-rules.fe_shift), g, T(n if h.kind == "E" else -n)))]
    return []


def _all_redexes(w, rules):
    return [(i, r) for i in range(len(w)) for r in _redexes_at(w, i, rules)]


def _apply(w, i, redex):
    _, consumed, repl = redex
    return w[:i] + repl + w[i + consumed:]


@lru_cache(maxsize=4096)
def _normalize_word(w, rules):
    steps = 0
    while True:
        for i in range(len(w) - 1, -1, -1):
            found = _redexes_at(w, i, rules)
            if found:
                w = _apply(w, i, found[0])
                break
        else:
            return w
        steps += 1
        if steps > rules.max_steps:
            raise DepthExceeded(f"normalization exceeded {rules.max_steps} steps")


def normalize(t, rules=DEFAULT_RULES):
    """Innermost-first normal form."""
    return Term(_normalize_word(t.word, rules))


def normalize_random(t, rng, rules=DEFAULT_RULES):
    """Normal form reached by picking a random redex (position and rule) at each step."""
    w = t.word
    for _ in range(rules.max_steps):
        choices = _all_redexes(w, rules)
        if not choices:
            return Term(w)
        i, redex = rng.choice(choices)
        w = _apply(w, i, redex)
    raise DepthExceeded(f"normalization exceeded {rules.max_steps} steps")


def rewrite_steps(t, rules=DEFAULT_RULES):
    """Trace of ``(rule name, term)`` pairs of the innermost-first strategy."""
    w, trace = t.word, []
    while True:
        for i in range(len(w) - 1, -1, -1):
            found = _redexes_at(w, i, rules)
            if found:
                w = _apply(w, i, found[0])
                trace.append((found[0][0], Term(w)))
                break
        else:
            return trace
        if len(trace) > rules.max_steps:
            raise DepthExceeded(f"normalization exceeded {rules.max_steps} steps")


# -- into the series field ----------------------------------------------------


def _fold(w):
    gamma, c = ZERO, Fraction(0)
    for g in reversed(w):
        if g.kind == "T":
            c += g.arg
        elif g.kind == "L" and c == 0:
            eta = g.arg.log_omega()
            if not gamma.is_zero() and gamma.last_exponent() < eta:
                raise NotLogarithmic(f"L[{format_ordinal(g.arg)}] is not CNF-consistent over l[{format_ordinal(gamma)}]")
            gamma = add(gamma, g.arg)
        else:
            raise NotLogarithmic(f"{g} does not fold into a logarithmic hyperseries")
    return gamma, c


def to_series(t, rules=DEFAULT_RULES):
    """``l[gamma] + c`` for a term whose normal form is a CNF-descending L word plus a shift."""
    gamma, c = _fold(normalize(t, rules).word)
    return of_monomial(ell(gamma)) + constant(c)


def _level_mu(level):
    level = Ordinal.of(level)
    if not level.is_omega_power():
        raise NotOmegaPower(f"{level} is not a power of w")
    return level.log_omega()


def is_atomic(gamma, level):
    """Whether ``l[gamma]`` stays a monomial under every ``L_delta``, ``delta < level``.

    Criterion: ``gamma`` is a multiple of ``w^(mu_-)`` where ``level = w^mu``.
    Cross-checked against :func:`atomic_by_enumeration`.
    """
    gamma, mu = Ordinal.of(gamma), _level_mu(level)
    if mu.is_zero():
        return True
    _, mm = pred_info(mu)
    return gamma.is_zero() or gamma.last_exponent() >= mm


def _deltas_below(level, bound=2):
    mu = _level_mu(level)
    exps = [Ordinal.of(n) for n in range(bound + 2)]
    exps += [omega_power(1), add(omega_power(1), 1), omega_power(2)]
    exps = sorted({e for e in exps if e < mu})
    out = {ZERO}
    for e1 in exps:
        for n1 in range(1, bound + 1):
            out.add(Ordinal(((e1, n1),)))
            for e2 in exps:
                if e2 < e1:
                    for n2 in range(1, bound + 1):
                        out.add(Ordinal(((e1, n1), (e2, n2))))
    return sorted(out)


def atomic_by_enumeration(gamma, level, bound=2, rules=DEFAULT_RULES):
    """Brute-force atomicity: normalize ``L_delta(l[gamma])`` for sampled ``delta < level``."""
    for delta in _deltas_below(level, bound):
        t = Term(l_chain(delta) + l_chain(gamma))
        try:
            f = to_series(t, rules)
        except NotLogarithmic:
            return False
        if len(f) != 1 or f.terms[0][1] != 1 or f.terms[0][0].is_unit():
            return False
    return True


def hyperlog_of_atomic(gamma, level, rules=DEFAULT_RULES):
    """``L_level(l[gamma])`` as ``l[delta] - n``."""
    gamma, level = Ordinal.of(gamma), Ordinal.of(level)
    if not is_atomic(gamma, level):
        raise NotAtomic(f"l[{format_ordinal(gamma)}] is not atomic at level {format_ordinal(level)}")
    return to_series(Term((L(level),) + l_chain(gamma)), rules)


# -- comparison ---------------------------------------------------------------

# Lower bound on x for the pointwise certificates of finite-level terms.
POINTWISE_FROM = 100.0


def _is_finite_level(w):
    return all(g.kind not in ("L", "E") or g.arg == ONE for g in w)


def _push_bound(g, lb):
    """A lower bound for ``g(u)`` given ``u > lb`` (conservative, floats)."""
    if g.kind == "E":
        return max(0.0, 1.0 + lb)
    if g.kind == "L":
        return math.log(lb) * (1 - 1e-12) - 1e-12 if lb > 0 else -math.inf
    if g.kind == "T":
        return lb + float(g.arg) - 1e-12
    if g.kind == "H":
        return lb * float(g.arg) * (1 - 1e-12) if lb >= 0 else -math.inf
    if g.kind == "P":
        return lb ** float(g.arg) * (1 - 1e-12) if lb >= 0 else -math.inf
    raise ValueError(g)


def _word_bound(w, lb):
    for g in reversed(w):
        lb = _push_bound(g, lb)
    return lb


def _direction(g, lb):
    """+1 if ``g(u) > u`` for all ``u > lb``, -1 if ``g(u) < u``, else 0."""
    if g.kind == "E":
        return 1
    if g.kind == "L":
        return -1
    if g.kind == "T":
        return 1 if g.arg > 0 else -1
    if g.kind == "H" and lb >= 0:
        return 1 if g.arg > 1 else -1
    if g.kind == "P" and lb >= 1:
        return 1 if g.arg > 1 else -1
    return 0


def _word_direction(w, lb):
    """Common direction of all generators of ``w`` on its inputs, 0 if mixed or empty."""
    if not w:
        return 0
    seen = set()
    for g in reversed(w):
        seen.add(_direction(g, lb))
        lb = _push_bound(g, lb)
    return seen.pop() if len(seen) == 1 else 0


def _same_kind(a, b, lb):
    """Compare single generators of the same shift/scale/power kind on ``u > lb``."""
    if len(a) == len(b) == 1 and a[0].kind == b[0].kind:
        kind = a[0].kind
        if kind == "T" or (kind == "H" and lb >= 0) or (kind == "P" and lb >= 1):
            return (a[0].arg > b[0].arg) - (a[0].arg < b[0].arg)
    return 0


def _strip(a, b):
    i = 0
    while i < min(len(a), len(b)) and a[i] == b[i]:
        i += 1
    a, b = a[i:], b[i:]
    j = 0
    while j < min(len(a), len(b)) and a[len(a) - 1 - j] == b[len(b) - 1 - j]:
        j += 1
    return a[:len(a) - j], b[:len(b) - j], a[len(a) - j:]


def _inflation_verdict(a, b, lb):
    da = _word_direction(a, lb) if a else 0
    db = _word_direction(b, lb) if b else 0
    if a and da and (not b or db == -da):
        return da
    if b and db and not a:
        return -db
    return _same_kind(a, b, lb)


def _cmp_pointwise(a, b):
    a, b, suffix = _strip(a, b)
    lb = _word_bound(suffix, POINTWISE_FROM)
    return _inflation_verdict(a, b, lb)


def _split_ladder(w):
    """Match ``E_gamma H_r L_gamma``; return ``(gamma, r)`` or None."""
    i = 0
    while i < len(w) and w[i].kind == "E":
        i += 1
    if i >= len(w) or w[i].kind != "H":
        return None
    es, r, ls = w[:i], w[i].arg, w[i + 1:]
    gamma = ZERO
    for g in reversed(es):
        gamma = add(gamma, g.arg)
    if e_chain(gamma) != es or l_chain(gamma) != ls:
        return None
    return gamma, r


def _cmp_asymptotic(a, b):
    try:
        fa, fb = _fold(a), _fold(b)
        sa = of_monomial(ell(fa[0])) + constant(fa[1])
        sb = of_monomial(ell(fb[0])) + constant(fb[1])
        return {Order.LESS: -1, Order.EQUAL: 0, Order.GREATER: 1}[cmp_order(sa, sb)]
    except NotLogarithmic:
        pass
    la, lb_ = _split_ladder(a), _split_ladder(b)
    if la and lb_:
        (g, r), (h, s) = la, lb_
        if g < h and s > 1:
            return -1
        if h < g and r > 1:
            return 1
    a, b, _ = _strip(a, b)
    if a and b and all(g.kind == "E" for g in a + b):
        top_a, top_b = max(g.arg for g in a), max(g.arg for g in b)
        if top_a != top_b:
            return 1 if top_a > top_b else -1
    # positive infinite arguments: no range conditions on H and P
    return _inflation_verdict(a, b, math.inf)


def cmp_terms(a, b, rules=DEFAULT_RULES):
    """Sound partial comparison at ``x -> oo``; ``Order.UNKNOWN`` when undecided.

    Terms with only level-1 generators are compared by certificates valid
    pointwise for every ``x >= 100``, so the verdict also holds at any
    sample point there.  Terms with a transfinite level use asymptotic
    rules: series comparison, the ``E_g H_r L_g`` ladder ordering, level
    dominance between pure hyperexponential words, and inflation.
    """
    wa, wb = normalize(a, rules).word, normalize(b, rules).word
    if wa == wb:
        return Order.EQUAL
    if _is_finite_level(wa) and _is_finite_level(wb):
        c = _cmp_pointwise(wa, wb)
    else:
        c = _cmp_asymptotic(wa, wb)
    return Order.UNKNOWN if c == 0 else Order.of(c)


# -- numerics -----------------------------------------------------------------

EXP_CAP = mpmath.mpf(10) ** 9


def numeric_check(t, x0, precision=60):
    """Evaluate a level-1 term at ``x = x0`` with ``precision`` significant digits.

    An exponential whose argument exceeds ``1e9`` yields ``+inf``; a
    logarithm of such an overflowed value has no usable approximation and
    the result is ``nan``.
    """
    word = []
    for g in t.word:
        if g.kind == "LG":
            if not g.arg.is_finite():
                raise TransfiniteLevel(f"L[{format_ordinal(g.arg)}] has a transfinite level")
            word.extend([L(1)] * int(g.arg))
        elif g.kind in ("L", "E") and g.arg != ONE:
            raise TransfiniteLevel(f"{g} has a transfinite level")
        else:
            word.append(g)
    with mpmath.workdps(precision):
        if isinstance(x0, (int, Fraction, str)):
            x0 = Fraction(x0)
            v = mpmath.mpf(x0.numerator) / x0.denominator
        else:
            v = mpmath.mpf(x0)
        for g in reversed(word):
            if mpmath.isinf(v):
                if g.kind == "L":
                    return mpmath.nan
                continue
            if g.kind == "L":
                if v <= 1:
                    raise DomainError(f"log of {mpmath.nstr(v, 10)} <= 1")
                v = mpmath.log(v)
            elif g.kind == "E":
                v = mpmath.inf if v > EXP_CAP else mpmath.exp(v)
            elif g.kind == "T":
                v = v + _mp(g.arg)
            elif g.kind == "H":
                v = v * _mp(g.arg)
            else:
                if v <= 0:
                    raise DomainError(f"power of non-positive {mpmath.nstr(v, 10)}")
                v = mpmath.power(v, _mp(g.arg))
        return +v


def _mp(q):
    return mpmath.mpf(q.numerator) / q.denominator


def numeric_sign(a, b, x0, precision=60):
    """Sign of ``a(x0) - b(x0)``; None when the values cannot be separated.

    Values that agree to within the working precision, or that overflowed,
    are inconclusive rather than equal.
    """
    va, vb = numeric_check(a, x0, precision), numeric_check(b, x0, precision)
    if mpmath.isnan(va) or mpmath.isnan(vb) or mpmath.isinf(va) or mpmath.isinf(vb):
        return None
    scale = max(abs(va), abs(vb), mpmath.mpf(1))
    if abs(va - vb) <= scale * mpmath.mpf(10) ** (10 - precision):
        return None
    return 1 if va > vb else -1


# -- ladder chains ------------------------------------------------------------


@dataclass
class ChainReport:
    nu_max: Ordinal
    e_increasing: bool
    l_decreasing: bool
    steps: list = field(default_factory=list)
    points: list = field(default_factory=list)
    unknowns: int = 0

    @property
    def ok(self):
        return self.e_increasing and self.l_decreasing


def _nus_up_to(nu_max):
    nu_max = Ordinal.of(nu_max)
    if nu_max.is_finite():
        return [Ordinal.of(n) for n in range(int(nu_max) + 1)]
    return [Ordinal.of(n) for n in range(4)] + [nu_max]


def ladder_chains(nu_max, points=(), rules=DEFAULT_RULES):
    """Check ``E_{w^nu}(x)`` increasing and ``L_{w^nu}(x)`` decreasing in ``nu``.

    For every extra term in `points` the report also records how it compares
    with each chain element.
    """
    nus = _nus_up_to(nu_max)
    report = ChainReport(Ordinal.of(nu_max), True, True)
    for lo, hi in zip(nus, nus[1:]):
        e = cmp_terms(apply_e(omega_power(lo)), apply_e(omega_power(hi)), rules)
        l = cmp_terms(apply_l(omega_power(hi)), apply_l(omega_power(lo)), rules)
        report.steps.append((lo, hi, e, l))
        report.e_increasing &= e is Order.LESS
        report.l_decreasing &= l is Order.LESS
        report.unknowns += (e is Order.UNKNOWN) + (l is Order.UNKNOWN)
    for t in points:
        for nu in nus:
            below = cmp_terms(apply_l(omega_power(nu)), t, rules)
            above = cmp_terms(t, apply_e(omega_power(nu)), rules)
            report.points.append((t, nu, below, above))
            report.unknowns += (below is Order.UNKNOWN) + (above is Order.UNKNOWN)
    return report


# -- text form ----------------------------------------------------------------

# precedence of the outermost constructor: sum < product < power < atom
_PREC = {"T": 0, "H": 1, "P": 2}


def _fmt(w):
    if not w:
        return "x", 3
    g, inner = w[0], w[1:]
    s, p = _fmt(inner)
    if g.kind in ("L", "E", "LG"):
        name = "E" if g.kind == "E" else "L"
        return f"{name}[{format_ordinal(g.arg)}]({s})", 3
    if g.kind == "T":
        r = g.arg
        op = "+" if r >= 0 else "-"
        return f"{s} {op} {format_fraction(abs(r))}", 0
    if g.kind == "H":
        return f"{format_fraction(g.arg)}*{s if p >= 2 else f'({s})'}", 1
    exp = str(g.arg.numerator) if g.arg.denominator == 1 else f"({format_fraction(g.arg)})"
    return f"{s if p >= 3 else f'({s})'}^{exp}", 2


def format_term(t):
    return _fmt(t.word)[0]


def _parse_sum(sc):
    w = _parse_product(sc)
    while True:
        if sc.accept("+"):
            w = (T(sc.rational(signed=False)),) + w
        elif sc.accept("-"):
            w = (T(-sc.rational(signed=False)),) + w
        else:
            return w


def _parse_product(sc):
    if sc.peek().isdigit():
        r = sc.rational(signed=False)
        sc.expect("*")
        if r <= 0:
            sc.fail("scale factor must be positive")
        return (H(r),) + _parse_product(sc)
    return _parse_power(sc)


def _parse_power(sc):
    w = _parse_atom(sc)
    while sc.accept("^"):
        r = sc.rational()
        if r <= 0:
            sc.fail("power must be positive")
        w = (P(r),) + w
    return w


def _parse_atom(sc):
    if sc.accept("x"):
        return ()
    if sc.accept("("):
        w = _parse_sum(sc)
        sc.expect(")")
        return w
    for name in ("L", "E"):
        if sc.accept(name + "["):
            gamma = parse_ordinal_at(sc)
            sc.expect("]")
            sc.expect("(")
            inner = _parse_sum(sc)
            sc.expect(")")
            if name == "L":
                head = (L(gamma),) if gamma.is_omega_power() else (LG(gamma),)
            else:
                head = e_chain(gamma)
            return head + inner
    sc.fail("expected 'x', '(', 'L[' or 'E['")


def parse_term_at(sc):
    return Term(_parse_sum(sc))


def parse_term(text):
    """Parse ``L[w^2](x)``, ``E[w](x+1)``, ``2*x``, ``x^3``, ``x+5/2`` and nestings."""
    sc = Scanner(text)
    t = parse_term_at(sc)
    sc.finish()
    return t
