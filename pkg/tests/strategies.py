"""Hypothesis strategies and seeded random generators shared by the tests."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from hyperion.hypercalc import LG, E, H, L, P, T, Term
from hyperion.lhm import Monomial, ell, mul, power
from hyperion.ordinal import OMEGA, Ordinal, add, omega_power
from hyperion.series import Series
from hyperion.signseq import SignSeq

# -- ordinals -----------------------------------------------------------------


def _cnf(pairs):
    merged = {}
    for e, n in pairs:
        merged[e] = merged.get(e, 0) + n
    return Ordinal(tuple(sorted(merged.items(), key=lambda p: p[0], reverse=True)))


@st.composite
def ordinals(draw, max_exp=4, max_coeff=6, max_terms=3):
    """Ordinals below ``w^w`` (finite exponents)."""
    exps = draw(st.lists(st.integers(0, max_exp), max_size=max_terms, unique=True))
    return _cnf((Ordinal.of(e), draw(st.integers(1, max_coeff))) for e in exps)


@st.composite
def nested_ordinals(draw, depth=2):
    """Ordinals with ordinal exponents, for parser round trips."""
    if depth == 0:
        return Ordinal.of(draw(st.integers(0, 5)))
    exps = draw(st.lists(nested_ordinals(depth=depth - 1), max_size=3, unique=True))
    return _cnf((e, draw(st.integers(1, 4))) for e in exps)


def random_ordinal_below(rng, exponent_bound):
    """An ordinal ``< w^exponent_bound`` (finite bound) with up to three CNF terms."""
    exps = rng.sample(range(exponent_bound), rng.randint(0, min(3, exponent_bound)))
    return _cnf((Ordinal.of(e), rng.randint(1, 5)) for e in exps)


# -- sign sequences -----------------------------------------------------------

finite_signs = st.lists(st.sampled_from([1, -1]), max_size=8).map(lambda s: SignSeq.from_signs(s))

# -- monomials and series -----------------------------------------------------

POINTS = [Ordinal.of(0), Ordinal.of(1), Ordinal.of(2), Ordinal.of(3), OMEGA, add(OMEGA, 1),
          _cnf([(Ordinal.of(1), 2)]), omega_power(2), add(omega_power(2), 1)]

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
nonzero_rationals = rationals.filter(bool)


@st.composite
def finite_monomials(draw, max_points=3):
    points = draw(st.lists(st.sampled_from(POINTS), max_size=max_points, unique=True))
    m = Monomial()
    for g in points:
        m = mul(m, power(ell(g), draw(nonzero_rationals)))
    return m


@st.composite
def interval_monomials(draw):
    """Monomials mixing points with transfinite-width pieces."""
    cuts = sorted(draw(st.lists(st.sampled_from(POINTS + [omega_power(3)]), min_size=0, max_size=4, unique=True)))
    pieces = [(lo, hi, draw(rationals)) for lo, hi in zip(cuts, cuts[1:])]
    return Monomial(pieces)


@st.composite
def series(draw, max_terms=4):
    terms = draw(st.dictionaries(finite_monomials(), nonzero_rationals, max_size=max_terms))
    return Series(terms)


def random_rational(rng, lo=-6, hi=6, dens=(1, 1, 2, 3)):
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def random_finite_monomial(rng, max_points=3):
    m = Monomial()
    for g in rng.sample(POINTS, rng.randint(0, max_points)):
        e = random_rational(rng)
        if e:
            m = mul(m, power(ell(g), e))
    return m


def random_series(rng, max_terms=4):
    return Series({random_finite_monomial(rng): random_rational(rng, 1, 6) * rng.choice([1, -1])
                   for _ in range(rng.randint(0, max_terms))})


# -- ladder terms -------------------------------------------------------------

LEVELS = [omega_power(e) for e in (0, 1, 2, 3)] + [omega_power(OMEGA)]
LG_ARGS = [Ordinal.of(2), add(OMEGA, 1), _cnf([(Ordinal.of(1), 2)]), add(omega_power(2), OMEGA)]


def random_gen(rng, finite_level=False):
    kind = rng.choice("LLEETTHP" if finite_level else "LLEETTHPG")
    levels = [Ordinal.of(1)] if finite_level else LEVELS
    if kind == "L":
        return L(rng.choice(levels))
    if kind == "E":
        return E(rng.choice(levels))
    if kind == "T":
        return T(random_rational(rng))
    if kind == "H":
        return H(Fraction(rng.randint(1, 6), rng.choice([1, 2, 3])))
    if kind == "P":
        return P(Fraction(rng.randint(1, 6), rng.choice([1, 2, 3])))
    return LG(rng.choice(LG_ARGS))


def random_term(rng, max_len=6, finite_level=False):
    return Term(tuple(random_gen(rng, finite_level) for _ in range(rng.randint(0, max_len))))


def seeded(seed):
    return random.Random(seed)
