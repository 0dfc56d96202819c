"""Executable audits of the skeleton axioms FE, A, M, R (at level ``w^mu``) and level 0.

Every audit samples instances from a seeded ``random.Random``, evaluates
both sides exactly with the series engine, and records failures in a
replayable form.
"""

import json
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .errors import HyperionError
from .hypercalc import DEFAULT_RULES, L, Term, hyperlog_of_atomic, l_chain, to_series
from .lhm import UNIT, Monomial, format_monomial, log_monomial, monomial_key, mul, parse_monomial
from .order import Order
from .ordinal import OMEGA, ZERO, Kind, Ordinal, add, format_ordinal, omega_power, parse_ordinal, pred_info
from .series import (
    cmp_order, dominant_monomial, format_series, inverse_monomial, of_monomial, prec,
)

__all__ = [
    "AuditReport", "audit_fe", "audit_a", "audit_m", "audit_r", "audit_level0",
    "run_audit", "replay", "sample_atomic", "sample_below", "AXIOMS",
]


@dataclass
class AuditReport:
    axiom: str
    mu: str
    samples: int
    failures: list = field(default_factory=list)
    unknowns: int = 0

    @property
    def passed(self):
        return not self.failures and not self.unknowns

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls(**json.loads(text))


# -- sampling -----------------------------------------------------------------


def _mu_minus(mu):
    return pred_info(mu)[1]


def sample_atomic(rng, mu, bound=3):
    """An ordinal ``g`` with ``l[g]`` atomic at level ``w^mu``: shapes over multiples of ``w^(mu_-)``."""
    base = _mu_minus(Ordinal.of(mu))
    k = add(base, rng.randint(1, 2))
    n, m = rng.randint(1, bound), rng.randint(1, bound)
    shape = rng.randrange(4)
    if shape == 0:
        return ZERO
    if shape == 1:
        return Ordinal(((base, n),))
    if shape == 2:
        return Ordinal(((k, n),))
    return Ordinal(((k, n), (base, m)))


def _exponents_below(mu):
    cands = [Ordinal.of(i) for i in range(4)] + [OMEGA, add(OMEGA, 1)]
    return [e for e in cands if e < mu]


def sample_below(rng, mu, bound=3):
    """An ordinal below ``w^mu``: shapes ``n``, ``w^k*n``, ``w^k*n + w^j*m``."""
    exps = _exponents_below(Ordinal.of(mu))
    shape = rng.randrange(4)
    if shape == 0 or not exps:
        return Ordinal.of(rng.randint(0, bound))
    k = rng.choice(exps)
    n = rng.randint(1, bound)
    lower = [e for e in exps if e < k]
    if shape == 1 or not lower:
        return Ordinal(((k, n),))
    return Ordinal(((k, n), (rng.choice(lower), rng.randint(1, bound))))


# -- instance evaluation ------------------------------------------------------


def _hyperlog_of(gamma, delta, rules):
    """``L_delta(l[gamma])`` for ``delta`` below the atomicity level of ``gamma``."""
    return to_series(Term(l_chain(delta) + l_chain(gamma)), rules)


def _level(mu):
    return omega_power(mu)


def _eval_fe(mu, inst, rules):
    gamma = parse_ordinal(inst["a"])
    beta = _level(mu)
    lower = omega_power(_mu_minus(mu))
    lhs = to_series(Term((L(beta), L(lower)) + l_chain(gamma)), rules)
    rhs = hyperlog_of_atomic(gamma, beta, rules) - 1
    return lhs, rhs, lhs == rhs


def _eval_a(mu, inst, rules):
    gamma, delta = parse_ordinal(inst["a"]), parse_ordinal(inst["delta"])
    lhs = hyperlog_of_atomic(gamma, _level(mu), rules)
    rhs = _hyperlog_of(gamma, delta, rules)
    return lhs, rhs, cmp_order(lhs, rhs) is Order.LESS


def _eval_m(mu, inst, rules):
    g, h, delta = parse_ordinal(inst["a"]), parse_ordinal(inst["b"]), parse_ordinal(inst["delta"])
    beta = _level(mu)
    lhs = hyperlog_of_atomic(g, beta, rules) + inverse_monomial(_hyperlog_of(g, delta, rules))
    rhs = hyperlog_of_atomic(h, beta, rules) - inverse_monomial(_hyperlog_of(h, delta, rules))
    return lhs, rhs, cmp_order(lhs, rhs) is Order.LESS


def _eval_r(mu, inst, rules):
    gamma, delta = parse_ordinal(inst["a"]), parse_ordinal(inst["delta"])
    lhs = hyperlog_of_atomic(gamma, _level(mu), rules)
    bound = inverse_monomial(of_monomial(dominant_monomial(_hyperlog_of(gamma, delta, rules))))
    floor = monomial_key(bound.terms[0][0])
    return lhs, bound, all(monomial_key(m) > floor for m in lhs.support())


def _eval_level0(_mu, inst, rules):
    check = inst["check"]
    m = parse_monomial(inst["m"])
    lm = log_monomial(m)
    if check == "FE0":
        n = parse_monomial(inst["n"])
        lhs, rhs = log_monomial(mul(m, n)), lm + log_monomial(n)
        return lhs, rhs, lhs == rhs
    if check == "A0":
        rhs = of_monomial(m)
        return lm, rhs, prec(lm, rhs)
    if check == "M0":
        n = parse_monomial(inst["n"])
        rhs = log_monomial(n)
        return lm, rhs, cmp_order(lm, rhs) is Order.LESS
    if check == "R0":
        one = monomial_key(UNIT)
        return lm, of_monomial(UNIT), all(monomial_key(k) > one for k in lm.support())
    raise ValueError(f"unknown level-0 check {check!r}")


_EVAL = {"FE": _eval_fe, "A": _eval_a, "M": _eval_m, "R": _eval_r, "L0": _eval_level0}
AXIOMS = tuple(_EVAL)


def replay(axiom, mu, instance, rules=DEFAULT_RULES):
    """Re-evaluate one serialized instance; returns ``(lhs, rhs, verdict)``."""
    mu = parse_ordinal(mu) if isinstance(mu, str) else Ordinal.of(mu)
    try:
        lhs, rhs, ok = _EVAL[axiom](mu, instance, rules)
    except HyperionError as exc:
        return str(exc), "", "unknown"
    return format_series(lhs), format_series(rhs), "pass" if ok else "fail"


def _run(axiom, mu, instances, rules):
    report = AuditReport(axiom, format_ordinal(mu), len(instances))
    for inst in instances:
        lhs, rhs, verdict = replay(axiom, mu, inst, rules)
        if verdict == "unknown":
            report.unknowns += 1
        if verdict != "pass":
            report.failures.append({"instance": inst, "lhs": lhs, "rhs": rhs, "verdict": verdict})
    return report


def _check_mu(mu, successor=False):
    mu = parse_ordinal(mu) if isinstance(mu, str) else Ordinal.of(mu)
    if mu.is_zero():
        raise ValueError("mu must be at least 1")
    if successor and pred_info(mu)[0] is not Kind.SUCCESSOR:
        raise ValueError(f"FE needs a successor mu, got {format_ordinal(mu)}")
    return mu


def audit_fe(mu, samples=200, seed=0, rules=DEFAULT_RULES):
    """``L_b(L_{b/w}(l[a])) == L_b(l[a]) - 1`` for sampled atomic ``l[a]``."""
    mu = _check_mu(mu, successor=True)
    rng = random.Random(seed)
    insts = [{"a": format_ordinal(sample_atomic(rng, mu))} for _ in range(samples)]
    return _run("FE", mu, insts, rules)


def audit_a(mu, samples=200, seed=0, rules=DEFAULT_RULES):
    """``L_b(l[a]) < L_d(l[a])`` for ``d < b``."""
    mu = _check_mu(mu)
    rng = random.Random(seed)
    insts = [{"a": format_ordinal(sample_atomic(rng, mu)), "delta": format_ordinal(sample_below(rng, mu))}
             for _ in range(samples)]
    return _run("A", mu, insts, rules)


def audit_m(mu, samples=200, seed=0, rules=DEFAULT_RULES):
    """``a ≺ b  =>  L_b a + (L_d a)^-1 < L_b b - (L_d b)^-1``."""
    mu = _check_mu(mu)
    rng = random.Random(seed)
    insts = []
    while len(insts) < samples:
        g, h = sample_atomic(rng, mu), sample_atomic(rng, mu)
        if g == h:
            continue
        g, h = max(g, h), min(g, h)  # l[g] ≺ l[h] when g > h
        insts.append({"a": format_ordinal(g), "b": format_ordinal(h),
                      "delta": format_ordinal(sample_below(rng, mu))})
    return _run("M", mu, insts, rules)


def audit_r(mu, samples=200, seed=0, rules=DEFAULT_RULES):
    """``supp L_b(l[a]) ≻ (L_d l[a])^-1``."""
    mu = _check_mu(mu)
    rng = random.Random(seed)
    insts = [{"a": format_ordinal(sample_atomic(rng, mu)), "delta": format_ordinal(sample_below(rng, mu))}
             for _ in range(samples)]
    return _run("R", mu, insts, rules)


_POINTS = [Ordinal.of(0), Ordinal.of(1), Ordinal.of(2), Ordinal.of(3), OMEGA, add(OMEGA, 1),
           Ordinal(((Ordinal.of(1), 2),)), omega_power(2)]


def random_infinite_monomial(rng, max_points=3):
    """A finite-support monomial ``≻ 1`` with rational exponents."""
    points = sorted(rng.sample(_POINTS, rng.randint(1, max_points)))
    pieces = []
    for i, g in enumerate(points):
        e = Fraction(rng.randint(1, 5), rng.choice([1, 1, 2, 3]))
        if i and rng.random() < 0.5:
            e = -e
        pieces.append((g, add(g, 1), e))
    return Monomial(pieces)


def audit_level0(samples=500, seed=0, rules=DEFAULT_RULES):
    """FE0, A0, M0 and R0 for the logarithm on random infinite monomials."""
    rng = random.Random(seed)
    insts = []
    for _ in range(samples):
        m, n = random_infinite_monomial(rng), random_infinite_monomial(rng)
        ms, ns = format_monomial(m), format_monomial(n)
        insts.append({"check": "FE0", "m": ms, "n": ns})
        insts.append({"check": "A0", "m": ms})
        insts.append({"check": "R0", "m": ms})
        if m != n:
            lo, hi = (ms, ns) if monomial_key(m) < monomial_key(n) else (ns, ms)
            insts.append({"check": "M0", "m": lo, "n": hi})
    report = _run("L0", ZERO, insts, rules)
    report.samples = samples
    return report


def run_audit(axiom, mu=1, samples=200, seed=0, rules=DEFAULT_RULES):
    if axiom == "L0":
        return audit_level0(samples, seed, rules)
    fn = {"FE": audit_fe, "A": audit_a, "M": audit_m, "R": audit_r}[axiom]
    return fn(mu, samples, seed, rules)
