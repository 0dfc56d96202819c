"""A short walk through the kernel: ordinals, surreals, series, terms and audits."""

from fractions import Fraction

from hyperion import conway
from hyperion.audit import audit_fe
from hyperion.derivation import derive
from hyperion.hypercalc import (
    cmp_terms, hyperlog_of_atomic, is_atomic, ladder_chains, normalize, parse_term, to_series,
)
from hyperion.ordinal import omega_power, parse_ordinal
from hyperion.series import parse_series
from hyperion.signseq import bracket, from_dyadic, parse_signseq, to_dyadic


def show(label, value):
    print(f"{label:<34} {value}")


print("# ordinals")
show("w + 1 + w", parse_ordinal("w + 1 + w"))
show("w^2 + w*3 + 1 + w^2", parse_ordinal("w^2 + w*3 + 1 + w^2"))

print("\n# sign sequences")
show("3/4 as signs", from_dyadic(Fraction(3, 4)))
show("{0 | 1}", bracket([from_dyadic(0)], [from_dyadic(1)]))
show("(+ -^w) is transfinite", not parse_signseq("(+ -^w)").is_finite())
half, three = from_dyadic(Fraction(1, 2)), from_dyadic(3)
show("1/2 * 3 via Conway's formula", to_dyadic(conway.mul_dyadic(half, three)))
cut = conway.gonshor_exp_cut(half, 8)
show("e^(1/2) lies in", f"({float(cut.lo):.6f}, {float(cut.hi):.6f})")

print("\n# series and the derivation")
f = parse_series("l[0]^2*l[1] + 3*l[2]^-1")
show("f", f)
show("f'", derive(f))
show("(l[0] + 1)*(l[0] - 1)", parse_series("(l[0] + 1)*(l[0] - 1)"))

print("\n# terms")
for text in ("L[w](L[1](x))", "L[w^2](L[w*2](x))", "E[w](x + 5/2)"):
    show(text, normalize(parse_term(text)))
show("L[w](L[1](x)) as series", to_series(parse_term("L[w](L[1](x))")))
show("E[1](x) vs E[w](x)", cmp_terms(parse_term("E[1](x)"), parse_term("E[w](x)")))
show("L[w](x) vs L[1](x)", cmp_terms(parse_term("L[w](x)"), parse_term("L[1](x)")))

print("\n# hyperlogarithms of atomic monomials")
level = omega_power(2)
for g in ("1", "w", "w*2"):
    gamma = parse_ordinal(g)
    atomic = is_atomic(gamma, level)
    show(f"l[{g}] atomic below w^2", atomic)
    if atomic:
        show(f"  L[w^2](l[{g}])", hyperlog_of_atomic(gamma, level))

print("\n# checks")
r = audit_fe(2, samples=50, seed=1)
show("functional equation at level w^2", f"{r.samples} samples, {len(r.failures)} failures")
c = ladder_chains(3)
show("ladders ordered", f"E increasing {c.e_increasing}, L decreasing {c.l_decreasing}")
