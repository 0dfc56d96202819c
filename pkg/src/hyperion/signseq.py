"""Surreal numbers as run-length encoded sign sequences.

A :class:`SignSeq` is a tuple of ``(sign, run)`` blocks with ``sign`` in
``{+1, -1}`` and ``run`` a nonzero :class:`~hyperion.ordinal.Ordinal`;
consecutive blocks alternate in sign.  ``(+^w -^2 +)`` is the text form.
"""

from fractions import Fraction

from ._scan import Scanner
from .errors import EmptyCut, NotFinite, OrderViolation
from .order import Order
from .ordinal import ONE, ZERO, Ordinal, add, difference, format_ordinal, parse_ordinal_at
from .ordinal import parse_ordinal_term_at

__all__ = [
    "SignSeq", "EMPTY", "cmp_num", "is_simpler", "bracket", "common_ancestor",
    "to_dyadic", "from_dyadic", "ordinal_embed", "options", "parse_signseq",
]


class SignSeq:
    __slots__ = ("blocks", "_hash")

    def __init__(self, blocks=()):
        merged = []
        for sign, run in blocks:
            run = Ordinal.of(run)
            if sign not in (1, -1):
                raise ValueError(f"bad sign {sign!r}")
            if run.is_zero():
                continue
            if merged and merged[-1][0] == sign:
                merged[-1] = (sign, add(merged[-1][1], run))
            else:
                merged.append((sign, run))
        self.blocks = tuple(merged)
        self._hash = None

    @classmethod
    def from_signs(cls, signs):
        return cls((s, 1) for s in signs)

    @property
    def length(self):
        total = ZERO
        for _, run in self.blocks:
            total = add(total, run)
        return total

    def is_finite(self):
        return all(run.is_finite() for _, run in self.blocks)

    def signs(self):
        """The signs as a tuple of ints; finite sequences only."""
        if not self.is_finite():
            raise NotFinite(f"{self} has transfinite length")
        out = []
        for sign, run in self.blocks:
            out.extend([sign] * int(run))
        return tuple(out)

    def extend(self, sign, run=ONE):
        return SignSeq(self.blocks + ((sign, run),))

    def suffix_after(self, prefix):
        """Blocks remaining once `prefix` (which must be a prefix) is removed."""
        rest = list(self.blocks)
        for sign, run in prefix.blocks:
            if not rest or rest[0][0] != sign or rest[0][1] < run:
                raise OrderViolation(f"{prefix} is not a prefix of {self}")
            s0, r0 = rest[0]
            if r0 == run:
                rest.pop(0)
            else:
                rest[0] = (s0, difference(run, r0))
        return SignSeq(rest)

    def __neg__(self):
        return SignSeq((-s, r) for s, r in self.blocks)

    def __eq__(self, other):
        if not isinstance(other, SignSeq):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.blocks)
        return self._hash

    def __lt__(self, other):
        return _cmp(self, other) < 0

    def __le__(self, other):
        return _cmp(self, other) <= 0

    def __gt__(self, other):
        return _cmp(self, other) > 0

    def __ge__(self, other):
        return _cmp(self, other) >= 0

    def __str__(self):
        return format_signseq(self)

    def __repr__(self):
        return f"SignSeq({format_signseq(self)!r})"


EMPTY = SignSeq()


def _walk(a, b):
    """Yield aligned (sign_a, sign_b, run) segments until the first divergence.

    A missing sign is reported as 0.  The final segment is the divergence
    (or both zero when a == b).
    """
    ia = ib = 0
    ra = a.blocks[0][1] if a.blocks else None
    rb = b.blocks[0][1] if b.blocks else None
    while True:
        sa = a.blocks[ia][0] if ia < len(a.blocks) else 0
        sb = b.blocks[ib][0] if ib < len(b.blocks) else 0
        if sa != sb or sa == 0:
            yield sa, sb, None
            return
        step = ra if ra <= rb else rb
        yield sa, sb, step
        if ra == step:
            ia += 1
            ra = a.blocks[ia][1] if ia < len(a.blocks) else None
        else:
            ra = difference(step, ra)
        if rb == step:
            ib += 1
            rb = b.blocks[ib][1] if ib < len(b.blocks) else None
        else:
            rb = difference(step, rb)


def _cmp(a, b):
    for sa, sb, run in _walk(a, b):
        if run is None:
            return (sa > sb) - (sa < sb)
    return 0


def cmp_num(a, b):
    """Surreal order: at the first differing position, ``- < (absent) < +``."""
    return Order.of(_cmp(a, b))


def common_prefix(a, b):
    blocks = [(sa, run) for sa, _, run in _walk(a, b) if run is not None]
    return SignSeq(blocks)


def is_simpler(a, b):
    """``a ⊑ b``: a is a (not necessarily proper) prefix of b."""
    return common_prefix(a, b) == a


def common_ancestor(a, b):
    """The ⊑-greatest common prefix of ``a <= b``."""
    if _cmp(a, b) > 0:
        raise OrderViolation(f"{a} > {b}")
    return common_prefix(a, b)


def _simplest_between(lo, hi):
    p = EMPTY
    budget = 4 * (len(lo.blocks) if lo else 0) + 4 * (len(hi.blocks) if hi else 0) + 8
    for _ in range(budget):
        above = lo is None or _cmp(p, lo) > 0
        below = hi is None or _cmp(p, hi) < 0
        if above and below:
            return p
        bound, sign = (lo, 1) if not above else (hi, -1)
        rest = bound.suffix_after(p)
        if not rest.blocks:
            p = p.extend(sign)
        else:
            s0, run = rest.blocks[0]
            assert s0 == sign, "walk left the subtree of the bound"
            p = p.extend(sign, run)
    raise AssertionError("bracket walk did not terminate")  # pragma: no cover


def bracket(left=(), right=()):
    """Conway bracket ``{L | R}`` of finite option sets."""
    left, right = list(left), list(right)
    lo = max(left) if left else None
    hi = min(right) if right else None
    if lo is not None and hi is not None and _cmp(lo, hi) >= 0:
        raise EmptyCut(f"left option {lo} is not below right option {hi}")
    return _simplest_between(lo, hi)


def options(a):
    """Canonical options ``(a_L, a_R)`` of a finite sign sequence: its proper prefixes."""
    signs = a.signs()
    left, right = [], []
    for i in range(len(signs)):
        (left if signs[i] == 1 else right).append(SignSeq.from_signs(signs[:i]))
    return left, right


def to_dyadic(a):
    if not a.is_finite():
        raise NotFinite(f"{a} has a transfinite run")
    if not a.blocks:
        return Fraction(0)
    (s0, r0), rest = a.blocks[0], a.blocks[1:]
    x = Fraction(s0 * int(r0))
    step = Fraction(1, 2)
    for sign, run in rest:
        k = int(run)
        x += sign * step * 2 * (1 - Fraction(1, 2 ** k))
        step /= 2 ** k
    return x


def from_dyadic(q):
    q = Fraction(q)
    den = q.denominator
    if den & (den - 1):
        raise NotFinite(f"{q} is not a dyadic rational")
    if q == 0:
        return EMPTY
    if q < 0:
        return -from_dyadic(-q)
    if den == 1:
        return SignSeq(((1, int(q)),))
    m = q.numerator // den
    signs = [1] * (m + 1)
    x, step = Fraction(m + 1), Fraction(1, 2)
    while x != q:
        if q < x:
            signs.append(-1)
            x -= step
        else:
            signs.append(1)
            x += step
        step /= 2
    return SignSeq.from_signs(signs)


def ordinal_embed(gamma):
    gamma = Ordinal.of(gamma)
    return SignSeq(((1, gamma),)) if not gamma.is_zero() else EMPTY


# -- text form -------------------------------------------------------------


def format_signseq(a):
    parts = []
    for sign, run in a.blocks:
        ch = "+" if sign > 0 else "-"
        if run == ONE:
            parts.append(ch)
        elif len(run.terms) == 1:
            parts.append(f"{ch}^{format_ordinal(run)}")
        else:
            parts.append(f"{ch}^({format_ordinal(run)})")
    return "(" + " ".join(parts) + ")"


def parse_signseq_at(sc):
    sc.expect("(")
    blocks = []
    while not sc.accept(")"):
        if sc.accept("+"):
            sign = 1
        elif sc.accept("-") or sc.accept("−"):
            sign = -1
        else:
            sc.fail("expected '+', '-' or ')'")
        run = ONE
        if sc.accept("^"):
            if sc.peek() == "(":
                sc.expect("(")
                run = parse_ordinal_at(sc)
                sc.expect(")")
            else:
                run = parse_ordinal_term_at(sc)
            if run.is_zero():
                sc.fail("run lengths must be nonzero")
        blocks.append((sign, run))
    return SignSeq(blocks)


def parse_signseq(text):
    sc = Scanner(text)
    value = parse_signseq_at(sc)
    sc.finish()
    return value
