"""Tiny hand-rolled scanner shared by the text grammars."""

import re
from fractions import Fraction

from .errors import ParseError

_INT = re.compile(r"\d+")
_RATIONAL = re.compile(r"-?\d+(?:/\d+)?")


class Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, n=1):
        self.skip_ws()
        return self.text[self.pos:self.pos + n]

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def accept(self, token):
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token):
        if not self.accept(token):
            self.fail(f"expected {token!r}")

    def fail(self, message):
        raise ParseError(message, self.text, self.pos)

    def match(self, pattern):
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if m is None:
            return None
        self.pos = m.end()
        return m.group(0)

    def integer(self):
        tok = self.match(_INT)
        if tok is None:
            self.fail("expected an integer")
        return int(tok)

    def rational(self, signed=True):
        """Read `n`, `-n`, `n/d`; `(p/q)` is accepted too."""
        if self.accept("("):
            value = self.rational(signed)
            self.expect(")")
            return value
        start = self.pos
        tok = self.match(_RATIONAL)
        if tok is None or (not signed and tok.startswith("-")):
            self.pos = start
            self.fail("expected a rational number")
        try:
            return Fraction(tok)
        except ZeroDivisionError:
            self.pos = start
            self.fail("zero denominator")

    def finish(self):
        if not self.at_end():
            self.fail("unexpected trailing input")


def format_fraction(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
