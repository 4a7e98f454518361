"""Parsing class expressions such as ``3*p2 + e^3`` or ``w1^2*w3``.

Grammar (whitespace is ignored)::

    expr      := sign? term (('+' | '-') term)*
    term      := factor ('*' factor)*
    factor    := integer ('/' posint)? | generator ('^' posint)?
    generator := 'p' posint | 'e' | 'w' posint

The optional leading sign and the ``a/b`` factor let every rendered class
(including rational ones) be read back.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .coeff import CoeffRing
from .errors import ExprSyntaxError, FlavorMismatchError, UnknownGeneratorError
from .ring import GradedClass, RingSpec, normalize

__all__ = ["parse_expr"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([pw])(\d+)|(e)|([-+*^/]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[start]!r}", start, text)
        start = pos + len(match.group(0)) - len(match.group(0).lstrip())
        if match.group(1):
            tokens.append(("int", int(match.group(1)), start))
        elif match.group(2):
            tokens.append(("gen", (match.group(2), int(match.group(3))), start))
        elif match.group(4):
            tokens.append(("gen", ("e", None), start))
        else:
            tokens.append((match.group(5), None, start))
        pos = match.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, ring: RingSpec, text: str):
        self.ring = ring
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(self.text[tok[2]:].split()[0][:8])
            raise ExprSyntaxError(f"expected {kind}, found {what}", tok[2], self.text)
        self.i += 1
        return tok

    def expr(self) -> dict:
        terms: dict = {}
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
        while True:
            term = self.term()
            if term is not None:
                m, c = term
                terms[m] = terms.get(m, 0) + sign * c
            kind = self.peek()[0]
            if kind == "end":
                return terms
            if kind not in ("+", "-"):
                tok = self.peek()
                raise ExprSyntaxError(f"expected '+', '-', '*' or end of input, found {kind!r}", tok[2], self.text)
            sign = 1 if self.take(kind)[0] == "+" else -1

    def term(self):
        mono = [0] * self.ring.ngens
        coef = Fraction(1)
        alive = True
        while True:
            factor = self.factor()
            if factor is None:
                alive = False
            elif isinstance(factor, Fraction):
                coef *= factor
            else:
                idx, k = factor
                mono[idx] += k
            if self.peek()[0] != "*":
                break
            self.take("*")
        if not alive:
            return None
        return tuple(mono), coef

    def factor(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take("int")
            if self.peek()[0] == "/":
                if self.ring.coeff is not CoeffRing.RATIONALS:
                    raise ExprSyntaxError("fractions need rational coefficients", self.peek()[2], self.text)
                self.take("/")
                den = self.take("int")
                if den[1] == 0:
                    raise ExprSyntaxError("division by zero", den[2], self.text)
                return Fraction(value, den[1])
            return Fraction(value)
        if kind != "gen":
            raise ExprSyntaxError("expected an integer or a generator", pos, self.text)
        self.take("gen")
        power = 1
        if self.peek()[0] == "^":
            self.take("^")
            tok = self.take("int")
            if tok[1] == 0:
                raise ExprSyntaxError("exponent must be positive", tok[2], self.text)
            power = tok[1]
        idx = self.resolve(value, pos)
        if idx is None:
            return None
        return idx, power

    def resolve(self, gen, pos: int):
        """Generator index, or None for a generator identified with zero."""
        letter, k = gen
        ring = self.ring
        name = letter if k is None else f"{letter}{k}"
        if letter in "pe" and not ring.oriented:
            raise FlavorMismatchError(f"{name} is not a class of the unoriented ring", pos, self.text)
        if letter == "w" and ring.oriented:
            raise FlavorMismatchError(f"{name} is not a class of the oriented ring", pos, self.text)
        if letter == "e" and ring.euler_index is None:
            return None
        if name not in ring.index:
            raise UnknownGeneratorError(f"unknown generator {name} in {ring}", pos, self.text)
        return ring.index[name]


def parse_expr(ring: RingSpec, text: str) -> GradedClass:
    """Parse ``text`` into a normalized class of ``ring``."""
    terms = _Parser(ring, text).expr()
    return normalize(ring, GradedClass(ring, terms))
