"""Recursive-descent parser for the polynomial expression language.

Grammar (whitespace is insignificant)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' unsigned-int)?
    base   := variable | scalar | '(' expr ')'
    scalar := int | int '/' int | 'zeta'

Variables are x, y, z, t. ``zeta`` is the primitive n-th root of unity and is
only accepted when a cyclotomic order is supplied. Implicit multiplication
is rejected. Offsets in diagnostics are 1-based; end of input is
``len(src) + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import VARS, Poly
from .scalars import Scalar, zeta

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


@dataclass(frozen=True)
class ParseDiagnostic:
    offset: int
    expected: str
    found: str

    def __str__(self):
        return f"at offset {self.offset}: expected {self.expected}, found {self.found}"


class ParseError(ValueError):
    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'int', 'name', 'op', 'end'
    text: str
    offset: int  # 1-based


def _tokenize(src: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(src, pos)
        if m is None:  # only whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(_Tok("int", m.group(1), start + 1))
        elif m.group(2) is not None:
            toks.append(_Tok("name", m.group(2), start + 1))
        else:
            toks.append(_Tok("op", m.group(3), start + 1))
        pos = m.end()
    toks.append(_Tok("end", "", len(src) + 1))
    return toks


class _Parser:
    def __init__(self, src: str, cyclo: int | None):
        self.toks = _tokenize(src)
        self.i = 0
        self.cyclo = cyclo

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected: str):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(ParseDiagnostic(t.offset, expected, found))

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def expr(self) -> Poly:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        acc = self.term() * sign
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.accept("*"):
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.base()
        if self.accept("^"):
            if self.tok.kind != "int":
                self.fail("unsigned integer exponent")
            k = int(self.tok.text)
            self.i += 1
            base = base ** k
        return base

    def base(self) -> Poly:
        t = self.tok
        if t.kind == "int":
            self.i += 1
            num = int(t.text)
            if self.accept("/"):
                if self.tok.kind != "int":
                    self.fail("integer denominator")
                den = int(self.tok.text)
                if den == 0:
                    self.fail("nonzero denominator")
                self.i += 1
                return Poly.const(Fraction(num, den))
            return Poly.const(num)
        if t.kind == "name":
            if t.text in VARS:
                self.i += 1
                return Poly.var(t.text)
            if t.text == "zeta":
                if self.cyclo is None:
                    self.fail("variable or number ('zeta' needs a cyclotomic order)")
                self.i += 1
                return Poly.const(zeta(self.cyclo))
            self.fail("factor")
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                self.fail("')'")
            return inner
        self.fail("factor")


def parse_poly(src: str, cyclo: int | None = None) -> Poly:
    """Parse ``src`` into a :class:`Poly`; raises :class:`ParseError`."""
    p = _Parser(src, cyclo)
    result = p.expr()
    if p.tok.kind != "end":
        p.fail("operator or end of input")
    return result


def parse_scalar(src: str, cyclo: int | None = None) -> Scalar:
    """Parse a constant expression such as ``-1/2`` or ``zeta^2``."""
    poly = parse_poly(src, cyclo)
    if not poly.is_constant():
        raise ParseError(ParseDiagnostic(1, "a constant", repr(src)))
    return poly.constant_value()
