"""Text syntax for polynomials.

Grammar: identifiers are variables, ``^`` raises to a power, ``*`` is
optional (juxtaposition multiplies), parentheses group, coefficients are
integers or ``a/b`` rationals, and ``i`` is the imaginary unit in complex
mode.  Canonical printing lists terms in graded-lexicographic order with
minus signs absorbed into coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Sequence, Tuple

from .poly import Polynomial
from .scalars import GaussianRational, Scalar, scalar_im, scalar_re


class ParseError(ValueError):
    def __init__(self, message: str, pos: int = 0):
        super().__init__(message)
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.group("num"):
            out.append(("num", m.group("num"), m.start()))
        elif m.group("ident"):
            out.append(("ident", m.group("ident"), m.start()))
        else:
            out.append(("op", m.group("op"), m.start()))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, vars_: Tuple[str, ...], complex_mode: bool):
        self.tokens = tokens
        self.i = 0
        self.vars = vars_
        self.complex_mode = complex_mode

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek() is not None:
            kind, val, pos = self.peek()
            raise ParseError(f"unexpected token {val!r}", pos)
        return p

    def expr(self) -> Polynomial:
        tok = self.peek()
        negate = False
        if tok and tok[:2] == ("op", "-"):
            self.next()
            negate = True
        elif tok and tok[:2] == ("op", "+"):
            self.next()
        p = self.term()
        if negate:
            p = -p
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self.next()
                q = self.term()
                p = p + q if tok[1] == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.power()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                self.next()
                p = p * self.power()
            elif tok and (tok[0] in ("num", "ident") or tok[:2] == ("op", "(")):
                p = p * self.power()
            else:
                return p

    def power(self) -> Polynomial:
        base = self.atom()
        tok = self.peek()
        if tok and tok[:2] == ("op", "^"):
            self.next()
            kind, val, pos = self.next()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be a nonnegative integer", pos)
            return base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.next()
        if kind == "num":
            if "/" in val:
                a, b = val.split("/")
                c: Scalar = Fraction(int(a), int(b))
            else:
                c = Fraction(int(val))
            if self.complex_mode:
                c = GaussianRational(c)
            return Polynomial.constant(c, self.vars)
        if kind == "ident":
            if val == "i" and self.complex_mode:
                return Polynomial.constant(GaussianRational(0, 1), self.vars)
            if val not in self.vars:
                raise ParseError(f"unknown variable {val!r}", pos)
            p = Polynomial.variable(val, self.vars)
            if self.complex_mode:
                p = p.map_coefficients(lambda c: GaussianRational(c))
            return p
        if val == "(":
            p = self.expr()
            tok = self.next()
            if tok[:2] != ("op", ")"):
                raise ParseError("expected ')'", tok[2])
            return p
        if val == "-":
            return -self.atom()
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_polynomial(
    text: str, vars_: Sequence[str], complex_mode: bool = False
) -> Polynomial:
    vs = tuple(vars_)
    if complex_mode and "i" in vs:
        raise ParseError("'i' is reserved for the imaginary unit in complex mode")
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    return _Parser(tokens, vs, complex_mode).parse()


# -- printing ----------------------------------------------------------------


def _coeff_str(c: Scalar) -> Tuple[str, bool]:
    """Render |coefficient|; returns (text, negative)."""
    re_, im = scalar_re(c), scalar_im(c)
    if not im:
        return (str(abs(re_)), re_ < 0)
    if not re_:
        mag = abs(im)
        return ("i" if mag == 1 else f"{mag}i", im < 0)
    # mixed: keep the sign inside parentheses, never negate outside
    s = str(c) if isinstance(c, GaussianRational) else str(c)
    return (f"({s})", False)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    items = sorted(p.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    pieces = []
    for k, (e, c) in enumerate(items):
        mono = "*".join(
            v if d == 1 else f"{v}^{d}" for v, d in zip(p.vars, e) if d
        )
        ctext, neg = _coeff_str(c)
        if mono:
            body = mono if ctext == "1" else f"{ctext}*{mono}"
        else:
            body = ctext
        if k == 0:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)


def format_ideal(gens) -> str:
    if not gens:
        return "<0>"
    return "<" + ", ".join(format_polynomial(g) for g in gens) + ">"
