"""Text form of polynomials and rational functions.

Grammar (whitespace is ignored)::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/")? unary)*      juxtaposition multiplies
    unary   := ("+" | "-") unary | power
    power   := primary ("^" "-"? INTEGER)?
    primary := INTEGER | "T" | "g" | "(" expr ")"

Integers are read modulo p.  ``g`` is the class of x in F_p[x]/(modulus) and
is only available when t > 1.  Examples: ``(g+1)*T^2 + g*T + 1``,
``(T+2)/T^2``, ``1/(T^2+T)``.

The formatters emit strings that parse back to the identical value.
"""

import re

from ..errors import ParseError
from .poly import Poly
from .ratfunc import RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+)|([Tg])|([-+*/^()]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} at position {pos}")
        num, sym, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif sym is not None:
            out.append(("sym", sym))
        else:
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, field, text):
        self.field = field
        self.toks = _tokenize(text)
        self.i = 0
        if not self.toks:
            raise ParseError("empty expression")

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}")

    def parse(self):
        value = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"unexpected trailing input at token {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_primary(self):
        kind, val = self.peek()
        return kind in ("num", "sym") or (kind == "op" and val == "(")

    def term(self):
        value = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                if val == "*":
                    value = value * rhs
                else:
                    if rhs.is_zero():
                        raise ParseError("division by zero")
                    value = value / rhs
            elif self._starts_primary():
                value = value * self.unary()
            else:
                return value

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.primary()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be an integer literal")
            if sign < 0 and base.is_zero():
                raise ParseError("division by zero")
            base = base ** (sign * val)
        return base

    def primary(self):
        F = self.field
        kind, val = self.take()
        if kind == "num":
            return RatFunc.constant(F, F.from_int(val))
        if kind == "sym":
            if val == "T":
                return RatFunc.from_poly(Poly.T(F))
            if F.t == 1:
                raise ParseError("generator symbol 'g' is only defined for q = p^t with t > 1")
            return RatFunc.constant(F, F.generator)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError("unexpected end of input" if kind is None else f"unexpected token {val!r}")


def parse_ratfunc(field, text):
    """Parse an expression into a reduced rational function over ``field``."""
    return _Parser(field, text).parse()


def parse_poly(field, text):
    r = parse_ratfunc(field, text)
    if not r.is_polynomial():
        raise ParseError(f"{text!r} is not a polynomial")
    return r.num


def format_fq(field, code):
    return field.format(code)


def format_poly(f):
    F = f.field
    if f.is_zero():
        return "0"
    nterms = sum(1 for c in f.coeffs if c)
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        cs = F.format(c)
        compound = "+" in cs
        if k == 0:
            parts.append(f"({cs})" if compound and nterms > 1 else cs)
            continue
        mono = "T" if k == 1 else f"T^{k}"
        if c == 1:
            parts.append(mono)
        elif compound:
            parts.append(f"({cs})*{mono}")
        else:
            parts.append(f"{cs}*{mono}")
    return " + ".join(parts)


def format_ratfunc(r):
    if r.den.is_one():
        return format_poly(r.num)
    ns = format_poly(r.num)
    ds = format_poly(r.den)
    if "+" in ns:
        ns = f"({ns})"
    if "+" in ds or "*" in ds:
        ds = f"({ds})"
    return f"{ns}/{ds}"
