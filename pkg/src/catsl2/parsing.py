"""A small infix parser shared by the command line.

Accepts sums of products of numbers and indexed variables such as
``c1^4 - 3c1^2*c2 + c2^2`` or ``x1*d1 - d1*x2``.  Juxtaposition means
multiplication; products are built left to right, so noncommutative rings
work.  Division is allowed only between integer literals.
"""

import re
from fractions import Fraction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)(\d+)|(\S))")


class ParseError(ValueError):
    pass


def tokenize(text):
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at position {pos} in {text!r}")
        num, name, index, sym = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("var", (name, int(index))))
        elif sym in "+-*^()/":
            out.append((sym, None))
        else:
            raise ParseError(f"unexpected character {sym!r} in {text!r}")
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, tokens, const, var):
        self.toks = tokens
        self.i = 0
        self.const = const
        self.var = var

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of expression")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}")
        self.i += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        value = self.factor()
        while self.peek() in ("*", "num", "var", "("):
            if self.peek() == "*":
                self.take()
            value = value * self.factor()
        return -value if sign < 0 else value

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take("num")[1]
            return base ** exp
        return base

    def atom(self):
        kind = self.peek()
        if kind == "num":
            num = self.take()[1]
            if self.peek() == "/":
                self.take()
                den = self.take("num")[1]
                if den == 0:
                    raise ParseError("division by zero")
                return self.const(Fraction(num, den))
            return self.const(num)
        if kind == "var":
            name, index = self.take()[1]
            return self.var(name, index)
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected token {kind!r}")


def parse_expression(text, const, var):
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    p = _Parser(tokens, const, var)
    value = p.expr()
    if p.i != len(tokens):
        raise ParseError(f"trailing input in {text!r}")
    return value


def parse_cpoly(text, k):
    """A polynomial in c_1..c_k."""
    from .grasscoh import cgen, cpoly_ring

    ring = cpoly_ring(k)

    def var(name, i):
        if name != "c":
            raise ParseError(f"unknown variable {name}{i}; expected c1..c{k}")
        if not 1 <= i <= k:
            raise ParseError(f"variable c{i} out of range c1..c{k}")
        return cgen(i, k)

    return parse_expression(text, lambda c: ring.one().scale(c), var)


def parse_nh(text, a):
    """An element of NH_a written in x1..xa and d1..d(a-1)."""
    from .nilhecke import NilHeckeElt

    def var(name, i):
        if name == "x" and 1 <= i <= a:
            return NilHeckeElt.xi(i, a)
        if name == "d" and 1 <= i < a:
            return NilHeckeElt.d(i, a)
        raise ParseError(f"unknown generator {name}{i} for {a} strands")

    return parse_expression(text, lambda c: NilHeckeElt.one(a) * c, var)


def parse_partition(text):
    text = text.strip()
    if text in ("", "0", "()", "empty"):
        return ()
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise ParseError(f"bad partition {text!r}; use comma-separated integers like 2,1")
    if any(p <= 0 for p in parts) or parts != sorted(parts, reverse=True):
        raise ParseError(f"partition {text!r} must be positive and weakly decreasing")
    return tuple(parts)
