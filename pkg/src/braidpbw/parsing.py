"""A small recursive-descent evaluator for algebraic expressions.

Expressions are sums of products of atoms.  ``*``, ``.`` and ``#`` all denote
(possibly noncommutative) multiplication, ``@`` is a tensor product binding
more loosely than multiplication, ``/`` divides by a scalar and ``^``
raises to an integer power; exponents may be integer expressions in
named integer parameters, e.g. ``alpha*K^(3*s0)``.  Atoms are numbers or
names (identifiers, optionally followed by primes such as ``u'``), looked
up in a namespace and combined with the ordinary Python operators, so the
same evaluator builds noncommutative polynomials, Hopf algebra elements,
smash product elements and scalars.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*'*)|(?P<op>[-+*/^.()#@]))"
)


def tokenize(text: str):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    return tokens


class _Parser:
    def __init__(self, text, namespace, integers, field, unit=None):
        self.unit = unit
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.namespace = namespace
        self.integers = integers
        self.field = field

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'token'} in {self.text!r}")
        self.i += 1
        return tok

    def number(self, digits):
        n = int(digits)
        return self.field(n) if self.field is not None else Fraction(n)

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input {self.tokens[self.i][1]!r} in {self.text!r}")
        return value

    def expr(self):
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        value = self.tensor()
        if sign < 0:
            value = -value
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.tensor()
            value = value + rhs if op == "+" else value - rhs
        return value

    def tensor(self):
        value = self.term()
        while self.peek()[1] == "@":
            self.take()
            rhs = self.term()
            value = self._lift(value) @ self._lift(rhs)
        return value

    def _lift(self, value):
        if isinstance(value, (int, Fraction)) or not hasattr(value, "__matmul__"):
            if self.unit is None:
                raise ParseError(f"tensor product of scalars in {self.text!r}")
            return self.unit * value
        return value

    def term(self):
        value = self.power()
        while self.peek()[1] in ("*", ".", "#", "/"):
            op = self.take()[1]
            rhs = self.power()
            if op == "/":
                value = value * (1 / rhs) if not isinstance(value, (int, Fraction)) else value / rhs
            else:
                value = value * rhs
        return value

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            base = base ** self.exponent()
        return base

    def exponent(self):
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        kind, tok = self.peek()
        if kind == "num":
            self.take()
            return sign * int(tok)
        if kind == "name":
            self.take()
            if tok not in self.integers:
                raise ParseError(f"unknown integer parameter {tok!r} in exponent")
            return sign * int(self.integers[tok])
        if tok == "(":
            self.take()
            sub = _Parser.__new__(_Parser)
            sub.__dict__.update(self.__dict__)
            sub.namespace = {k: Fraction(v) for k, v in self.integers.items()}
            sub.field = None
            value = sub.expr()
            self.i = sub.i
            self.take(")")
            value = Fraction(value)
            if value.denominator != 1:
                raise ParseError(f"non-integer exponent {value} in {self.text!r}")
            return sign * int(value)
        raise ParseError(f"bad exponent in {self.text!r}")

    def atom(self):
        kind, tok = self.peek()
        if kind == "num":
            self.take()
            return self.number(tok)
        if kind == "name":
            self.take()
            if tok in self.namespace:
                return self.namespace[tok]
            if tok in self.integers:
                return self.number(self.integers[tok])
            raise ParseError(f"unknown name {tok!r} in {self.text!r}")
        if tok in ("-", "+"):
            self.take()
            value = self.power()
            return -value if tok == "-" else value
        if tok == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected {tok!r} in {self.text!r}")


def evaluate(text: str, namespace: dict, integers: dict | None = None, field=None, unit=None):
    """Evaluate ``text`` with names bound by ``namespace``.

    ``integers`` binds names usable in exponents (and as plain numbers);
    ``field`` coerces numeric literals; ``unit`` lifts bare scalars that
    appear as tensor factors.
    """
    return _Parser(text, namespace, integers or {}, field, unit).parse()
