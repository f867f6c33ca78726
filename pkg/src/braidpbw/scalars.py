"""Exact scalars: the rationals and cyclotomic fields Q(zeta_m).

Rational scalars are plain :class:`fractions.Fraction` values.  Elements of a
proper cyclotomic field are :class:`CycloNumber` instances, stored as an
integer coefficient vector over a common positive denominator and reduced
modulo the m-th cyclotomic polynomial.  Both kinds support the usual
arithmetic operators and compare equal to ints and Fractions where they
coincide, so algebraic code can be written once against either.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DivisionByZero, EvenOrderNeedsExtension, FieldMismatch

ODD_POWER = "odd-power"
EXTEND = "extend-to-2n"


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first."""
    from sympy import Poly, cyclotomic_poly, symbols

    x = symbols("x")
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(m, x), x).all_coeffs()))


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        coef = a[-1] / lead
        q[shift] = coef
        for i, bc in enumerate(b):
            a[shift + i] -= coef * bc
    return q, a


def _poly_inverse_mod(a, m):
    """Inverse of polynomial a modulo m over Q, by the extended Euclidean algorithm."""
    r0, r1 = [Fraction(c) for c in m], _trim([Fraction(c) for c in a])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        prod = [Fraction(0)] * (len(q) + len(s1))
        for i, qc in enumerate(q):
            for j, sc in enumerate(s1):
                prod[i + j] += qc * sc
        s_new = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            s_new[i] += c
        for i, c in enumerate(prod):
            s_new[i] -= c
        r0, r1 = r1, _trim(r)
        s0, s1 = s1, _trim(s_new) or [Fraction(0)]
    if not r1:
        raise DivisionByZero("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


class Field:
    """Q (``m`` with phi(m) = 1) or the cyclotomic field Q(zeta_m).

    ``zeta`` is the distinguished primitive m-th root of unity.  For m = 1
    and m = 2 the field is Q itself and zeta is 1 or -1.
    """

    def __init__(self, m: int = 1):
        if m < 1:
            raise ValueError("m must be a positive integer")
        self.m = m
        self.phi = cyclotomic_coefficients(m)
        self.degree = len(self.phi) - 1
        self.kind = "rationals" if self.degree == 1 else "cyclotomic"
        if self.degree > 1:
            # x^k mod Phi_m for k < 2*degree - 1, as integer vectors
            d = self.degree
            table = []
            cur = [0] * d
            cur[0] = 1
            for _ in range(2 * d - 1):
                table.append(tuple(cur))
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    for i in range(d):
                        cur[i] -= top * self.phi[i]
            self._powers = table
            self.zero = CycloNumber(self, (0,) * d, 1)
            self.one = CycloNumber(self, (1,) + (0,) * (d - 1), 1)
            self.zeta = CycloNumber(self, (0, 1) + (0,) * (d - 2), 1)
        else:
            self.zero = Fraction(0)
            self.one = Fraction(1)
            self.zeta = Fraction(-self.phi[0])

    def __repr__(self):
        return "Field(Q)" if self.degree == 1 else f"Field(Q(zeta_{self.m}))"

    def __eq__(self, other):
        return isinstance(other, Field) and other.m == self.m

    def __hash__(self):
        return hash(("Field", self.m))

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def __call__(self, value):
        """Coerce an int, Fraction or element of this field."""
        if isinstance(value, CycloNumber):
            if value.field != self:
                raise FieldMismatch(f"{value!r} does not lie in {self!r}")
            return value
        if self.degree == 1:
            return Fraction(value)
        value = Fraction(value)
        d = self.degree
        return CycloNumber(self, (value.numerator,) + (0,) * (d - 1), value.denominator)

    def from_coefficients(self, coeffs) -> object:
        """Element sum c_i zeta^i (any length; reduced modulo Phi_m)."""
        coeffs = [Fraction(c) for c in coeffs]
        if self.degree == 1:
            return sum((c * self.zeta ** i for i, c in enumerate(coeffs)), Fraction(0))
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        return CycloNumber.from_long(self, nums, den)

    def coefficients(self, x) -> tuple[Fraction, ...]:
        x = self(x)
        if self.degree == 1:
            return (x,)
        return tuple(Fraction(n, x.den) for n in x.nums)

    def root_of_unity(self, n: int):
        """The primitive n-th root zeta_m^(m/n); requires n | m (or n | 2 with m = 1)."""
        if n in (1, 2) and self.degree == 1:
            return Fraction(1 if n == 1 else -1)
        if self.m % n:
            raise ValueError(f"Q(zeta_{self.m}) has no distinguished primitive {n}-th root")
        return self.zeta ** (self.m // n)

    def format(self, x) -> str:
        return format_scalar(x)


def field_create(kind: str = "rationals", m: int = 1) -> Field:
    if kind == "rationals":
        return Field(1)
    if kind != "cyclotomic":
        raise ValueError(f"unknown field kind {kind!r}")
    return Field(m)


class CycloNumber:
    """An element of Q(zeta_m) for phi(m) > 1.  Immutable."""

    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, field: Field, nums: tuple, den: int):
        g = den
        for n in nums:
            if n:
                g = math.gcd(g, n)
                if g == 1:
                    break
        if den < 0:
            g = -g
        if g != 1:
            nums = tuple(n // g for n in nums)
            den //= g
        self.field = field
        self.nums = nums
        self.den = den
        self._hash = None

    @classmethod
    def from_long(cls, field, nums, den):
        d = field.degree
        if len(nums) <= d:
            return cls(field, tuple(nums) + (0,) * (d - len(nums)), den)
        out = [0] * d
        for k, c in enumerate(nums):
            if c:
                for i, t in enumerate(field._powers[k]):
                    if t:
                        out[i] += c * t
        return cls(field, tuple(out), den)

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("scalars from different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycloNumber(self.field, tuple(a + b for a, b in zip(self.nums, o.nums)), self.den)
        return CycloNumber(
            self.field,
            tuple(a * o.den + b * self.den for a, b in zip(self.nums, o.nums)),
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.field, tuple(-a for a in self.nums), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloNumber(self.field, tuple(a * other for a in self.nums), self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.nums, o.nums
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloNumber.from_long(self.field, prod, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.nums):
            raise DivisionByZero("division by zero in " + repr(self.field))
        inv = _poly_inverse_mod(list(self.nums), self.field.phi)
        return self.field.from_coefficients([c * self.den for c in inv])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            return self.field == other.field and self.nums == other.nums and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.field.m, self.nums, self.den))
        return self._hash

    def __repr__(self):
        return f"CycloNumber({format_scalar(self)}, m={self.field.m})"

    def __str__(self):
        return format_scalar(self)


def scalar_invert(x):
    """Multiplicative inverse; raises DivisionByZero for 0."""
    if isinstance(x, CycloNumber):
        return x.inverse()
    if x == 0:
        raise DivisionByZero("division by zero")
    return 1 / Fraction(x)


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, CycloNumber))


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_scalar(x) -> str:
    """Exact string form: "p/q" for rationals, a polynomial in z otherwise."""
    if not isinstance(x, CycloNumber):
        return format_rational(x)
    parts = []
    for i in reversed(range(len(x.nums))):
        n = x.nums[i]
        if not n:
            continue
        c = Fraction(n, x.den)
        mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{format_rational(mag)}*{mono}"
        else:
            body = format_rational(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def parse_scalar(text: str, field: Field):
    """Inverse of :func:`format_scalar` (also accepts any arithmetic in z)."""
    from .parsing import evaluate

    return field(evaluate(text, {"z": field.zeta}, field=field))


def resolve_half_power(field: Field, n: int, convention: str = ODD_POWER):
    """A square root of q = the distinguished primitive n-th root of unity.

    ``odd-power`` (n odd) returns q^((n+1)/2), which lies in Q(zeta_n).
    ``extend-to-2n`` returns the primitive 2n-th root zeta_2n of ``field``;
    the field must then be Q(zeta_m) with 2n | m, and q is taken as zeta_2n^2.
    """
    if convention == ODD_POWER:
        if n % 2 == 0:
            raise EvenOrderNeedsExtension(
                f"q of even order {n} has no square root among its powers"
            )
        q = field.root_of_unity(n)
        return q ** ((n + 1) // 2)
    if convention == EXTEND:
        return field.root_of_unity(2 * n)
    raise ValueError(f"unknown square-root convention {convention!r}")


def default_convention(n: int) -> str:
    return ODD_POWER if n % 2 else EXTEND


def quantum_parameters(n: int, convention: str | None = None):
    """(field, q, q^(1/2)) for q a primitive n-th root of unity.

    The field is Q(zeta_n) under the odd-power convention and Q(zeta_2n)
    otherwise, with q = zeta_2n^2 in the latter case.
    """
    convention = convention or default_convention(n)
    if convention == ODD_POWER:
        field = Field(n)
        q = field.root_of_unity(n)
    else:
        field = Field(2 * n)
        q = field.root_of_unity(2 * n) ** 2
    return field, q, resolve_half_power(field, n, convention)
