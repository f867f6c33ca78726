"""Noncommutative polynomials on a finite generator set and their subspaces.

Words are tuples of generator indices; the empty tuple is the unit.  Words
of equal length are ordered lexicographically by index, so the generator
order fixed at :class:`GenSet` creation determines the degree-lex word
order used for pivots, leading words and printing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import AmbientMismatch, GenSetMismatch
from .linalg import Eliminator, SolutionSpace, axpy, solve_linear  # noqa: F401
from .parsing import evaluate
from .scalars import CycloNumber, format_scalar, is_scalar


class GenSet:
    """Ordered list of distinct degree-one generator names."""

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"generator names not distinct: {self.names}")
        self.index = {n: i for i, n in enumerate(self.names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, GenSet) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"GenSet({list(self.names)})"

    def word(self, text: str) -> tuple:
        """Word from dot-separated names, e.g. ``"u.v'.u"``."""
        if not text:
            return ()
        return tuple(self.index[n] for n in text.split("."))

    def word_str(self, word: tuple) -> str:
        return ".".join(self.names[i] for i in word) if word else "1"

    def gen(self, name: str) -> "NcPoly":
        return NcPoly(self, {(self.index[name],): Fraction(1)})

    def gens(self) -> list["NcPoly"]:
        return [self.gen(n) for n in self.names]

    def words(self, degree: int) -> list[tuple]:
        """All words of the given length, in increasing word order."""
        out = [()]
        for _ in range(degree):
            out = [w + (i,) for w in out for i in range(len(self.names))]
        return out

    def __add__(self, other: "GenSet") -> "GenSet":
        return GenSet(self.names + other.names)


class NcPoly:
    """Element of the free algebra k<gens>: a finite map word -> scalar."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GenSet, terms: dict | None = None):
        self.gens = gens
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    # construction

    @classmethod
    def zero(cls, gens):
        return cls(gens, {})

    @classmethod
    def one(cls, gens):
        return cls(gens, {(): Fraction(1)})

    @classmethod
    def scalar(cls, gens, c):
        return cls(gens, {(): c})

    @classmethod
    def parse(cls, text: str, gens: GenSet, scalars: dict | None = None,
              field=None, integers: dict | None = None) -> "NcPoly":
        """Parse e.g. ``"v.u' - s*u'.v - (s^-1 - s^3)*v'.u"``."""
        namespace = dict(scalars or {})
        clash = set(namespace) & set(gens.names)
        if clash:
            raise ValueError(f"names used both as scalars and generators: {sorted(clash)}")
        for n in gens.names:
            namespace[n] = gens.gen(n)
        value = evaluate(text, namespace, integers, field)
        if is_scalar(value):
            value = cls.scalar(gens, value)
        return value

    # arithmetic

    def _check(self, other):
        if other.gens != self.gens:
            raise GenSetMismatch(f"{self.gens} vs {other.gens}")

    def __add__(self, other):
        if is_scalar(other):
            other = NcPoly.scalar(self.gens, other)
        elif not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        axpy(terms, 1, other.terms)
        return NcPoly(self.gens, terms)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly(self.gens, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            return NcPoly(self.gens, {w: c * other for w, c in self.terms.items()})
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = terms.get(w, 0) + c1 * c2
                if v:
                    terms[w] = v
                else:
                    terms.pop(w, None)
        return NcPoly(self.gens, terms)

    def __rmul__(self, other):
        if is_scalar(other):
            return NcPoly(self.gens, {w: other * c for w, c in self.terms.items()})
        return NotImplemented

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self * (1 / Fraction(other) if not isinstance(other, CycloNumber) else other.inverse())

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers of polynomials")
        out = NcPoly.one(self.gens)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if is_scalar(other):
            other = NcPoly.scalar(self.gens, other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # structure

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def homogeneous(self, d: int) -> "NcPoly":
        return NcPoly(self.gens, {w: c for w, c in self.terms.items() if len(w) == d})

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {len(w) for w in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or d in degs)

    def coefficient(self, word) -> object:
        if isinstance(word, str):
            word = self.gens.word(word)
        return self.terms.get(tuple(word), 0)

    def leading_word(self):
        return max(self.terms, key=lambda w: (len(w), w)) if self.terms else None

    def sorted_terms(self):
        """Terms in decreasing degree-lex order."""
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]), reverse=True)

    def rename(self, gens: GenSet, mapping: dict | None = None) -> "NcPoly":
        """Re-express over ``gens``; ``mapping`` sends old names to new names."""
        mapping = mapping or {}
        idx = [gens.index[mapping.get(n, n)] for n in self.gens.names]
        return NcPoly(gens, {tuple(idx[i] for i in w): c for w, c in self.terms.items()})

    def reversed(self) -> "NcPoly":
        return NcPoly(self.gens, {w[::-1]: c for w, c in self.terms.items()})

    def __str__(self):
        return format_poly(self.terms, self.gens.word_str, order=lambda w: (len(w), w))

    def __repr__(self):
        return f"NcPoly({self})"


def _coef_str(c) -> str:
    s = format_scalar(c)
    if isinstance(c, CycloNumber) and (" " in s or "*" in s or "z" in s):
        return f"({s})"
    return s


def format_poly(terms: dict, key_str, order) -> str:
    """Deterministic "c*key + ..." rendering in decreasing ``order``."""
    if not terms:
        return "0"
    out = []
    for key, c in sorted(terms.items(), key=lambda t: order(t[0]), reverse=True):
        body = key_str(key)
        neg = False
        if isinstance(c, CycloNumber) and not c.is_rational():
            coef = _coef_str(c)
        else:
            r = Fraction(c.nums[0], c.den) if isinstance(c, CycloNumber) else Fraction(c)
            neg = r < 0
            coef = format_scalar(abs(r))
        if body == "1":
            text = coef
        elif coef == "1":
            text = body
        else:
            text = f"{coef}*{body}"
        out.append(("-" if neg else "+", text))
    s = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, text in out[1:]:
        s += f" {sign} {text}"
    return s


class Subspace:
    """Span of homogeneous degree-d polynomials, with exact membership tests.

    The spanning list is kept (``spanning``) so that members can be written
    in its coordinates; ``basis`` is the canonical reduced echelon basis.
    """

    def __init__(self, gens: GenSet, degree: int, spanning: Iterable[NcPoly] = ()):
        self.gens = gens
        self.degree = degree
        self.spanning: list[NcPoly] = []
        self._elim = Eliminator(track=True)
        self._independent: list[int] = []
        for p in spanning:
            self.add(p)

    def add(self, p: NcPoly):
        if p.gens != self.gens:
            raise GenSetMismatch(f"{p.gens} vs {self.gens}")
        if not p.is_homogeneous(self.degree):
            if p:
                raise AmbientMismatch(f"{p} is not homogeneous of degree {self.degree}")
        i = len(self.spanning)
        self.spanning.append(p)
        if self._elim.insert(p.terms, i) is None:
            self._independent.append(i)

    @property
    def dim(self) -> int:
        return self._elim.rank

    def __len__(self):
        return self.dim

    @property
    def basis(self) -> list[NcPoly]:
        return [NcPoly(self.gens, row) for _, row, _ in self._elim.reduced_rows()]

    def contains(self, p: NcPoly) -> bool:
        return not self._elim.reduce(p.terms)[0]

    __contains__ = contains

    def residue(self, p: NcPoly) -> NcPoly:
        return NcPoly(self.gens, self._elim.reduce(p.terms)[0])

    def coordinates(self, p: NcPoly) -> dict | None:
        """``{i: c}`` with p = sum c * spanning[i], or None if p is not a member."""
        residual, combo = self._elim.reduce(p.terms, {})
        if residual:
            return None
        return {i: -c for i, c in combo.items() if c}

    def _check_ambient(self, other):
        if other.gens != self.gens or other.degree != self.degree:
            raise AmbientMismatch(
                f"degree {self.degree} over {self.gens} vs degree {other.degree} over {other.gens}"
            )

    def __le__(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.gens == other.gens and self.degree == other.degree and \
            self.dim == other.dim and self <= other

    __hash__ = None

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace(self.gens, self.degree, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, degree={self.degree}, gens={list(self.gens)})"


def intersection_kernel(left: list[NcPoly], right: list[NcPoly]):
    """All solutions of ``sum a_i left_i = sum b_j right_j``.

    Returns a list of ``(element, a, b)`` with ``a``/``b`` sparse coefficient
    dicts; the elements span the intersection of the two spans and, when
    both lists are independent, form a basis of it in reduced echelon form.
    """
    elim = Eliminator(track=True)
    deps = []
    for i, p in enumerate(left):
        d = elim.insert(p.terms, ("L", i))
        if d is not None:
            deps.append(d)
    for j, p in enumerate(right):
        d = elim.insert(p.terms, ("R", j))
        if d is not None:
            deps.append(d)
    gens = left[0].gens if left else (right[0].gens if right else None)
    # a dependency sum c_t v_t = 0 gives sum_L c v = -sum_R c v
    canon = Eliminator(track=True)
    for k, dep in enumerate(deps):
        elem: dict = {}
        for (side, i), c in dep.items():
            if side == "L":
                axpy(elem, c, left[i].terms)
        if elem:
            canon.insert(elem, k)
    out = []
    for _, row, combo in canon.reduced_rows():
        a: dict = {}
        b: dict = {}
        for k, ck in combo.items():
            for (side, i), c in deps[k].items():
                if side == "L":
                    axpy(a, ck * c, {i: 1})
                else:
                    axpy(b, -ck * c, {i: 1})
        out.append((NcPoly(gens, row), a, b))
    return out


def subspace_intersect(s1: Subspace, s2: Subspace) -> Subspace:
    s1._check_ambient(s2)
    elems = intersection_kernel(s1.basis, s2.basis)
    return Subspace(s1.gens, s1.degree, [e for e, _, _ in elems])


def tensor_spaces(relations: list[NcPoly], gens: GenSet, left: int, right: int) -> list[NcPoly]:
    """Spanning list of W^left (x) span(relations) (x) W^right."""
    out = []
    for lw in gens.words(left):
        lp = NcPoly(gens, {lw: Fraction(1)})
        for r in relations:
            for rw in gens.words(right):
                out.append(lp * r * NcPoly(gens, {rw: Fraction(1)}))
    return out
