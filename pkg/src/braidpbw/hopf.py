"""Hopf algebras by structure tables or by rewriting to a PBW normal form.

Two presentations are provided.

* :class:`TableHopf`: a finite basis with a product table; coproduct, counit
  and antipode are given on algebra generators and extended along a fixed
  generator word for every basis element (kC2, Sweedler's T(2), ...).
* :class:`Rank1QuantumHopf`: U_q(sl2) and U_q(gl2) in the normal form
  F^a T^t E^c, with T^t a monomial in commuting invertible grouplikes and
  integer exponent vector t.  Grouplike exponents are stored directly.

Elements are :class:`HopfElem` (basis key -> scalar); elements of the
n-fold tensor power are :class:`Tensor` (tuple of keys -> scalar).
"""

from __future__ import annotations

from itertools import product as iproduct

from .errors import AssociativityFailure, BraidPBWError
from .linalg import axpy
from .parsing import evaluate
from .report import Report
from .scalars import Field, is_scalar
from .tensoralg import format_poly


class HopfElem:
    __slots__ = ("hopf", "terms")

    def __init__(self, hopf, terms: dict | None = None):
        self.hopf = hopf
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def _coerce(self, other):
        if isinstance(other, HopfElem):
            if other.hopf is not self.hopf:
                raise BraidPBWError("elements of different Hopf algebras")
            return other
        if is_scalar(other):
            return self.hopf.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        axpy(terms, 1, o.terms)
        return HopfElem(self.hopf, terms)

    __radd__ = __add__

    def __neg__(self):
        return HopfElem(self.hopf, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            return HopfElem(self.hopf, {k: c * other for k, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.hopf.mul(self, o)

    def __rmul__(self, other):
        if is_scalar(other):
            return HopfElem(self.hopf, {k: other * c for k, c in self.terms.items()})
        return NotImplemented

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self * (1 / other)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            inv = self.hopf.grouplike_inverse(self)
            if inv is None:
                raise BraidPBWError(f"negative power of non-grouplike element {self}")
            return inv ** (-k)
        out = self.hopf.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __matmul__(self, other):
        if is_scalar(other):
            other = self.hopf.scalar(other)
        if isinstance(other, HopfElem):
            return Tensor(self.hopf, {(a, b): ca * cb for a, ca in self.terms.items()
                                      for b, cb in other.terms.items()})
        if isinstance(other, Tensor):
            return Tensor(self.hopf, {(a,) + b: ca * cb for a, ca in self.terms.items()
                                      for b, cb in other.terms.items()})
        return NotImplemented

    def __rmatmul__(self, other):
        if is_scalar(other):
            return self.hopf.scalar(other) @ self
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, HopfElem) else other
        if o is None:
            return NotImplemented
        return self.hopf is o.hopf and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, key):
        return self.terms.get(key, 0)

    def __str__(self):
        h = self.hopf
        return format_poly(self.terms, h.key_str, order=lambda k: _neg_order(h.key_order(k)))

    def __repr__(self):
        return f"HopfElem({self})"


def _neg_order(order):
    # format_poly prints in decreasing order; basis order should read increasing
    return tuple(-x if isinstance(x, int) else x for x in order)


class Tensor:
    """Element of H^{(x) n}; keys are n-tuples of basis keys."""

    __slots__ = ("hopf", "terms")

    def __init__(self, hopf, terms: dict | None = None):
        self.hopf = hopf
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @property
    def legs(self):
        return len(next(iter(self.terms))) if self.terms else 0

    def __add__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        terms = dict(self.terms)
        axpy(terms, 1, other.terms)
        return Tensor(self.hopf, terms)

    def __neg__(self):
        return Tensor(self.hopf, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if is_scalar(other):
            return Tensor(self.hopf, {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, Tensor):
            return NotImplemented
        h = self.hopf
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                legs = [h.mul_keys(a, b) for a, b in zip(k1, k2)]
                base = c1 * c2
                for combo in iproduct(*[list(l.items()) for l in legs]):
                    coef = base
                    for _, c in combo:
                        coef = coef * c
                    key = tuple(k for k, _ in combo)
                    axpy(out, coef, {key: 1})
        return Tensor(h, out)

    def __rmul__(self, other):
        return self * other if is_scalar(other) else NotImplemented

    def __matmul__(self, other):
        if is_scalar(other):
            other = self.hopf.scalar(other)
        if isinstance(other, HopfElem):
            other = Tensor(self.hopf, {(k,): c for k, c in other.terms.items()})
        if not isinstance(other, Tensor):
            return NotImplemented
        return Tensor(self.hopf, {a + b: ca * cb for a, ca in self.terms.items()
                                  for b, cb in other.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def map_leg(self, i: int, fn) -> "Tensor":
        """Apply on leg i a linear map sending a key to a dict {tuple of keys: coef}."""
        out: dict = {}
        for key, c in self.terms.items():
            for image, ci in fn(key[i]).items():
                axpy(out, c * ci, {key[:i] + image + key[i + 1:]: 1})
        return Tensor(self.hopf, out)

    def permute(self, order) -> "Tensor":
        """Leg permutation: new leg j is old leg order[j]."""
        return Tensor(self.hopf, {tuple(k[i] for i in order): c for k, c in self.terms.items()})

    def embed(self, legs: int, positions) -> "Tensor":
        """Place this tensor's legs at ``positions`` of a ``legs``-fold tensor, 1 elsewhere."""
        u = self.hopf.unit_key
        out = {}
        for k, c in self.terms.items():
            full = [u] * legs
            for p, x in zip(positions, k):
                full[p] = x
            out[tuple(full)] = c
        return Tensor(self.hopf, out)

    def __str__(self):
        h = self.hopf
        return format_poly(self.terms, lambda k: "(" + " @ ".join(h.key_str(x) for x in k) + ")",
                           order=lambda k: tuple(_neg_order(h.key_order(x)) for x in k))

    def __repr__(self):
        return f"Tensor({self})"


class HopfAlgebra:
    """Common interface: subclasses implement the structure on basis keys."""

    name = "H"
    finite = False

    def __init__(self, field: Field):
        self.field = field
        self._mul_cache: dict = {}
        self._delta_cache: dict = {}
        self._s_cache: dict = {}

    # subclasses provide: unit_key, generators, generator_keys, key_str,
    # key_order, _mul_keys, _coproduct_key, counit_key, _antipode_key,
    # factors, basis_keys

    def elem(self, terms) -> HopfElem:
        return HopfElem(self, terms)

    def one(self) -> HopfElem:
        return HopfElem(self, {self.unit_key: self.field.one})

    def scalar(self, c) -> HopfElem:
        return HopfElem(self, {self.unit_key: self.field(c)})

    def basis_elem(self, key) -> HopfElem:
        return HopfElem(self, {key: self.field.one})

    def gen(self, name: str) -> HopfElem:
        return self.basis_elem(self.generator_keys[name])

    def namespace(self) -> dict:
        return {name: self.gen(name) for name in self.generators}

    def parse(self, text: str, integers: dict | None = None, scalars: dict | None = None):
        ns = dict(scalars or {})
        ns.update(self.namespace())
        value = evaluate(text, ns, integers, self.field, unit=self.one())
        if is_scalar(value):
            value = self.scalar(value)
        return value

    def mul_keys(self, a, b) -> dict:
        key = (a, b)
        out = self._mul_cache.get(key)
        if out is None:
            out = self._mul_keys(a, b)
            self._mul_cache[key] = out
        return out

    def mul(self, x: HopfElem, y: HopfElem) -> HopfElem:
        out: dict = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                axpy(out, ca * cb, self.mul_keys(a, b))
        return HopfElem(self, out)

    def coproduct_key(self, k) -> dict:
        out = self._delta_cache.get(k)
        if out is None:
            out = self._coproduct_key(k)
            self._delta_cache[k] = out
        return out

    def antipode_key(self, k) -> dict:
        out = self._s_cache.get(k)
        if out is None:
            out = self._antipode_key(k)
            self._s_cache[k] = out
        return out

    def grouplike_inverse(self, x: HopfElem):
        if len(x.terms) != 1:
            return None
        (k, c), = x.terms.items()
        if self.coproduct_key(k) != {(k, k): 1} or c != 1:
            return None
        return antipode(x)


def hopf_mul(h1: HopfElem, h2: HopfElem) -> HopfElem:
    return h1 * h2


def coproduct(h: HopfElem) -> Tensor:
    H = h.hopf
    out: dict = {}
    for k, c in h.terms.items():
        axpy(out, c, H.coproduct_key(k))
    return Tensor(H, out)


def counit(h: HopfElem):
    H = h.hopf
    return sum((c * H.counit_key(k) for k, c in h.terms.items()), H.field.zero)


def antipode(h: HopfElem) -> HopfElem:
    H = h.hopf
    out: dict = {}
    for k, c in h.terms.items():
        axpy(out, c, H.antipode_key(k))
    return HopfElem(H, out)


def multiply_legs(t: Tensor) -> HopfElem:
    """m: H (x) H -> H (or the full product of all legs)."""
    H = t.hopf
    out: dict = {}
    for key, c in t.terms.items():
        cur = {key[0]: c}
        for k in key[1:]:
            nxt: dict = {}
            for a, ca in cur.items():
                axpy(nxt, ca, H.mul_keys(a, k))
            cur = nxt
        axpy(out, 1, cur)
    return HopfElem(H, out)


def adjoint_act(h: HopfElem, ell: HopfElem) -> HopfElem:
    """Left adjoint action sum h1 ell S(h2)."""
    H = h.hopf
    out = HopfElem(H)
    for (k1, k2), c in coproduct(h).terms.items():
        out = out + H.basis_elem(k1) * ell * antipode(H.basis_elem(k2)) * c
    return out


def is_central(h: HopfElem) -> bool:
    H = h.hopf
    for name in H.generators:
        g = H.gen(name)
        if g * h != h * g:
            return False
    return True


# ---------------------------------------------------------------- tables


class TableHopf(HopfAlgebra):
    """Finite-dimensional Hopf algebra given by a multiplication table.

    ``product[(b1, b2)]`` is a dict basis -> scalar.  Generator data:
    ``gen_delta[g]`` a dict (b1, b2) -> scalar, ``gen_counit[g]`` a scalar,
    ``gen_antipode[g]`` a dict basis -> scalar; ``words[b]`` writes each basis
    element as a product of generators (the unit's word is empty).
    """

    finite = True

    def __init__(self, name, field, basis, product, gen_delta, gen_counit,
                 gen_antipode, words, unit="1"):
        super().__init__(field)
        self.name = name
        self.basis = list(basis)
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.unit_key = unit
        self.product = {k: {b: field(c) for b, c in v.items() if c} for k, v in product.items()}
        self.generators = list(gen_delta)
        self.generator_keys = {g: g for g in self.generators}
        for g in self.generators:
            if g not in self.index:
                raise BraidPBWError(f"generator {g!r} must be a basis element")
        self.gen_delta = {g: {k: field(c) for k, c in d.items() if c} for g, d in gen_delta.items()}
        self.gen_counit = {g: field(c) for g, c in gen_counit.items()}
        self.gen_antipode = {g: {k: field(c) for k, c in d.items() if c} for g, d in gen_antipode.items()}
        self.words = {b: list(w) for b, w in words.items()}
        for b in self.basis:
            if b not in self.words:
                raise BraidPBWError(f"no generator word for basis element {b!r}")

    def key_str(self, k):
        return k

    def key_order(self, k):
        return (self.index[k],)

    def namespace(self):
        ns = {b: self.basis_elem(b) for b in self.basis if b != self.unit_key}
        return ns

    def _mul_keys(self, a, b):
        if a == self.unit_key:
            return {b: self.field.one}
        if b == self.unit_key:
            return {a: self.field.one}
        try:
            return self.product[(a, b)]
        except KeyError:
            raise BraidPBWError(f"product table has no entry for {a}*{b}") from None

    def _coproduct_key(self, k):
        t = Tensor(self, {(self.unit_key, self.unit_key): self.field.one})
        for g in self.words[k]:
            t = t * Tensor(self, self.gen_delta[g])
        return t.terms

    def counit_key(self, k):
        out = self.field.one
        for g in self.words[k]:
            out = out * self.gen_counit[g]
        return out

    def _antipode_key(self, k):
        x = self.one()
        for g in reversed(self.words[k]):
            x = x * HopfElem(self, self.gen_antipode[g])
        return x.terms

    def factors(self, k):
        return [(g, 1) for g in self.words[k]]

    def basis_keys(self, bound=None):
        return list(self.basis)


def kc2(field: Field | None = None) -> TableHopf:
    """The group algebra of the cyclic group of order 2."""
    field = field or Field(1)
    return TableHopf(
        "kC2", field, ["1", "g"], {("g", "g"): {"1": 1}},
        gen_delta={"g": {("g", "g"): 1}}, gen_counit={"g": 1},
        gen_antipode={"g": {"g": 1}}, words={"1": [], "g": ["g"]},
    )


def sweedler(field: Field | None = None) -> TableHopf:
    """Sweedler's four-dimensional algebra T(2): g^2 = 1, x^2 = 0, gx = -xg."""
    field = field or Field(1)
    names = {(0, 0): "1", (1, 0): "g", (0, 1): "x", (1, 1): "gx"}
    product = {}
    for (a, b), n1 in names.items():
        for (c, d), n2 in names.items():
            if b + d >= 2:
                product[(n1, n2)] = {}
            else:
                product[(n1, n2)] = {names[((a + c) % 2, b + d)]: (-1) ** (b * c)}
    return TableHopf(
        "T2", field, ["1", "g", "x", "gx"], product,
        gen_delta={"g": {("g", "g"): 1}, "x": {("x", "1"): 1, ("g", "x"): 1}},
        gen_counit={"g": 1, "x": 0},
        gen_antipode={"g": {"g": 1}, "x": {"gx": -1}},
        words={"1": [], "g": ["g"], "x": ["x"], "gx": ["g", "x"]},
    )


def trivial_hopf(field: Field | None = None) -> TableHopf:
    """The one-dimensional Hopf algebra k."""
    field = field or Field(1)
    return TableHopf("k", field, ["1"], {}, {}, {}, {}, {"1": []})


# ---------------------------------------------------------------- rank one


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _vadd(a, b, sign=1):
    return tuple(x + sign * y for x, y in zip(a, b))


class Rank1QuantumHopf(HopfAlgebra):
    """Rank-one quantum group in the normal form F^a T^t E^c.

    ``torus`` names r commuting grouplikes T_1..T_r; E and F are weight
    vectors: T^t E = q^<eE,t> E T^t and T^t F = q^<eF,t> F T^t.  The
    commutator is EF - FE = (T^k - T^-k)/(q - q^-1), Delta(E) = E(x)1 + T^k(x)E,
    Delta(F) = F(x)T^-k + 1(x)F.
    """

    def __init__(self, name, field, q, torus, eE, eF, k, n):
        super().__init__(field)
        self.name = name
        self.q = q
        self.n = n
        self.torus = list(torus)
        self.r = len(self.torus)
        self.eE, self.eF, self.k = tuple(eE), tuple(eF), tuple(k)
        self.zero_t = (0,) * self.r
        self.unit_key = (0, self.zero_t, 0)
        self.generators = ["E", "F"] + self.torus
        self.generator_keys = {"E": (0, self.zero_t, 1), "F": (1, self.zero_t, 0)}
        for i, t in enumerate(self.torus):
            vec = tuple(1 if j == i else 0 for j in range(self.r))
            self.generator_keys[t] = (0, vec, 0)
        self._qinv_diff = 1 / (q - 1 / q)
        self._qpow = {}
        self.aliases: dict = {}
        self._check_confluence()

    def qpow(self, e: int):
        v = self._qpow.get(e)
        if v is None:
            v = self.q ** e
            self._qpow[e] = v
        return v

    def namespace(self):
        ns = {name: self.gen(name) for name in self.generators}
        for alias, text in self.aliases.items():
            ns[alias] = evaluate(text, dict(ns), None, self.field, unit=self.one())
        return ns

    def key_str(self, key):
        a, t, c = key
        parts = []
        if a:
            parts.append("F" if a == 1 else f"F^{a}")
        for name, e in zip(self.torus, t):
            if e:
                parts.append(name if e == 1 else (f"{name}^{e}" if e > 0 else f"{name}^({e})"))
        if c:
            parts.append("E" if c == 1 else f"E^{c}")
        return ".".join(parts) if parts else "1"

    def key_order(self, key):
        a, t, c = key
        return (a + c + sum(abs(x) for x in t), a, c) + tuple(t)

    def _times_F(self, key) -> dict:
        a, t, c = key
        out = {(a + 1, t, c): self.qpow(_dot(self.eF, t))}
        if c:
            ek = _dot(self.eE, self.k)
            tp, tm = _vadd(t, self.k), _vadd(t, self.k, -1)
            cp = cm = self.field.zero
            for j in range(c):
                cp = cp + self.qpow(-j * ek)
                cm = cm + self.qpow(j * ek)
            axpy(out, cp * self._qinv_diff, {(a, tp, c - 1): 1})
            axpy(out, -cm * self._qinv_diff, {(a, tm, c - 1): 1})
        return out

    def _mul_keys(self, x, y):
        a2, t2, c2 = y
        cur = {x: self.field.one}
        for _ in range(a2):
            nxt: dict = {}
            for key, c in cur.items():
                axpy(nxt, c, self._times_F(key))
            cur = nxt
        if any(t2):
            cur = {(a, _vadd(t, t2), c): coef * self.qpow(-c * _dot(self.eE, t2))
                   for (a, t, c), coef in cur.items()}
        if c2:
            cur = {(a, t, c + c2): coef for (a, t, c), coef in cur.items()}
        return {k: v for k, v in cur.items() if v}

    def _gen_tensor(self, which):
        one = self.field.one
        z, u = self.zero_t, self.unit_key
        if which == "E":
            return Tensor(self, {((0, z, 1), u): one, ((0, self.k, 0), (0, z, 1)): one})
        kinv = tuple(-x for x in self.k)
        return Tensor(self, {((1, z, 0), (0, kinv, 0)): one, (u, (1, z, 0)): one})

    def _coproduct_key(self, key):
        a, t, c = key
        if a == 0 and c == 0:
            return {((0, t, 0), (0, t, 0)): self.field.one}
        if a > 0:
            rest = Tensor(self, self.coproduct_key((a - 1, t, c)))
            return (self._gen_tensor("F") * rest).terms
        rest = Tensor(self, self.coproduct_key((0, t, c - 1)))
        return (rest * self._gen_tensor("E")).terms

    def counit_key(self, key):
        a, _, c = key
        return self.field.one if a == 0 and c == 0 else self.field.zero

    def _antipode_key(self, key):
        # S(F^a T^t E^c) = S(E)^c T^-t S(F)^a with S(E) = -T^-k E, S(F) = -F T^k
        a, t, c = key
        kinv = tuple(-x for x in self.k)
        sE = HopfElem(self, {(0, kinv, 1): -self.field.one})
        sF = HopfElem(self, {(1, self.k, 0): -self.field.one})
        out = self.one()
        for _ in range(c):
            out = out * sE
        out = out * HopfElem(self, {(0, tuple(-x for x in t), 0): self.field.one})
        for _ in range(a):
            out = out * sF
        return out.terms

    def factors(self, key):
        a, t, c = key
        out = [("F", a)] if a else []
        out += [(name, e) for name, e in zip(self.torus, t) if e]
        if c:
            out.append(("E", c))
        return out

    def basis_keys(self, bound: int):
        """Normal words of total size a + c + sum|t_i| at most ``bound``."""
        out = []
        for size in range(bound + 1):
            for a in range(size + 1):
                for c in range(size - a + 1):
                    rest = size - a - c
                    for t in _torus_vectors(self.r, rest):
                        out.append((a, t, c))
        return out

    def _check_confluence(self):
        """Associativity of the rewriting on all triples of generators and inverses."""
        keys = [self.generator_keys["E"], self.generator_keys["F"]]
        for i in range(self.r):
            for s in (1, -1):
                keys.append((0, tuple(s if j == i else 0 for j in range(self.r)), 0))
        for x, y, z in iproduct(keys, repeat=3):
            X, Y, Z = (self.basis_elem(k) for k in (x, y, z))
            left, right = (X * Y) * Z, X * (Y * Z)
            if left != right:
                raise AssociativityFailure((x, y, z), left, right)


def _torus_vectors(r, size):
    if r == 0:
        return [()] if size == 0 else []
    if r == 1:
        return [(size,), (-size,)] if size else [(0,)]
    out = []
    for first in range(-size, size + 1):
        for rest in _torus_vectors(r - 1, size - abs(first)):
            out.append((first,) + rest)
    return out


def uqsl2(n: int, convention: str | None = None, field=None, q=None):
    """U_q(sl2) at q a primitive n-th root of unity (full algebra, no quotient)."""
    from .scalars import quantum_parameters

    if field is None or q is None:
        field, q, _ = quantum_parameters(n, convention)
    return Rank1QuantumHopf(f"Uqsl2({n})", field, q, ["K"], (2,), (-2,), (1,), n)


def uqgl2(n: int, convention: str | None = None, field=None, q=None):
    """U_q(gl2) with grouplikes G1, G2; K is available as the alias G1*G2^-1."""
    from .scalars import quantum_parameters

    if field is None or q is None:
        field, q, _ = quantum_parameters(n, convention)
    h = Rank1QuantumHopf(f"Uqgl2({n})", field, q, ["G1", "G2"], (1, -1), (-1, 1), (1, -1), n)
    h.aliases = {"K": "G1*G2^-1"}
    return h


# ---------------------------------------------------------------- axioms


def _tensor_of(h: HopfElem) -> Tensor:
    return Tensor(h.hopf, {(k,): c for k, c in h.terms.items()})


def check_hopf_axioms(H: HopfAlgebra, degree_bound: int = 4) -> Report:
    """Bounded verification of the bialgebra and antipode axioms.

    Checks, on every basis element (normal words up to ``degree_bound`` for
    infinite presentations): coassociativity, both counit laws, both
    antipode laws, and multiplicativity of Delta and epsilon on products
    with each generator.  For finite tables associativity is checked on all
    basis triples too.
    """
    rep = Report("hopf-axioms", {"hopf": H.name, "degree_bound": degree_bound})
    keys = H.basis_keys(degree_bound)
    one = H.one()

    def label(item):
        if isinstance(item, list):
            return " * ".join(H.key_str(k) for k in item)
        return H.key_str(item)

    def first_failure(name, items, test):
        for item in items:
            ok, detail = test(item)
            if not ok:
                rep.add(name, False, witness={"element": label(item), **detail})
                return
        rep.add(name, True)

    def coassoc(k):
        d = Tensor(H, H.coproduct_key(k))
        left = d.map_leg(0, H.coproduct_key)
        right = d.map_leg(1, H.coproduct_key)
        return left == right, {"left": str(left), "right": str(right)}

    def counit_law(k):
        h = H.basis_elem(k)
        d = H.coproduct_key(k)
        left = HopfElem(H, {})
        right = HopfElem(H, {})
        for (a, b), c in d.items():
            left = left + H.basis_elem(b) * (c * H.counit_key(a))
            right = right + H.basis_elem(a) * (c * H.counit_key(b))
        ok = left == h and right == h
        return ok, {"eps_id": str(left), "id_eps": str(right)}

    def antipode_law(k):
        d = H.coproduct_key(k)
        left = HopfElem(H, {})
        right = HopfElem(H, {})
        for (a, b), c in d.items():
            left = left + antipode(H.basis_elem(a)) * H.basis_elem(b) * c
            right = right + H.basis_elem(a) * antipode(H.basis_elem(b)) * c
        target = one * H.counit_key(k)
        return left == target and right == target, {"S_id": str(left), "id_S": str(right)}

    def multiplicative(pair):
        g, k = pair
        x, y = H.basis_elem(g), H.basis_elem(k)
        d = coproduct(x * y)
        dd = Tensor(H, H.coproduct_key(g)) * Tensor(H, H.coproduct_key(k))
        eps_ok = counit(x * y) == H.counit_key(g) * H.counit_key(k)
        return d == dd and eps_ok, {"delta_of_product": str(d), "product_of_deltas": str(dd)}

    first_failure("coassociativity", keys, coassoc)
    first_failure("counit", keys, counit_law)
    first_failure("antipode", keys, antipode_law)
    gen_keys = [H.generator_keys[g] for g in H.generators]
    pair_keys = keys if H.finite else H.basis_keys(max(degree_bound - 1, 0))
    first_failure("multiplicativity", [[g, k] for g in gen_keys for k in pair_keys], multiplicative)
    if H.finite:
        def assoc(triple):
            x, y, z = (H.basis_elem(k) for k in triple)
            left, right = (x * y) * z, x * (y * z)
            return left == right, {"left": str(left), "right": str(right)}
        first_failure("associativity", [list(t) for t in iproduct(keys, repeat=3)], assoc)
    return rep


def hopf_from_document(doc: dict, field: Field | None = None) -> HopfAlgebra:
    """Build a Hopf algebra from a declarative document.

    Built-ins: ``{"builtin": "kC2" | "T2" | "k" | "Uqsl2" | "Uqgl2", "n": ...}``.
    Tables: ``{"basis": [...], "words": {b: [gens]}, "product": {"b1*b2": "expr"},
    "coproduct": {g: "expr in a@b"}, "counit": {g: "c"}, "antipode": {g: "expr"}}``;
    missing product entries default to zero.
    """
    from .scalars import default_convention, parse_scalar

    if "builtin" in doc:
        name = doc["builtin"]
        if name == "kC2":
            return kc2(field)
        if name == "T2":
            return sweedler(field)
        if name == "k":
            return trivial_hopf(field)
        if name in ("Uqsl2", "Uqgl2"):
            n = int(doc["n"])
            conv = doc.get("convention") or default_convention(n)
            return (uqsl2 if name == "Uqsl2" else uqgl2)(n, conv)
        raise BraidPBWError(f"unknown built-in Hopf algebra {name!r}")
    field = field or Field(int(doc.get("m", 1)))
    basis = list(doc["basis"])
    unit = doc.get("unit", "1")
    words = {b: list(w) for b, w in doc["words"].items()}
    words.setdefault(unit, [])
    gens = list(doc["coproduct"])
    # a scratch algebra with an empty product parses linear combinations
    scratch = TableHopf("scratch", field, basis, {}, {g: {} for g in gens},
                        {g: 0 for g in gens}, {g: {} for g in gens}, words, unit)

    def lin(text):
        value = evaluate(str(text), scratch.namespace(), None, field, unit=scratch.one())
        return scratch.scalar(value) if is_scalar(value) else value

    product = {}
    for b1 in basis:
        for b2 in basis:
            if unit not in (b1, b2):
                product[(b1, b2)] = {}
    for key, text in doc.get("product", {}).items():
        b1, b2 = (x.strip() for x in key.split("*"))
        if (b1, b2) not in product:
            raise BraidPBWError(f"bad product table key {key!r}")
        product[(b1, b2)] = lin(text).terms
    delta = {g: lin(text).terms for g, text in doc["coproduct"].items()}
    counits = {g: parse_scalar(str(v), field) for g, v in doc["counit"].items()}
    antipodes = {g: lin(text).terms for g, text in doc["antipode"].items()}
    return TableHopf(doc.get("name", "H"), field, basis, product, delta, counits,
                     antipodes, words, unit)


