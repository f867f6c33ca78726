"""Braided opposites, braided and twisted tensor products, smash products.

Tensors of generators are dicts ``{(i, j): c}`` with i indexing the first
module's generators and j the second's.  A braiding ``c_{M,N}`` sends
M (x) N to N (x) M.

Product conventions: ``braided_product(first, second, c)`` is presented on
the generators of ``first`` followed by those of ``second``; its mixed
relations are ``y.x - m(c(y (x) x))`` for y a generator of ``second`` and x a
generator of ``first``, so every mixed image word is a first-letter
followed by a second-letter.  ``twisted_tensor`` uses the same shape with
the twist table in place of ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from itertools import product as iproduct

from .errors import (AssociativityFailure, BraidPBWError, NotKEigenvector,
                     NotModuleMap)
from .hopf import HopfAlgebra, HopfElem, Rank1QuantumHopf, Tensor, coproduct
from .linalg import Eliminator, axpy
from .modalg import ActionSpec, QuadraticPresentation, check_module_algebra
from .parsing import evaluate
from .report import Report
from .scalars import is_scalar
from .tensoralg import GenSet, NcPoly, format_poly


@dataclass
class ModuleAlgebra:
    """A quadratic H-module algebra: presentation plus action on generators."""

    pres: QuadraticPresentation
    action: ActionSpec
    name: str = ""
    notes: list = dfield(default_factory=list)

    @property
    def gens(self) -> GenSet:
        return self.pres.gens

    @property
    def hopf(self) -> HopfAlgebra:
        return self.action.hopf


def prime_names(gens: GenSet, mark: str = "'") -> GenSet:
    return GenSet([n + mark for n in gens.names])


def act_on_tensor(key, modules, index_tuple) -> dict:
    """Action of a Hopf basis key on m_1 (x) ... (x) m_k (generator indices)."""
    H = modules[0].hopf
    if len(modules) == 1:
        return {(i,): c for i, c in modules[0].key_matrix(key)[index_tuple[0]].items()}
    out: dict = {}
    for (k1, k2), c in H.coproduct_key(key).items():
        head = modules[0].key_matrix(k1)[index_tuple[0]]
        if not head:
            continue
        tail = act_on_tensor(k2, modules[1:], index_tuple[1:])
        for i, c1 in head.items():
            for rest, c2 in tail.items():
                axpy(out, c * c1 * c2, {(i,) + rest: 1})
    return out


def act_tensor_elem(h: HopfElem, modules, x: dict) -> dict:
    out: dict = {}
    for key, ch in h.terms.items():
        for idx, cx in x.items():
            axpy(out, ch * cx, act_on_tensor(key, modules, idx))
    return out


# ---------------------------------------------------------------- braidings


class Braiding:
    kind = "abstract"

    def apply(self, M: ActionSpec, N: ActionSpec, x: dict) -> dict:
        raise NotImplementedError


class RMatrixBraiding(Braiding):
    """c(m (x) n) = sum R1.n (x) R2.m for R = sum R1 (x) R2."""

    kind = "rmatrix"

    def __init__(self, R: Tensor):
        self.R = R

    def apply(self, M, N, x):
        out: dict = {}
        for (k1, k2), cr in self.R.terms.items():
            m1 = N.key_matrix(k1)
            m2 = M.key_matrix(k2)
            for (i, j), c in x.items():
                for jj, cn in m1[j].items():
                    for ii, cm in m2[i].items():
                        axpy(out, cr * c * cn * cm, {(jj, ii): 1})
        return out

    def __repr__(self):
        return f"RMatrixBraiding({self.R})"


def flip_braiding(hopf: HopfAlgebra) -> RMatrixBraiding:
    u = hopf.unit_key
    return RMatrixBraiding(Tensor(hopf, {(u, u): hopf.field.one}))


def _symmetric_residue(a: int, n: int) -> int:
    a %= n
    return a - n if a > n // 2 else a


class Uqsl2Braiding(Braiding):
    """Braiding of U_q(sl2)-modules that split into K-eigenspaces.

    For K.m = q^a m and K.m' = q^b m',
    c(m (x) m') = s^(-ab) sum_i q^(-i(i-1)/2) (q^-1 - q)^i / [i]! F^i m' (x) E^i m,
    with s the chosen square root of q and a, b taken as symmetric residues
    mod n.  The sum stops once E^i m or F^i m' vanishes.
    """

    kind = "uqsl2-formula"

    def __init__(self, hopf: Rank1QuantumHopf, s):
        if not isinstance(hopf, Rank1QuantumHopf) or hopf.torus != ["K"]:
            raise BraidPBWError("the explicit braiding needs U_q(sl2)")
        if s * s != hopf.q:
            raise BraidPBWError("s must be a square root of q")
        self.hopf = hopf
        self.s = s
        q = hopf.q
        self.coefs = []
        fact = hopf.field.one
        for i in range(hopf.n):
            if i:
                fact = fact * (q ** i - q ** (-i)) / (q - 1 / q)
            num = q ** (-(i * (i - 1) // 2)) * (1 / q - q) ** i
            self.coefs.append(None if not fact else num / fact)

    def weight(self, M: ActionSpec, j: int) -> int:
        H = self.hopf
        col = M.key_matrix(H.generator_keys["K"])[j]
        if set(col) != {j}:
            raise NotKEigenvector(M.gens.names[j])
        lam = col[j]
        for a in range(H.n):
            if H.q ** a == lam:
                return _symmetric_residue(a, H.n)
        raise NotKEigenvector(M.gens.names[j])

    def check_nilpotent(self, M: ActionSpec):
        """E and F must act nilpotently (E^n = F^n = 0 on generators)."""
        H = self.hopf
        n = len(M.gens)
        for key in ((0, (0,), H.n), (H.n, (0,), 0)):
            m = M.key_matrix(key)
            if any(m.get(j) for j in range(n)):
                raise BraidPBWError(f"{H.key_str(key)} does not act as zero on {list(M.gens)}")

    def apply(self, M, N, x):
        H = self.hopf
        out: dict = {}
        for (i, j), c in x.items():
            a, b = self.weight(M, i), self.weight(N, j)
            pref = c * self.s ** (-a * b)
            for deg in range(H.n):
                em = M.key_matrix((0, (0,), deg))[i]
                fn = N.key_matrix((deg, (0,), 0))[j]
                if not em or not fn:
                    break
                coef = self.coefs[deg]
                if coef is None:
                    raise BraidPBWError(f"[{deg}]_q! vanishes on a nonzero term of the braiding")
                for jj, cf in fn.items():
                    for ii, ce in em.items():
                        axpy(out, pref * coef * cf * ce, {(jj, ii): 1})
        return out

    def __repr__(self):
        return f"Uqsl2Braiding(n={self.hopf.n}, s={self.s})"


class TwistSpec(Braiding):
    """An explicit graded twist on generators: (j, i) -> {(i2, j2): c}.

    ``table[(j, i)]`` is the image of second[j] (x) first[i]; missing pairs
    are treated as the flip.
    """

    kind = "explicit-twist"

    def __init__(self, table: dict):
        self.table = table

    @classmethod
    def from_strings(cls, first: GenSet, second: GenSet, table: dict, field=None,
                     scalars=None) -> "TwistSpec":
        """``table[(y, x)]`` an expression in the words x'.y' over first+second names."""
        gens = first + second
        nf = len(first)
        out = {}
        for (y, x), text in table.items():
            p = text if isinstance(text, NcPoly) else NcPoly.parse(text, gens, scalars, field)
            img = {}
            for w, c in p.terms.items():
                if len(w) != 2 or w[0] >= nf or w[1] < nf:
                    raise BraidPBWError(f"twist image of {y}(x){x} is not in first(x)second: {p}")
                img[(w[0], w[1] - nf)] = c
            out[(second.index[y], first.index[x])] = img
        return cls(out)

    def apply(self, M, N, x):
        out: dict = {}
        for (j, i), c in x.items():
            img = self.table.get((j, i), {(i, j): 1})
            axpy(out, c, img)
        return out


def braid_apply(spec: Braiding, M: ActionSpec, N: ActionSpec, x: dict) -> dict:
    """Apply c_{M,N} to x in M (x) N; returns an element of N (x) M."""
    return spec.apply(M, N, x)


# ---------------------------------------------------------------- products


def _direct_sum(hopf, gens: GenSet, first: ActionSpec, second: ActionSpec) -> ActionSpec:
    nf = len(first.gens)
    images = {}
    for h in hopf.generators:
        cols = {}
        for j, col in first.images[h].items():
            cols[j] = dict(col)
        for j, col in second.images[h].items():
            cols[nf + j] = {nf + i: c for i, c in col.items()}
        images[h] = cols
    return ActionSpec(hopf, gens, images)


def braided_opposite(A: ModuleAlgebra, spec: Braiding, gens: GenSet | None = None) -> ModuleAlgebra:
    """A^op_c on primed generators: relations = kernel of y'z' -> m_A(c(y (x) z)) mod I_A."""
    gens = gens or prime_names(A.gens)
    n = len(A.gens)
    elim = Eliminator(track=True)
    for i, r in enumerate(A.pres.relations):
        elim.insert(r.terms, ("I", i))
    kernel = []
    for y, z in iproduct(range(n), repeat=2):
        image = spec.apply(A.action, A.action, {(y, z): 1})
        dep = elim.insert({(p, q): c for (p, q), c in image.items()}, ("P", (y, z)))
        if dep is not None:
            kernel.append(NcPoly(gens, {w: c for (tag, w), c in dep.items() if tag == "P"}))
    # canonical reduced echelon basis
    basis = _echelon(gens, kernel)
    pres = QuadraticPresentation(gens, basis, name=f"{A.name}^op")
    return ModuleAlgebra(pres, A.action.rename(gens), name=pres.name)


def _echelon(gens, polys):
    from .tensoralg import Subspace

    sub = Subspace(gens, 2, polys)
    return list(reversed(sub.basis))


def _mixed_relations(first: ModuleAlgebra, second: ModuleAlgebra, gens: GenSet, spec: Braiding):
    nf = len(first.gens)
    rels = []
    for j in range(len(second.gens)):
        for i in range(nf):
            image = spec.apply(second.action, first.action, {(j, i): 1})
            terms = {(nf + j, i): 1}
            for (ii, jj), c in image.items():
                axpy(terms, -c, {(ii, nf + jj): 1})
            rels.append(NcPoly(gens, terms))
    return rels


def _combine(first: ModuleAlgebra, second: ModuleAlgebra):
    gens = first.gens + second.gens
    rels = [r.rename(gens) for r in first.pres.relations]
    rels += [r.rename(gens) for r in second.pres.relations]
    return gens, rels


def braided_product(first: ModuleAlgebra, second: ModuleAlgebra, spec: Braiding,
                    verify: bool = True) -> ModuleAlgebra:
    """first (x)^c second, presented on first's generators then second's."""
    if first.hopf is not second.hopf:
        raise BraidPBWError("factors must be modules over the same Hopf algebra")
    if isinstance(spec, Uqsl2Braiding):
        spec.check_nilpotent(first.action)
        spec.check_nilpotent(second.action)
    gens, rels = _combine(first, second)
    rels += _mixed_relations(first, second, gens, spec)
    pres = QuadraticPresentation(gens, rels, name=f"{first.name}(x){second.name}")
    action = _direct_sum(first.hopf, gens, first.action, second.action)
    out = ModuleAlgebra(pres, action, name=pres.name)
    if verify:
        rep = check_module_algebra(action, pres)
        if not rep.ok:
            fail = rep.first_failure()
            raise BraidPBWError(f"braided product is not a module algebra: {fail.name} {fail.witness}")
    return out


def twisted_tensor(first: ModuleAlgebra, second: ModuleAlgebra, tau: TwistSpec,
                   check_module_map: bool = True) -> ModuleAlgebra:
    """first (x)^tau second, after checking every overlap of its reduction system.

    The reduction system orders the generators first-then-second in
    degree-lex order; each mixed rule rewrites y.x (y in second, x in first)
    to tau(y (x) x).  All overlaps z.y.x must resolve to the same normal
    form, else :class:`AssociativityFailure` names the first bad triple.
    """
    from .koszul import ReductionSystem, resolve_overlaps

    gens, rels = _combine(first, second)
    rels += _mixed_relations(first, second, gens, tau)
    system = ReductionSystem.from_relations(gens, rels)
    checked = []
    for word, left, right in resolve_overlaps(system):
        triple = tuple(gens.names[i] for i in word)
        if left != right:
            raise AssociativityFailure(triple, str(NcPoly(gens, left)), str(NcPoly(gens, right)))
        checked.append(".".join(triple))
    if check_module_map:
        check_twist_module_map(first, second, tau)
    pres = QuadraticPresentation(gens, rels, name=f"{first.name}(x)tau{second.name}")
    action = _direct_sum(first.hopf, gens, first.action, second.action)
    return ModuleAlgebra(pres, action, name=pres.name, notes=[{"overlaps checked": checked}])


def _pair_str(names_a, names_b, x: dict) -> str:
    return format_poly(x, lambda k: f"{names_a[k[0]]}(x){names_b[k[1]]}", order=lambda k: k)


def check_twist_module_map(first: ModuleAlgebra, second: ModuleAlgebra, tau: Braiding):
    """tau(h.(y (x) x)) = h.tau(y (x) x) for all acting elements h."""
    F, S = first.action, second.action
    for name, h in F.acting_elements():
        for j, i in iproduct(range(len(S.gens)), range(len(F.gens))):
            left = tau.apply(S, F, act_tensor_elem(h, [S, F], {(j, i): 1}))
            right = act_tensor_elem(h, [F, S], tau.apply(S, F, {(j, i): 1}))
            if left != right:
                raise NotModuleMap(name, f"{S.gens.names[j]}(x){F.gens.names[i]}",
                                   _pair_str(F.gens.names, S.gens.names, left),
                                   _pair_str(F.gens.names, S.gens.names, right))


def tensor_of_presentations(first: ModuleAlgebra, second: ModuleAlgebra) -> ModuleAlgebra:
    return braided_product(first, second, flip_braiding(first.hopf))


# ---------------------------------------------------------------- smash product


class SmashElem:
    """Element of T(W) # H: terms {(word, hopf_key): coef}."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "SmashAlgebra", terms: dict | None = None):
        self.alg = alg
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __add__(self, other):
        if is_scalar(other):
            other = self.alg.scalar(other)
        if not isinstance(other, SmashElem):
            return NotImplemented
        terms = dict(self.terms)
        axpy(terms, 1, other.terms)
        return SmashElem(self.alg, terms)

    __radd__ = __add__

    def __neg__(self):
        return SmashElem(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            return SmashElem(self.alg, {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, SmashElem):
            return NotImplemented
        return self.alg.mul(self, other)

    def __rmul__(self, other):
        if is_scalar(other):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        return self * (1 / other)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            parts = self.hopf_components()
            if set(parts) and all(set(p.terms) == {()} for p in parts.values()):
                H = self.alg.hopf
                h = H.elem({key: p.terms[()] for key, p in parts.items()})
                return self.alg.from_hopf(h ** k)
            raise BraidPBWError(f"negative power of {self}, which is not in H")
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if is_scalar(other):
            other = self.alg.scalar(other)
        if not isinstance(other, SmashElem):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def hopf_components(self) -> dict:
        """{hopf_key: NcPoly} with self = sum component # key."""
        out: dict = {}
        for (w, k), c in self.terms.items():
            out.setdefault(k, {})[w] = c
        return {k: NcPoly(self.alg.gens, t) for k, t in out.items()}

    def __str__(self):
        A = self.alg
        H = A.hopf

        def key_str(k):
            w, h = k
            ws = A.gens.word_str(w)
            hs = H.key_str(h)
            if hs == "1":
                return ws
            return hs if ws == "1" else f"{ws}#{hs}"

        return format_poly(self.terms, key_str,
                           order=lambda k: (len(k[0]), k[0], _neg(H.key_order(k[1]))))

    def __repr__(self):
        return f"SmashElem({self})"


def _neg(order):
    return tuple(-x for x in order)


class SmashAlgebra:
    """T(W) # H for an action of H on W; the algebra part is kept on the left."""

    def __init__(self, action: ActionSpec):
        self.action = action
        self.gens = action.gens
        self.hopf = action.hopf
        self._cache: dict = {}

    def elem(self, terms) -> SmashElem:
        return SmashElem(self, terms)

    def one(self):
        return SmashElem(self, {((), self.hopf.unit_key): self.hopf.field.one})

    def scalar(self, c):
        return SmashElem(self, {((), self.hopf.unit_key): self.hopf.field(c)})

    def word(self, w) -> SmashElem:
        if isinstance(w, str):
            w = self.gens.word(w)
        return SmashElem(self, {(tuple(w), self.hopf.unit_key): self.hopf.field.one})

    def from_poly(self, p: NcPoly) -> SmashElem:
        u = self.hopf.unit_key
        return SmashElem(self, {(w, u): c for w, c in p.terms.items()})

    def from_hopf(self, h: HopfElem) -> SmashElem:
        return SmashElem(self, {((), k): c for k, c in h.terms.items()})

    def pair(self, p: NcPoly, h: HopfElem) -> SmashElem:
        """p # h."""
        return SmashElem(self, {(w, k): cw * ch for w, cw in p.terms.items()
                                for k, ch in h.terms.items()})

    def _mul_basis(self, x, y) -> dict:
        key = (x, y)
        out = self._cache.get(key)
        if out is not None:
            return out
        (a, h), (a2, h2) = x, y
        H = self.hopf
        out = {}
        if not a2:
            for k, c in H.mul_keys(h, h2).items():
                out[(a, k)] = c
        else:
            for (k1, k2), c in H.coproduct_key(h).items():
                moved = self.action.act_word(k1, a2)
                if not moved:
                    continue
                tail = H.mul_keys(k2, h2)
                for w, cw in moved.items():
                    for k, ck in tail.items():
                        axpy(out, c * cw * ck, {(a + w, k): 1})
        self._cache[key] = out
        return out

    def mul(self, x: SmashElem, y: SmashElem) -> SmashElem:
        out: dict = {}
        for kx, cx in x.terms.items():
            for ky, cy in y.terms.items():
                axpy(out, cx * cy, self._mul_basis(kx, ky))
        return SmashElem(self, out)

    def namespace(self) -> dict:
        ns = {n: self.word((i,)) for i, n in enumerate(self.gens.names)}
        for name, h in self.hopf.namespace().items():
            if name in ns:
                raise BraidPBWError(f"name {name!r} used by both the algebra and H")
            ns[name] = self.from_hopf(h)
        return ns

    def parse(self, text: str, integers: dict | None = None, scalars: dict | None = None) -> SmashElem:
        ns = dict(scalars or {})
        ns.update(self.namespace())
        value = evaluate(text, ns, integers, self.hopf.field)
        if is_scalar(value):
            value = self.scalar(value)
        return value


def smash_mul(x: SmashElem, y: SmashElem) -> SmashElem:
    return x * y


# ---------------------------------------------------------------- R-matrices


def _tensor_elem(H, terms):
    return Tensor(H, terms)


def check_quasitriangular(H: HopfAlgebra, R: Tensor, modules=()) -> Report:
    """R-matrix axioms for the braiding c = R o flip, then checks on modules.

    With c(m (x) n) = sum R1.n (x) R2.m the hexagon identities read
    (Delta (x) id)R = R23 R13 and (id (x) Delta)R = R12 R13, and c is a module
    map iff R Delta^op(h) = Delta(h) R.  Invertibility is tested for
    finite-dimensional H.  On each module W: c commutes with the action on
    W (x) W and satisfies the braid relation on W^3.
    """
    rep = Report("quasitriangular", {"hopf": H.name, "R": str(R)})
    r13, r23, r12 = R.embed(3, (0, 2)), R.embed(3, (1, 2)), R.embed(3, (0, 1))
    for name, left, right in (
        ("(Delta x id)R = R23 R13", R.map_leg(0, H.coproduct_key), r23 * r13),
        ("(id x Delta)R = R12 R13", R.map_leg(1, H.coproduct_key), r12 * r13),
    ):
        rep.add(name, left == right,
                witness=None if left == right else {"left": str(left), "right": str(right)})
    bad = None
    for name in H.generators:
        d = coproduct(H.gen(name))
        l, r = R * d.permute((1, 0)), d * R
        if l != r:
            bad = {"generator": name, "left": str(l), "right": str(r)}
            break
    rep.add("R Delta^op(h) = Delta(h) R", bad is None, witness=bad)
    if H.finite:
        inv = _tensor_inverse(H, R)
        rep.add("R invertible", inv is not None,
                detail={"inverse": str(inv)} if inv is not None else None)
    spec = RMatrixBraiding(R)
    for M in modules:
        tag = ",".join(M.gens.names)
        w = check_braiding_on_module(spec, M)
        for c in w.checks:
            rep.add(f"{c.name} on [{tag}]", c.ok, witness=c.witness)
    return rep


def _tensor_inverse(H, R: Tensor):
    keys = [(a, b) for a in H.basis_keys() for b in H.basis_keys()]
    from .linalg import CONSTANT, solve_linear

    u = H.unit_key
    eqs: dict = {}
    # unknown X[(a, b)]; equations R X = 1(x)1 and X R = 1(x)1
    for side in (0, 1):
        acc: dict = {}
        for k in keys:
            unit = Tensor(H, {k: H.field.one})
            prod = R * unit if side == 0 else unit * R
            for kk, c in prod.terms.items():
                acc.setdefault((side, kk), {})[k] = c
        for kk in keys:
            eq = acc.get((side, kk), {})
            if kk == (u, u):
                eq = dict(eq)
                eq[CONSTANT] = -H.field.one
            eqs[(side, kk)] = eq
    sol = solve_linear(list(eqs.values()), keys)
    if not sol.consistent:
        return None
    return Tensor(H, dict(sol.particular))


def check_braiding_on_module(spec: Braiding, M: ActionSpec) -> Report:
    rep = Report("braiding", {"gens": list(M.gens.names)})
    n = len(M.gens)
    names = M.gens.names
    bad = None
    for name, h in M.acting_elements():
        for i, j in iproduct(range(n), repeat=2):
            l = spec.apply(M, M, act_tensor_elem(h, [M, M], {(i, j): 1}))
            r = act_tensor_elem(h, [M, M], spec.apply(M, M, {(i, j): 1}))
            if l != r:
                bad = {"generator": name, "argument": f"{names[i]}(x){names[j]}",
                       "c(h.x)": _pair_str(names, names, l), "h.c(x)": _pair_str(names, names, r)}
                break
        if bad:
            break
    rep.add("module map", bad is None, witness=bad)

    def c12(x):
        out: dict = {}
        for (a, b, c), coef in x.items():
            for (p, q), cc in spec.apply(M, M, {(a, b): 1}).items():
                axpy(out, coef * cc, {(p, q, c): 1})
        return out

    def c23(x):
        out: dict = {}
        for (a, b, c), coef in x.items():
            for (p, q), cc in spec.apply(M, M, {(b, c): 1}).items():
                axpy(out, coef * cc, {(a, p, q): 1})
        return out

    bad = None
    for idx in iproduct(range(n), repeat=3):
        x = {idx: 1}
        l, r = c12(c23(c12(x))), c23(c12(c23(x)))
        if l != r:
            bad = {"argument": "(x)".join(names[i] for i in idx)}
            break
    rep.add("braid relation", bad is None, witness=bad)
    return rep
