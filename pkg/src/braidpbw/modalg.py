"""H-module algebras T(W)/(I) with I spanned by quadratic relations.

An :class:`ActionSpec` stores, for each Hopf algebra generator, its linear
action on the span of the algebra generators.  Matrices follow the column
convention: ``matrix[i][j]`` is the coefficient of gens[i] in h.gens[j].
The action is extended to every normal word of H through the word's
generator factors, and to words of T(W) through the coproduct.
"""

from __future__ import annotations

from itertools import product as iproduct

from .errors import BraidPBWError, NotSubmodule
from .hopf import HopfAlgebra, HopfElem
from .linalg import Eliminator, axpy
from .report import Report
from .scalars import parse_scalar
from .tensoralg import GenSet, NcPoly, Subspace


def _compose(a: dict, b: dict, n: int) -> dict:
    """Column maps: (a o b)[j] = a applied to b[j]."""
    out = {}
    for j in range(n):
        col: dict = {}
        for k, c in b.get(j, {}).items():
            axpy(col, c, a.get(k, {}))
        out[j] = col
    return out


def _identity(n, one):
    return {j: {j: one} for j in range(n)}


def _invert(m: dict, n: int):
    elim = Eliminator(track=True)
    for j in range(n):
        if elim.insert(m.get(j, {}), j) is not None:
            return None
    out = {}
    for i in range(n):
        residual, combo = elim.reduce({i: 1}, {})
        out[i] = {t: -c for t, c in combo.items() if c}
    return out


class ActionSpec:
    """Linear action of a Hopf algebra on span(gens), extended to T(W)."""

    def __init__(self, hopf: HopfAlgebra, gens: GenSet, images: dict):
        """``images[h][j]`` is a dict {i: c}: h . gens[j] = sum c gens[i]."""
        self.hopf = hopf
        self.gens = gens
        n = len(gens)
        field = hopf.field
        self.images = {}
        for h in hopf.generators:
            cols = images.get(h)
            if cols is None:
                raise BraidPBWError(f"no action given for Hopf generator {h!r}")
            self.images[h] = {j: {i: field(c) for i, c in cols.get(j, {}).items() if c}
                              for j in range(n)}
        self._key_matrix: dict = {}
        self._word_cache: dict = {}
        self._powers: dict = {}

    @classmethod
    def from_matrices(cls, hopf, gens, matrices: dict):
        """Matrices as nested lists (row-major) of scalars or exact strings."""
        images = {}
        for h, rows in matrices.items():
            cols: dict = {}
            for i, row in enumerate(rows):
                for j, c in enumerate(row):
                    if isinstance(c, str):
                        c = parse_scalar(c, hopf.field)
                    if c:
                        cols.setdefault(j, {})[i] = c
            images[h] = cols
        return cls(hopf, gens, images)

    def matrices(self) -> dict:
        n = len(self.gens)
        out = {}
        for h, cols in self.images.items():
            out[h] = [[cols.get(j, {}).get(i, 0) for j in range(n)] for i in range(n)]
        return out

    def rename(self, gens: GenSet) -> "ActionSpec":
        """Same matrices on a renamed copy of the generators."""
        return ActionSpec(self.hopf, gens, self.images)

    def _gen_power(self, name, e):
        key = (name, e)
        m = self._powers.get(key)
        if m is None:
            n = len(self.gens)
            base = self.images[name]
            if e < 0:
                base = _invert(base, n)
                if base is None:
                    raise BraidPBWError(f"generator {name!r} does not act invertibly")
                e = -e
            m = _identity(n, self.hopf.field.one)
            for _ in range(e):
                m = _compose(m, base, n)
            self._powers[key] = m
        return m

    def key_matrix(self, key) -> dict:
        m = self._key_matrix.get(key)
        if m is None:
            n = len(self.gens)
            m = _identity(n, self.hopf.field.one)
            for name, e in self.hopf.factors(key):
                m = _compose(m, self._gen_power(name, e), n)
            self._key_matrix[key] = m
        return m

    def act_word(self, key, word: tuple) -> dict:
        """Action of a Hopf basis element on a word: dict word -> coef."""
        ck = (key, word)
        out = self._word_cache.get(ck)
        if out is not None:
            return out
        H = self.hopf
        if not word:
            c = H.counit_key(key)
            out = {(): c} if c else {}
        elif len(word) == 1:
            out = {(i,): c for i, c in self.key_matrix(key)[word[0]].items()}
        else:
            out = {}
            for (k1, k2), c in H.coproduct_key(key).items():
                head = self.act_word(k1, word[:1])
                if not head:
                    continue
                tail = self.act_word(k2, word[1:])
                for w1, c1 in head.items():
                    for w2, c2 in tail.items():
                        axpy(out, c * c1 * c2, {w1 + w2: 1})
        self._word_cache[ck] = out
        return out

    def act_terms(self, h: HopfElem, terms: dict) -> dict:
        out: dict = {}
        for key, ch in h.terms.items():
            for w, cw in terms.items():
                axpy(out, ch * cw, self.act_word(key, w))
        return out

    def act(self, h: HopfElem, p: NcPoly) -> NcPoly:
        return NcPoly(self.gens, self.act_terms(h, p.terms))

    def acting_elements(self) -> list:
        """Hopf generators, plus inverses of the grouplike torus generators."""
        H = self.hopf
        out = [(name, H.gen(name)) for name in H.generators]
        for name in H.generators:
            g = H.gen(name)
            if H.grouplike_inverse(g) is not None and H.grouplike_inverse(g) != g:
                out.append((f"{name}^-1", g ** -1))
        return out


def extend_action(spec: ActionSpec, h: HopfElem, p: NcPoly) -> NcPoly:
    return spec.act(h, p)


class QuadraticPresentation:
    """T(W)/(I) with I spanned by independent labelled degree-two relations."""

    def __init__(self, gens: GenSet, relations, labels=None, name: str = ""):
        self.gens = gens
        self.relations = list(relations)
        self.labels = list(labels) if labels is not None else [f"r{i + 1}" for i in range(len(self.relations))]
        self.name = name
        if len(set(self.labels)) != len(self.labels) or len(self.labels) != len(self.relations):
            raise BraidPBWError("relation labels must be distinct, one per relation")
        self.space = Subspace(gens, 2, self.relations)
        if self.space.dim != len(self.relations):
            raise BraidPBWError("relations are linearly dependent")

    @property
    def dim(self):
        return len(self.relations)

    def relation(self, label) -> NcPoly:
        return self.relations[self.labels.index(label)]

    def coordinates(self, p: NcPoly) -> dict | None:
        """{label: c} with p = sum c * relation, or None if p is not in I."""
        coords = self.space.coordinates(p)
        if coords is None:
            return None
        return {self.labels[i]: c for i, c in sorted(coords.items())}

    def relabel(self, basis: list, labels=None) -> "QuadraticPresentation":
        """Same relation space with a new labelled basis (checked)."""
        other = QuadraticPresentation(self.gens, basis, labels, self.name)
        if other.space != self.space:
            raise BraidPBWError("new relation basis spans a different space")
        return other

    def relation_strings(self) -> dict:
        return {l: str(r) for l, r in zip(self.labels, self.relations)}

    def __repr__(self):
        return f"QuadraticPresentation({self.name or '?'}: {len(self.gens)} gens, {self.dim} relations)"


def act_on_relations(spec: ActionSpec, pres: QuadraticPresentation, elements=None) -> dict:
    """{(h_name, label): {label: coef}} expressing h . r in the relation basis."""
    elements = elements or spec.acting_elements()
    table = {}
    for name, h in elements:
        for label, r in zip(pres.labels, pres.relations):
            image = spec.act(h, r)
            coords = pres.coordinates(image)
            if coords is None:
                raise NotSubmodule(name, label, pres.space.residue(image))
            table[(name, label)] = coords
    return table


def format_relation_table(table: dict) -> dict:
    from .tensoralg import format_poly

    out = {}
    for (h, label), coords in table.items():
        out[f"{h}.{label}"] = format_poly(coords, lambda l: l, order=lambda l: (0, _label_key(l)))
    return out


def _label_key(label):
    digits = "".join(ch for ch in label if ch.isdigit())
    return (-int(digits) if digits else 0, label)


def check_module_algebra(spec: ActionSpec, pres: QuadraticPresentation | None = None) -> Report:
    """(i) the generator matrices respect the Hopf relations; (ii) I is a submodule."""
    H = spec.hopf
    rep = Report("module-algebra", {"hopf": H.name, "gens": list(spec.gens.names)})
    n = len(spec.gens)
    if H.finite:
        keys = H.basis_keys()
    else:
        keys = [H.generator_keys[g] for g in H.generators]
        keys += [next(iter(x.terms)) for name, x in spec.acting_elements() if name.endswith("^-1")]
    try:
        for key in keys:
            spec.key_matrix(key)
        rep.add("grouplikes invertible", True)
    except BraidPBWError as exc:
        rep.add("grouplikes invertible", False, witness={"error": str(exc)})
        return rep
    unit = spec.key_matrix(H.unit_key)
    ok = unit == _identity(n, H.field.one)
    rep.add("unit acts as identity", ok)
    failure = None
    for k1, k2 in iproduct(keys, repeat=2):
        lhs = _compose(spec.key_matrix(k1), spec.key_matrix(k2), n)
        rhs = {j: {} for j in range(n)}
        for k, c in H.mul_keys(k1, k2).items():
            m = spec.key_matrix(k)
            for j in range(n):
                axpy(rhs[j], c, m.get(j, {}))
        if {j: v for j, v in lhs.items() if v} != {j: v for j, v in rhs.items() if v}:
            failure = {"product": f"{H.key_str(k1)} * {H.key_str(k2)}"}
            break
    rep.add("action respects Hopf relations", failure is None, witness=failure)
    if pres is not None:
        try:
            act_on_relations(spec, pres)
            rep.add("relations span a submodule", True)
        except NotSubmodule as exc:
            rep.add("relations span a submodule", False,
                    witness={"generator": exc.generator, "relation": exc.label,
                             "residue": str(exc.residue)})
    return rep
