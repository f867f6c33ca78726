"""PBW deformations r -> r - kappa(r) of T(W)/(I) # H.

kappa = kappa^C + kappa^L with kappa^C(r) in H and kappa^L(r) in W (x) H.
Invariance compares kappa(h.r) with the adjoint action of h on kappa(r).
Overlap conditions are evaluated on (I (x) W) meet (W (x) I): every basis
element x is stored with both factorisations
    x = sum a[i, g] r_i . w_g = sum b[g, j] w_g . r_j
and kappa applied to a factorisation is evaluated in the smash product,
where an H-part written left of a generator is moved past it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BraidPBWError, ParseError
from .hopf import HopfElem, adjoint_act, antipode
from .linalg import CONSTANT, SolutionSpace, axpy, solve_linear
from .modalg import ActionSpec, QuadraticPresentation, act_on_relations
from .products import SmashAlgebra, SmashElem
from .report import Report
from .tensoralg import NcPoly, intersection_kernel


@dataclass
class OverlapElement:
    element: NcPoly
    left: dict   # {(label, gen_index): c}: element = sum c * r_label . gen
    right: dict  # {(gen_index, label): c}: element = sum c * gen . r_label

    def left_str(self, pres) -> str:
        g = pres.gens.names
        return " + ".join(f"({c})*{l}.{g[i]}" for (l, i), c in sorted(self.left.items(), key=_lk)) or "0"

    def right_str(self, pres) -> str:
        g = pres.gens.names
        return " + ".join(f"({c})*{g[i]}.{l}" for (i, l), c in sorted(self.right.items(), key=_rk)) or "0"


def _label_num(label):
    digits = "".join(ch for ch in label if ch.isdigit())
    return (int(digits) if digits else 0, label)


def _lk(item):
    (l, i), _ = item
    return (_label_num(l), i)


def _rk(item):
    (i, l), _ = item
    return (i, _label_num(l))


def overlap_intersection(pres: QuadraticPresentation) -> list:
    """Basis of (I (x) W) meet (W (x) I) with both factorisations of each element."""
    gens = pres.gens
    n = len(gens)
    left_keys, left = [], []
    right_keys, right = [], []
    for label, r in zip(pres.labels, pres.relations):
        for g in range(n):
            x = gens.gen(gens.names[g])
            left_keys.append((label, g))
            left.append(r * x)
            right_keys.append((g, label))
            right.append(x * r)
    right_order = sorted(range(len(right)), key=lambda k: (right_keys[k][0], _label_num(right_keys[k][1])))
    right = [right[k] for k in right_order]
    right_keys = [right_keys[k] for k in right_order]
    out = []
    for elem, a, b in intersection_kernel(left, right):
        out.append(OverlapElement(elem, {left_keys[i]: c for i, c in a.items()},
                                  {right_keys[j]: c for j, c in b.items()}))
    return out


# ---------------------------------------------------------------- kappa


class KappaMap:
    """kappa on the labelled relation basis; unlisted labels map to 0."""

    def __init__(self, pres: QuadraticPresentation, action: ActionSpec,
                 constant: dict | None = None, linear: dict | None = None,
                 smash: SmashAlgebra | None = None):
        self.pres = pres
        self.action = action
        self.hopf = action.hopf
        self.smash = smash or SmashAlgebra(action)
        self.constant = {}
        self.linear = {}
        for label, h in (constant or {}).items():
            self._check_label(label)
            if not isinstance(h, HopfElem):
                h = self.hopf.scalar(h)
            if h:
                self.constant[label] = h
        for label, x in (linear or {}).items():
            self._check_label(label)
            if any(len(w) != 1 for w, _ in x.terms):
                raise BraidPBWError(f"linear part of kappa({label}) must lie in W#H")
            if x:
                self.linear[label] = x

    def _check_label(self, label):
        if label not in self.pres.labels:
            raise BraidPBWError(f"unknown relation label {label!r}")

    @classmethod
    def zero(cls, pres, action):
        return cls(pres, action)

    @classmethod
    def parse(cls, pres, action, entries: dict, integers: dict | None = None,
              scalars: dict | None = None) -> "KappaMap":
        """``entries[label]`` an expression over the generators and H.

        Terms with no generator form the constant part, terms with one
        generator (written left of the H-part) the linear part.
        """
        smash = SmashAlgebra(action)
        const, lin = {}, {}
        for label, text in entries.items():
            value = smash.parse(text, integers, scalars)
            c_terms, l_terms = {}, {}
            for (w, k), c in value.terms.items():
                if not w:
                    c_terms[k] = c
                elif len(w) == 1:
                    l_terms[(w, k)] = c
                else:
                    raise ParseError(f"kappa({label}) has a term of degree {len(w)}: {value}")
            const[label] = HopfElem(action.hopf, c_terms)
            lin[label] = SmashElem(smash, l_terms)
        return cls(pres, action, const, lin, smash)

    @property
    def has_linear(self) -> bool:
        return bool(self.linear)

    def kc(self, label) -> HopfElem:
        return self.constant.get(label, self.hopf.elem({}))

    def kl(self, label) -> SmashElem:
        return self.linear.get(label, self.smash.elem({}))

    def _coords(self, p):
        coords = self.pres.coordinates(p)
        if coords is None:
            raise BraidPBWError(f"{p} is not in the relation space")
        return coords

    def constant_on(self, p: NcPoly) -> HopfElem:
        out = self.hopf.elem({})
        for label, c in self._coords(p).items():
            out = out + self.kc(label) * c
        return out

    def linear_on(self, p: NcPoly) -> SmashElem:
        out = self.smash.elem({})
        for label, c in self._coords(p).items():
            out = out + self.kl(label) * c
        return out

    def scaled(self, c) -> "KappaMap":
        return KappaMap(self.pres, self.action, {l: h * c for l, h in self.constant.items()},
                        {l: x * c for l, x in self.linear.items()}, self.smash)

    def to_dict(self) -> dict:
        out = {}
        for label in self.pres.labels:
            parts = []
            if label in self.constant:
                parts.append(str(self.constant[label]))
            if label in self.linear:
                parts.append(str(self.linear[label]))
            out[label] = " + ".join(parts) if parts else "0"
        return out

    def __repr__(self):
        return f"KappaMap({self.to_dict()})"


def adjoint_on_smash(h: HopfElem, x: SmashElem) -> SmashElem:
    """h . x = sum (1#h1) x (1#S(h2)) for x in T(W)#H."""
    A = x.alg
    H = h.hopf
    out = A.elem({})
    for key, ch in h.terms.items():
        for (k1, k2), c in H.coproduct_key(key).items():
            left = A.from_hopf(H.basis_elem(k1))
            right = A.from_hopf(antipode(H.basis_elem(k2)))
            out = out + left * x * right * (ch * c)
    return out


def check_invariance(kappa: KappaMap, table: dict | None = None, elements=None) -> Report:
    """kappa(h.r_i) = h.kappa(r_i) for every Hopf generator h and relation r_i.

    ``elements`` replaces the Hopf generators by another list of
    ``(name, h)`` pairs, e.g. generators of a Hopf subalgebra.
    """
    pres, action, H = kappa.pres, kappa.action, kappa.hopf
    rep = Report("invariance", {"kappa": kappa.to_dict()})
    elements = elements or [(name, H.gen(name)) for name in H.generators]
    table = table or act_on_relations(action, pres, elements)
    for name, h in elements:
        for label in pres.labels:
            coords = table[(name, label)]
            lhs = H.elem({})
            for l2, c in coords.items():
                lhs = lhs + kappa.kc(l2) * c
            rhs = adjoint_act(h, kappa.kc(label))
            ok = lhs == rhs
            witness = None if ok else {"kappa(h.r)": str(lhs), "h.kappa(r)": str(rhs)}
            if kappa.has_linear:
                llhs = kappa.smash.elem({})
                for l2, c in coords.items():
                    llhs = llhs + kappa.kl(l2) * c
                lrhs = adjoint_on_smash(h, kappa.kl(label))
                if llhs != lrhs:
                    ok = False
                    witness = dict(witness or {})
                    witness.update({"kappaL(h.r)": str(llhs), "h.kappaL(r)": str(lrhs)})
            rep.add(f"{name}.{label}", ok, witness=witness)
    return rep


def _constant_sides(kappa: KappaMap, x: OverlapElement):
    A = kappa.smash
    left = A.elem({})
    for (label, g), c in x.left.items():
        h = kappa.kc(label)
        if h:
            left = left + A.from_hopf(h) * A.word((g,)) * c
    right = A.elem({})
    for (g, label), c in x.right.items():
        h = kappa.kc(label)
        if h:
            right = right + A.word((g,)) * A.from_hopf(h) * c
    return left, right


def check_overlap(kappa: KappaMap, overlaps: list | None = None) -> Report:
    """(kappa (x) id)(x) = (id (x) kappa)(x) in T(W)#H on the overlap basis (kappa^L = 0)."""
    pres = kappa.pres
    overlaps = overlaps if overlaps is not None else overlap_intersection(pres)
    rep = Report("overlap", {"kappa": kappa.to_dict(), "intersection dimension": len(overlaps)})
    if kappa.has_linear:
        rep.add("linear part is zero", False,
                witness={"labels": sorted(kappa.linear, key=_label_num)})
        return rep
    for k, x in enumerate(overlaps):
        left, right = _constant_sides(kappa, x)
        ok = left == right
        witness = None
        if not ok:
            witness = {"element": str(x.element), "kappa x id": str(left), "id x kappa": str(right)}
        rep.add(f"overlap {k + 1}", ok, witness=witness)
    return rep


def check_full_conditions(kappa: KappaMap, overlaps: list | None = None) -> Report:
    """Conditions (b), (c), (d) on the overlap basis for kappa with a linear part.

    D = (kappa^L (x) id - id (x) kappa^L)(x) is written as sum_h D_h # h with
    D_h in W (x) W.  (b) every D_h lies in I; (c) sum kappa^L(D_h)(1#h) equals
    -(kappa^C (x) id - id (x) kappa^C)(x); (d) sum kappa^C(D_h) h = 0.
    """
    pres = kappa.pres
    A = kappa.smash
    H = kappa.hopf
    overlaps = overlaps if overlaps is not None else overlap_intersection(pres)
    rep = Report("full-conditions", {"kappa": kappa.to_dict(), "intersection dimension": len(overlaps)})
    for k, x in enumerate(overlaps):
        tag = f"overlap {k + 1}"
        D = A.elem({})
        for (label, g), c in x.left.items():
            D = D + kappa.kl(label) * A.word((g,)) * c
        for (g, label), c in x.right.items():
            D = D - A.word((g,)) * kappa.kl(label) * c
        parts = D.hopf_components()
        outside = {H.key_str(h): str(pres.space.residue(p)) for h, p in parts.items()
                   if not pres.space.contains(p)}
        rep.add(f"(b) {tag}", not outside,
                witness={"element": str(x.element), "residues": outside} if outside else None)
        if outside:
            rep.add(f"(c) {tag}", False, witness={"reason": "(b) fails"})
            rep.add(f"(d) {tag}", False, witness={"reason": "(b) fails"})
            continue
        lhs = A.elem({})
        dsum = H.elem({})
        for h, p in parts.items():
            hb = H.basis_elem(h)
            lhs = lhs + kappa.linear_on(p) * A.from_hopf(hb)
            dsum = dsum + kappa.constant_on(p) * hb
        cl, cr = _constant_sides(kappa, x)
        rhs = -(cl - cr)
        rep.add(f"(c) {tag}", lhs == rhs,
                witness=None if lhs == rhs else {"element": str(x.element),
                                                 "kappaL(D)": str(lhs), "-(kappaC x id - id x kappaC)": str(rhs)})
        rep.add(f"(d) {tag}", not dsum,
                witness=None if not dsum else {"element": str(x.element), "kappaC(D)": str(dsum)})
    return rep


def check_pbw(kappa: KappaMap, overlaps: list | None = None, elements=None) -> Report:
    """All conditions appropriate to kappa: (a) with (c') or (a) with (b)-(d)."""
    overlaps = overlaps if overlaps is not None else overlap_intersection(kappa.pres)
    rep = Report("pbw", {"kappa": kappa.to_dict(), "intersection dimension": len(overlaps)})
    rep.extend(check_invariance(kappa, elements=elements), "(a) ")
    if kappa.has_linear:
        rep.extend(check_full_conditions(kappa, overlaps))
    else:
        rep.extend(check_overlap(kappa, overlaps), "(c') ")
    return rep


# ---------------------------------------------------------------- solver


def default_ansatz(pres: QuadraticPresentation, action: ActionSpec) -> dict:
    H = action.hopf
    if not H.finite:
        raise BraidPBWError("an explicit ansatz is needed for an infinite-dimensional Hopf algebra")
    basis = [H.basis_elem(k) for k in H.basis_keys()]
    return {label: list(basis) for label in pres.labels}


@dataclass
class KappaSolution:
    space: SolutionSpace
    ansatz: dict
    labels: list
    pres: QuadraticPresentation
    action: ActionSpec
    overlaps: list
    constraint_count: int

    @property
    def dimension(self) -> int:
        return self.space.dimension

    def kappa(self, vector: dict) -> KappaMap:
        const = {}
        H = self.action.hopf
        for label in self.labels:
            h = H.elem({})
            for k, b in enumerate(self.ansatz[label]):
                c = vector.get((label, k))
                if c:
                    h = h + b * c
            const[label] = h
        return KappaMap(self.pres, self.action, const)

    def basis_kappas(self) -> list:
        return [self.kappa(v) for v in self.space.basis]

    def report(self) -> dict:
        return {
            "parameter space dimension": self.dimension,
            "constraint count": self.constraint_count,
            "unknown count": len(self.space.unknowns),
            "intersection dimension": len(self.overlaps),
            "basis": [k.to_dict() for k in self.basis_kappas()],
            "intersection basis": [str(x.element) for x in self.overlaps],
        }


def solve_kappa(pres: QuadraticPresentation, action: ActionSpec, ansatz: dict | None = None,
                overlaps: list | None = None) -> KappaSolution:
    """All kappa = kappa^C within the ansatz satisfying invariance and (c')."""
    H = action.hopf
    ansatz = ansatz if ansatz is not None else default_ansatz(pres, action)
    labels = list(pres.labels)
    unknowns = [(l, k) for l in labels for k in range(len(ansatz.get(l, [])))]
    overlaps = overlaps if overlaps is not None else overlap_intersection(pres)
    smash = SmashAlgebra(action)
    eqs: dict = {}

    def add(eq_key, unknown, terms):
        for t, c in terms.items():
            row = eqs.setdefault((eq_key, t), {})
            axpy(row, c, {unknown: 1})

    elements = [(name, H.gen(name)) for name in H.generators]
    table = act_on_relations(action, pres, elements)
    for name, h in elements:
        for label in labels:
            for l2, c in table[(name, label)].items():
                for k, b in enumerate(ansatz.get(l2, [])):
                    add(("a", name, label), (l2, k), (b * c).terms)
            for k, b in enumerate(ansatz.get(label, [])):
                add(("a", name, label), (label, k), (-adjoint_act(h, b)).terms)
    for idx, x in enumerate(overlaps):
        for (label, g), c in x.left.items():
            for k, b in enumerate(ansatz.get(label, [])):
                add(("c", idx), (label, k), (smash.from_hopf(b) * smash.word((g,)) * c).terms)
        for (g, label), c in x.right.items():
            for k, b in enumerate(ansatz.get(label, [])):
                add(("c", idx), (label, k), (smash.word((g,)) * smash.from_hopf(b) * (-c)).terms)
    equations = [e for e in eqs.values() if e]
    space = solve_linear(equations, unknowns)
    return KappaSolution(space, ansatz, labels, pres, action, overlaps, len(equations))


__all__ = [
    "OverlapElement", "overlap_intersection", "KappaMap", "check_invariance", "check_overlap",
    "check_full_conditions", "check_pbw", "solve_kappa", "KappaSolution", "default_ansatz",
    "adjoint_on_smash", "CONSTANT",
]
