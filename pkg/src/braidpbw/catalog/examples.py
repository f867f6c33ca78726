"""Constructions of the worked examples, wired to their expected data."""

from __future__ import annotations

import json
import warnings as _warnings
from dataclasses import dataclass, field as dfield
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from ..errors import BadParams, BraidPBWError, UnknownExample
from ..hopf import HopfAlgebra, kc2, sweedler, uqgl2, uqsl2
from ..modalg import ActionSpec, QuadraticPresentation, act_on_relations, check_module_algebra
from ..pbwdeform import KappaMap
from ..products import (Braiding, ModuleAlgebra, RMatrixBraiding, TwistSpec, Uqsl2Braiding,
                        braided_opposite, braided_product, check_quasitriangular, flip_braiding,
                        twisted_tensor)
from ..report import Report
from ..scalars import quantum_parameters
from ..tensoralg import GenSet, NcPoly

NAMES = [
    "uqsl2-braided", "uqsl2-twisted", "uqgl2-twisted", "sweedler-plane",
    "jordan-c2-R", "jordan-c2-trivial", "sklyanin-c2-R", "sklyanin-c2-trivial",
    "quantum-plane", "jordan-plane", "sklyanin", "poly-ring",
]

DESCRIPTIONS = {
    "uqsl2-braided": "k_q[u,v] (x)^c its braided opposite under U_q(sl2), explicit braiding",
    "uqsl2-twisted": "k_q[u',v'] (x)^tau k_q[u,v] under U_q(sl2), explicit twist",
    "uqgl2-twisted": "the same twisted tensor product under U_q(gl2)",
    "sweedler-plane": "k[u,v] (x)^c its braided opposite under T(2) with R_lambda",
    "jordan-c2-R": "Jordan plane (x)^c its braided opposite under kC2, nontrivial R",
    "jordan-c2-trivial": "Jordan plane (x) its opposite under kC2, R = 1(x)1",
    "sklyanin-c2-R": "S(a,b,c) (x)^c its braided opposite under kC2, nontrivial R",
    "sklyanin-c2-trivial": "S(a,b,c) (x) its opposite under kC2, R = 1(x)1",
    "quantum-plane": "k_q[u,v] under U_q(sl2)",
    "jordan-plane": "Jordan plane under kC2 (sign action)",
    "sklyanin": "Sklyanin algebra S(a,b,c) under kC2 (sign action)",
    "poly-ring": "k[u,v] under T(2)",
}

DEFAULTS = {"n": 3, "convention": None, "lambda": Fraction(1), "a": Fraction(1),
            "b": Fraction(2), "c": Fraction(3)}


@lru_cache(maxsize=None)
def expected_data() -> dict:
    text = resources.files(__package__).joinpath("expected.json").read_text()
    return json.loads(text)


@dataclass
class ExampleBundle:
    name: str
    params: dict
    hopf: HopfAlgebra
    algebra: ModuleAlgebra           # the labelled presentation under study
    factors: tuple = ()              # (first, second) for products
    braiding: Braiding | None = None
    opposite: ModuleAlgebra | None = None
    scalars: dict = dfield(default_factory=dict)
    expected: dict = dfield(default_factory=dict)
    warnings: list = dfield(default_factory=list)
    checks: Report | None = None
    kind: str = "algebra"

    @property
    def pres(self) -> QuadraticPresentation:
        return self.algebra.pres

    @property
    def action(self) -> ActionSpec:
        return self.algebra.action

    def poly(self, text: str, gens: GenSet | None = None) -> NcPoly:
        return NcPoly.parse(text, gens or self.pres.gens, self.scalars, self.hopf.field)

    def expected_dimension(self):
        if "parameter dimension" not in self.expected:
            return None
        if self.is_symmetric_sklyanin():
            return self.expected["parameter dimension a=b"]
        return self.expected["parameter dimension"]

    def expected_solution(self):
        key = "solution a=b" if self.is_symmetric_sklyanin() else "solution"
        if key not in self.expected:
            return None
        return [self.kappa(entry) for entry in self.expected[key]]

    def is_symmetric_sklyanin(self) -> bool:
        return self.name.startswith("sklyanin-") and self.params["a"] == self.params["b"]

    def kappa(self, entries: dict, integers: dict | None = None) -> KappaMap:
        return KappaMap.parse(self.pres, self.action, entries, integers, self.scalars)

    def family_template(self, choices: dict | None = None) -> dict:
        """Family entries, choosing one option index per multi-valued label."""
        fam = self.expected.get("family n=3" if self.name == "uqsl2-braided" else "family")
        if fam is None or (self.name == "uqsl2-braided" and self.params["n"] != 3):
            raise BraidPBWError(f"no deformation family is recorded for {self.name} with these parameters")
        entries = dict(fam["fixed"])
        for label, options in fam["choices"].items():
            k = (choices or {}).get(label, 0)
            if not 0 <= k < len(options):
                raise BadParams(f"choice for {label} must be in 0..{len(options) - 1}")
            entries[label] = options[k]
        return entries

    def family_labels(self) -> dict:
        fam = self.expected.get("family n=3" if self.name == "uqsl2-braided" else "family") or {}
        return dict(fam.get("choices", {}))

    def family_kappa(self, integers: dict, choices: dict | None = None) -> KappaMap:
        ints = dict(integers)
        ints.setdefault("n", self.params.get("n"))
        return self.kappa(self.family_template(choices), ints)

    def sl2_elements(self) -> list:
        """K, E, F acting, with K = G1*G2^-1 on the gl2 bundle."""
        H = self.hopf
        k = H.gen("K") if "K" in H.generators else H.parse("G1*G2^-1")
        return [("K", k), ("E", H.gen("E")), ("F", H.gen("F"))]

    def relation_table(self) -> dict:
        return act_on_relations(self.action, self.pres)

    def expected_table(self, key: str = "relation table") -> dict:
        labels = GenSet(self.pres.labels)
        out = {}
        for entry, text in self.expected.get(key, {}).items():
            h, label = entry.split(".", 1)
            p = NcPoly.parse(text, labels, self.scalars, self.hopf.field)
            out[(h, label)] = {labels.names[w[0]]: c for w, c in p.terms.items()}
        return out

    def overlap_identities(self, key: str = "overlap identities") -> list:
        ns = dict(self.scalars)
        for label, r in zip(self.pres.labels, self.pres.relations):
            ns[label] = r
        g = self.pres.gens
        out = []
        for left, right in self.expected.get(key, []):
            out.append((NcPoly.parse(left, g, ns, self.hopf.field),
                        NcPoly.parse(right, g, ns, self.hopf.field)))
        return out

    def summary(self) -> dict:
        out = {
            "name": self.name,
            "description": DESCRIPTIONS[self.name],
            "kind": self.kind,
            "hopf": self.hopf.name,
            "params": {k: str(v) for k, v in sorted(self.params.items()) if v is not None},
            "generators": list(self.pres.gens.names),
            "relations": self.pres.relation_strings(),
            "warnings": list(self.warnings),
        }
        if self.opposite is not None:
            out["opposite relations"] = [str(r) for r in self.opposite.pres.relations]
        if self.braiding is not None:
            out["braiding"] = self.braiding.kind
        if self.checks is not None:
            out["construction checks"] = self.checks.to_dict()
        return out


# ---------------------------------------------------------------- helpers


def _params(name, params):
    out = dict(DEFAULTS)
    for k, v in (params or {}).items():
        if k not in DEFAULTS:
            raise BadParams(f"unknown parameter {k!r} for {name}")
        if v is not None:
            out[k] = v
    for k in ("lambda", "a", "b", "c"):
        try:
            out[k] = Fraction(out[k])
        except (TypeError, ValueError):
            raise BadParams(f"parameter {k} must be rational, got {out[k]!r}") from None
    try:
        out["n"] = int(out["n"])
    except (TypeError, ValueError):
        raise BadParams(f"n must be an integer, got {out['n']!r}") from None
    return out


def _quantum(params):
    n = params["n"]
    if n < 3:
        raise BadParams("q must be a primitive n-th root of unity with n >= 3")
    try:
        return quantum_parameters(n, params["convention"])
    except BraidPBWError as exc:
        raise BadParams(str(exc)) from None
    except ValueError as exc:
        raise BadParams(str(exc)) from None


def _labelled(bundle_name, alg: ModuleAlgebra, scalars, field) -> ModuleAlgebra:
    rels = expected_data()[bundle_name]["relations"]
    basis = [NcPoly.parse(t, alg.gens, scalars, field) for t in rels.values()]
    pres = alg.pres.relabel(basis, list(rels))
    pres.name = bundle_name
    return ModuleAlgebra(pres, alg.action, name=bundle_name, notes=alg.notes)


def sklyanin_warnings(a, b, c) -> list:
    out = []
    if a * b * c == 0:
        out.append("abc = 0: S(a,b,c) is degenerate")
    if a ** 3 == 1 and b ** 3 == 1 and c ** 3 == 1:
        out.append("a, b, c are all cube roots of unity: S(a,b,c) is degenerate")
    if (3 * a * b * c) ** 3 == (a ** 3 + b ** 3 + c ** 3) ** 3 and a * b * c != 0:
        out.append("(3abc)^3 = (a^3+b^3+c^3)^3: S(a,b,c) lies on the degenerate locus")
    return out


def _uq_plane(params, gl2=False):
    field, q, s = _quantum(params)
    n = params["n"]
    W = GenSet(["u", "v"])
    if gl2:
        H = uqgl2(n, field=field, q=q)
        images = {"E": {1: {0: 1}}, "F": {0: {1: 1}},
                  "G1": {0: {0: q}, 1: {1: 1}}, "G2": {0: {0: 1}, 1: {1: q}}}
    else:
        H = uqsl2(n, field=field, q=q)
        images = {"E": {1: {0: 1}}, "F": {0: {1: 1}}, "K": {0: {0: q}, 1: {1: 1 / q}}}
    act = ActionSpec(H, W, images)
    scalars = {"q": q, "s": s, "z": field.zeta}  # z: how field elements print
    r = NcPoly.parse("u.v - q*v.u", W, scalars, field)
    return H, ModuleAlgebra(QuadraticPresentation(W, [r], name="k_q[u,v]"), act, "k_q[u,v]"), scalars


def _sweedler_plane(params):
    H = sweedler()
    W = GenSet(["u", "v"])
    act = ActionSpec(H, W, {"g": {0: {0: 1}, 1: {1: -1}}, "x": {1: {0: 1}}})
    r = NcPoly.parse("u.v - v.u", W)
    return H, ModuleAlgebra(QuadraticPresentation(W, [r], name="k[u,v]"), act, "k[u,v]")


def sweedler_r_matrix(H, lam):
    half = Fraction(1, 2)
    return (H.parse("1@1 + 1@g + g@1 - g@g") * half
            + H.parse("x@x + x@gx + gx@gx - gx@x") * (lam * half))


def kc2_r_matrix(H):
    return H.parse("1@1 + 1@g + g@1 - g@g") * Fraction(1, 2)


def _sign_module(H, names):
    W = GenSet(names)
    return ActionSpec(H, W, {"g": {i: {i: -1} for i in range(len(names))}})


def _jordan(H):
    act = _sign_module(H, ["u", "v"])
    r = NcPoly.parse("v.u - u.v + v^2", act.gens)
    return ModuleAlgebra(QuadraticPresentation(act.gens, [r], name="k_J[u,v]"), act, "k_J[u,v]")


def _sklyanin(H, params):
    act = _sign_module(H, ["u", "v", "w"])
    ns = {k: params[k] for k in ("a", "b", "c")}
    texts = ["a*u.v + b*v.u + c*w^2", "a*v.w + b*w.v + c*u^2", "a*w.u + b*u.w + c*v^2"]
    rels = [NcPoly.parse(t, act.gens, ns) for t in texts]
    try:
        pres = QuadraticPresentation(act.gens, rels, name="S(a,b,c)")
    except BraidPBWError as exc:
        raise BadParams(f"Sklyanin relations are dependent for these parameters: {exc}") from None
    return ModuleAlgebra(pres, act, "S(a,b,c)")


def _double(name, H, A, braiding, scalars, first_is_opposite=False):
    """A (x)^c A^opc (or A^opc (x)^c A), relabelled to the expected basis."""
    opp = braided_opposite(A, braiding)
    first, second = (opp, A) if first_is_opposite else (A, opp)
    prod = braided_product(first, second, braiding)
    alg = _labelled(name, prod, scalars, H.field)
    return alg, (first, second), opp


# ---------------------------------------------------------------- builders


def build_example(name: str, params: dict | None = None) -> ExampleBundle:
    """Construct a named example; construction checks must pass."""
    if name not in NAMES:
        raise UnknownExample(name)
    p = _params(name, params)
    exp = expected_data()[name]
    notes = []
    checks = Report("construction", {"example": name})
    opp = None
    factors = ()
    braiding = None
    kind = "double"

    if name == "uqsl2-braided":
        H, A, scalars = _uq_plane(p)
        braiding = Uqsl2Braiding(H, scalars["s"])
        alg, factors, opp = _double(name, H, A, braiding, scalars, first_is_opposite=True)
    elif name in ("uqsl2-twisted", "uqgl2-twisted"):
        H, A, scalars = _uq_plane(p, gl2=name.startswith("uqgl2"))
        Wp = GenSet(["u'", "v'"])
        rp = NcPoly.parse("u'.v' - q*v'.u'", Wp, scalars, H.field)
        Ap = ModuleAlgebra(QuadraticPresentation(Wp, [rp], name="k_q[u',v']"), A.action.rename(Wp), "k_q[u',v']")
        table = {tuple(k.split(",")): v for k, v in expected_data()["uqsl2-twisted"]["twist"].items()}
        braiding = TwistSpec.from_strings(Wp, A.gens, table, H.field, scalars)
        prod = twisted_tensor(Ap, A, braiding)
        alg = _labelled(name, prod, scalars, H.field)
        factors = (Ap, A)
        kind = "twisted"
    elif name == "sweedler-plane":
        H, A = _sweedler_plane(p)
        scalars = {"lambda": p["lambda"]}
        R = sweedler_r_matrix(H, p["lambda"])
        braiding = RMatrixBraiding(R)
        checks.extend(check_quasitriangular(H, R, [A.action]), "R: ")
        alg, factors, opp = _double(name, H, A, braiding, scalars)
    elif name in ("jordan-c2-R", "jordan-c2-trivial", "sklyanin-c2-R", "sklyanin-c2-trivial"):
        H = kc2()
        if name.startswith("jordan"):
            A = _jordan(H)
            scalars = {}
        else:
            A = _sklyanin(H, p)
            scalars = {k: p[k] for k in ("a", "b", "c")}
            notes += sklyanin_warnings(p["a"], p["b"], p["c"])
        R = kc2_r_matrix(H) if name.endswith("-R") else flip_braiding(H).R
        braiding = RMatrixBraiding(R)
        checks.extend(check_quasitriangular(H, R, [A.action]), "R: ")
        alg, factors, opp = _double(name, H, A, braiding, scalars)
    else:
        kind = "algebra"
        if name == "quantum-plane":
            H, alg, scalars = _uq_plane(p)
        elif name == "jordan-plane":
            H = kc2()
            alg, scalars = _jordan(H), {}
        elif name == "sklyanin":
            H = kc2()
            alg = _sklyanin(H, p)
            scalars = {k: p[k] for k in ("a", "b", "c")}
            notes += sklyanin_warnings(p["a"], p["b"], p["c"])
        else:
            H, alg = _sweedler_plane(p)
            scalars = {}
        alg = _labelled(name, alg, scalars, H.field)

    checks.extend(check_module_algebra(alg.action, alg.pres), "module algebra: ")
    if not checks.ok:
        fail = checks.first_failure()
        raise BraidPBWError(f"construction check failed for {name}: {fail.name} {fail.witness}")
    for w in notes:
        _warnings.warn(f"{name}: {w}", stacklevel=2)
    used = {"n", "convention"} if name.startswith("uq") or name == "quantum-plane" else set()
    if name == "sweedler-plane":
        used = {"lambda"}
    if "sklyanin" in name:
        used = {"a", "b", "c"}
    shown = {k: v for k, v in p.items() if k in used}
    return ExampleBundle(name, shown, H, alg, factors, braiding, opp, scalars, exp, notes, checks, kind)


def default_uq_ansatz(bundle: ExampleBundle) -> dict:
    """A finite U_q ansatz: 1, K^(+-n), E^n, F^n (as G1^n G2^-n etc. for gl2)."""
    H = bundle.hopf
    n = bundle.params["n"]
    k = "K" if "K" in H.generators else "G1*G2^-1"
    texts = ["1", f"({k})^{n}", f"({k})^-{n}", f"E^{n}", f"F^{n}"]
    elems = [H.parse(t) for t in texts]
    return {label: list(elems) for label in bundle.pres.labels}
