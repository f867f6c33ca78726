import random

import pytest

from braidpbw.catalog import build_example
from braidpbw.hopf import trivial_hopf
from braidpbw.linalg import solve_linear
from braidpbw.modalg import ActionSpec, QuadraticPresentation
from braidpbw.pbwdeform import (KappaMap, check_full_conditions, check_invariance, check_overlap, check_pbw,
                                overlap_intersection, solve_kappa)
from braidpbw.tensoralg import GenSet, NcPoly, Subspace, subspace_intersect, tensor_spaces
from oracles import same_span


@pytest.fixture(scope="module")
def t2():
    return build_example("sweedler-plane", {"lambda": 1})


def test_intersection_dims():
    assert len(overlap_intersection(build_example("uqsl2-braided").pres)) == 4
    assert len(overlap_intersection(build_example("sklyanin-c2-R").pres)) == 20


def test_intersection_of_zero_ideal():
    G = GenSet(["x", "y"])
    assert overlap_intersection(QuadraticPresentation(G, [])) == []


def test_intersection_oracle_t2(t2):
    # build I (x) W and W (x) I directly and intersect
    g, rels = t2.pres.gens, t2.pres.relations
    left = Subspace(g, 3, tensor_spaces(rels, g, 0, 1))
    right = Subspace(g, 3, tensor_spaces(rels, g, 1, 0))
    assert subspace_intersect(left, right).dim == 4
    for x in overlap_intersection(t2.pres):
        assert left.contains(x.element) and right.contains(x.element)


def test_overlap_elements_have_both_expressions(t2):
    g = t2.pres.gens
    for x in overlap_intersection(t2.pres):
        lhs = NcPoly.zero(g)
        for (label, gen), c in x.left.items():
            lhs = lhs + t2.pres.relation(label) * g.gens()[gen] * c
        rhs = NcPoly.zero(g)
        for (gen, label), c in x.right.items():
            rhs = rhs + g.gens()[gen] * t2.pres.relation(label) * c
        assert lhs == x.element == rhs


def test_zero_kappa_passes(t2):
    k = KappaMap.zero(t2.pres, t2.action)
    assert check_invariance(k).ok
    assert check_overlap(k).ok
    assert check_full_conditions(k).ok


@pytest.mark.parametrize("t", [0, 1, 2])
def test_e_power_invariance(t):
    b = build_example("uqsl2-braided")
    k = b.kappa({"r2": f"E^(3*{t})"})
    rep = check_invariance(k)
    assert rep.ok
    kr2 = [c for c in rep.checks if c.name == "K.r2"]
    assert kr2 and kr2[0].ok


@pytest.mark.parametrize("name", ["jordan-c2-R", "jordan-c2-trivial", "sklyanin-c2-R"])
def test_kc2_invariance_is_free(name):
    b = build_example(name)
    rnd = random.Random(7)
    entries = {l: f"{rnd.randint(-9, 9)} + {rnd.randint(-9, 9)}*g" for l in b.pres.labels}
    assert check_invariance(b.kappa(entries)).ok


@pytest.mark.parametrize("alpha", [1, -3, 5])
def test_t2_r4_constant(t2, alpha):
    assert check_pbw(t2.kappa({"r4": str(alpha)})).ok


def test_jordan_lambda3_g():
    b = build_example("jordan-c2-R")
    assert check_pbw(b.kappa({"r3": "7*g"})).ok


@pytest.mark.parametrize("gamma", [1, 2, -1])
def test_t2_r1_x_rejected(t2, gamma):
    rep = check_overlap(t2.kappa({"r1": f"{gamma}*x"}))
    assert not rep.ok
    assert rep.first_failure().witness["kappa x id"] != rep.first_failure().witness["id x kappa"]


def test_solve_t2(t2):
    sol = solve_kappa(t2.pres, t2.action)
    assert sol.dimension == 1
    (k,) = sol.basis_kappas()
    assert {l: str(k.kc(l)) for l in t2.pres.labels if k.kc(l)} == {"r4": "1"}


def test_t2_linear_system_oracle(t2):
    # rebuild the constraints column by column: the unknown kappa(r_l) = e_i
    # contributes its residual in (a) and in (c') to every equation
    from braidpbw.hopf import adjoint_act
    from braidpbw.pbwdeform import _constant_sides

    H = t2.hopf
    basis = [H.basis_elem(key) for key in H.basis_keys()]
    unknowns = [(l, i) for l in t2.pres.labels for i in range(len(basis))]
    overlaps = overlap_intersection(t2.pres)
    table = t2.relation_table()
    eqs: dict = {}
    for l, i in unknowns:
        k = KappaMap(t2.pres, t2.action, {l: basis[i]})
        for x_idx, x in enumerate(overlaps):
            left, right = _constant_sides(k, x)
            for term, c in (left - right).terms.items():
                eqs.setdefault(("c", x_idx, term), {})[(l, i)] = c
        for name in H.generators:
            for l2 in t2.pres.labels:
                diff = -adjoint_act(H.gen(name), k.kc(l2))
                for l3, c in table[(name, l2)].items():
                    diff = diff + k.kc(l3) * c
                for key, c in diff.terms.items():
                    eqs.setdefault(("a", name, l2, key), {})[(l, i)] = c
    sol = solve_linear(list(eqs.values()), unknowns)
    assert sol.dimension == 1
    (v,) = sol.basis
    assert {key for key, c in v.items() if c} == {("r4", 0)}


@pytest.mark.parametrize("name,dim", [("jordan-c2-R", 3), ("jordan-c2-trivial", 3)])
def test_solve_jordan(name, dim):
    b = build_example(name)
    sol = solve_kappa(b.pres, b.action)
    assert sol.dimension == dim
    assert same_span(sol.basis_kappas(), b.expected_solution())


@pytest.mark.parametrize("name", ["sklyanin-c2-R", "sklyanin-c2-trivial"])
@pytest.mark.parametrize("abc,dim", [((1, 2, 3), 6), ((1, 1, 2), 15), ((1, 1, 1), 15)])
def test_solve_sklyanin(name, abc, dim):
    a, b_, c = abc
    with pytest.warns(UserWarning) if (a, b_, c) == (1, 1, 1) else _nothing():
        b = build_example(name, {"a": a, "b": b_, "c": c})
    sol = solve_kappa(b.pres, b.action)
    assert sol.dimension == dim
    assert same_span(sol.basis_kappas(), b.expected_solution())


class _nothing:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def so3_presentation(bracket):
    """Commutator relations on x, y, w under the trivial Hopf algebra."""
    H = trivial_hopf()
    G = GenSet(["x", "y", "w"])
    act = ActionSpec(H, G, {})
    rels = [NcPoly.parse(t, G) for t in ("x.y - y.x", "y.w - w.y", "w.x - x.w")]
    pres = QuadraticPresentation(G, rels)
    return KappaMap.parse(pres, act, bracket)


def test_jacobi_bracket_passes():
    k = so3_presentation({"r1": "w", "r2": "x", "r3": "y"})
    assert k.has_linear
    assert check_pbw(k).ok


def test_non_jacobi_bracket_fails():
    # [x,y] = y, [y,w] = x, [w,x] = 0: the Jacobi sum is [w,[x,y]] = [w,y] = -x
    k = so3_presentation({"r1": "y", "r2": "x"})
    assert not check_pbw(k).ok


def test_constant_family_full_conditions(t2):
    # zero linear part: (b) and (d) hold trivially, (c) is the constant-part condition
    good = check_full_conditions(t2.kappa({"r4": "2"}))
    assert good.ok
    bad = check_full_conditions(t2.kappa({"r1": "x"}))
    assert all(c.ok for c in bad.checks if c.name.startswith(("(b)", "(d)")))
    assert not bad.ok


def test_random_linear_kappa_fails_b(t2):
    rnd = random.Random(11)
    failures = 0
    for _ in range(5):
        entries = {l: f"{rnd.randint(1, 5)}*u + {rnd.randint(1, 5)}*v'" for l in t2.pres.labels}
        rep = check_full_conditions(t2.kappa(entries))
        failures += any(not c.ok for c in rep.checks if c.name.startswith("(b)"))
    assert failures == 5
