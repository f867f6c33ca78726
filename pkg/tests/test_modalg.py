import pytest

from braidpbw.catalog import build_example
from braidpbw.errors import BraidPBWError
from braidpbw.hopf import kc2, sweedler
from braidpbw.modalg import (ActionSpec, QuadraticPresentation, act_on_relations, check_module_algebra,
                             format_relation_table)
from braidpbw.tensoralg import GenSet, NcPoly


@pytest.fixture(scope="module")
def braided():
    return build_example("uqsl2-braided", {"n": 3})


def test_e_on_r6(braided):
    q = braided.scalars["q"]
    table = braided.relation_table()
    assert table[("E", "r6")] == {"r4": 1 / q, "r5": 1}


def test_k_on_r3(braided):
    q = braided.scalars["q"]
    assert braided.relation_table()[("K", "r3")] == {"r3": q ** 2}


def test_unit_acts_trivially(braided):
    H = braided.hopf
    for r in braided.pres.relations:
        assert braided.action.act(H.one(), r) == r


def test_jordan_sign_action_fixes_relation():
    b = build_example("jordan-plane")
    r = b.pres.relation("r1")
    assert r == b.poly("v.u - u.v + v^2")
    assert b.action.act(b.hopf.gen("g"), r) == r


def test_sweedler_tables():
    plane = build_example("poly-ring")
    assert plane.relation_table()[("g", "r1")] == {"r1": -1}
    double = build_example("sweedler-plane")
    assert double.relation_table()[("x", "r4")] == {"r3": 1, "r6": -1}


def test_quantum_plane_is_module_algebra():
    b = build_example("quantum-plane")
    assert check_module_algebra(b.action, b.pres).ok


def test_jordan_sign_module_algebra():
    b = build_example("jordan-plane")
    assert check_module_algebra(b.action, b.pres).ok


def test_jordan_wrong_action_fails():
    H = kc2()
    W = GenSet(["u", "v"])
    act = ActionSpec(H, W, {"g": {0: {0: 1}, 1: {1: -1}}})
    pres = QuadraticPresentation(W, [NcPoly.parse("v.u - u.v + v^2", W)])
    # oracle: g.(vu - uv + v^2) = -vu + uv + v^2, which is not a multiple of r
    image = act.act(H.gen("g"), pres.relations[0])
    assert image == NcPoly.parse("-v.u + u.v + v^2", W)
    assert pres.coordinates(image) is None
    rep = check_module_algebra(act, pres)
    assert not rep.ok
    assert rep.first_failure().name == "relations span a submodule"


def test_action_must_respect_hopf_relations():
    T = sweedler()
    W = GenSet(["u", "v"])
    # g acting as the identity cannot anticommute with x
    act = ActionSpec(T, W, {"g": {0: {0: 1}, 1: {1: 1}}, "x": {1: {0: 1}}})
    assert not check_module_algebra(act).ok


def test_dependent_relations_rejected():
    W = GenSet(["u", "v"])
    r = NcPoly.parse("u.v", W)
    with pytest.raises(BraidPBWError):
        QuadraticPresentation(W, [r, r * 2])


def test_matrices_roundtrip():
    b = build_example("poly-ring")
    act = b.action
    again = ActionSpec.from_matrices(act.hopf, act.gens, act.matrices())
    assert again.images == act.images


def test_formatted_table(braided):
    text = format_relation_table(braided.relation_table())
    # q^2 = -1 - q in Q(zeta_3)
    assert text["K.r3"] == "(-z - 1)*r3"
