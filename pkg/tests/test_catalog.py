import warnings
from math import comb

import pytest

from braidpbw.catalog import NAMES, build_example, expected_data, sklyanin_warnings
from braidpbw.errors import BadParams, UnknownExample
from braidpbw.koszul import hilbert_prefix, tensor_series
from braidpbw.modalg import QuadraticPresentation, act_on_relations
from braidpbw.pbwdeform import check_pbw, overlap_intersection, solve_kappa
from braidpbw.products import braid_apply
from braidpbw.tensoralg import NcPoly, Subspace
from oracles import same_span

DOUBLES = [n for n in NAMES if n not in ("quantum-plane", "jordan-plane", "sklyanin", "poly-ring")]


@pytest.fixture(scope="module")
def bundles():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return {name: build_example(name) for name in NAMES}


def test_every_name_has_expected_data():
    assert sorted(expected_data()) == sorted(NAMES)


@pytest.mark.parametrize("name", NAMES)
def test_relations_match_labels(bundles, name):
    b = bundles[name]
    expected = b.expected["relations"]
    assert b.pres.labels == list(expected)
    for label, text in expected.items():
        assert b.pres.relation(label) == b.poly(text)


@pytest.mark.parametrize("name", [n for n in NAMES if "opposite" in expected_data()[n]])
def test_opposites(bundles, name):
    b = bundles[name]
    opp = b.opposite
    rels = [NcPoly.parse(t, opp.gens, b.scalars, b.hopf.field) for t in b.expected["opposite"]]
    assert QuadraticPresentation(opp.gens, rels).space == opp.pres.space


@pytest.mark.parametrize("abc", [(1, 2, 3), (3, 1, 5)])
def test_sklyanin_opposite_is_swapped(abc):
    a, b_, c = abc
    b = build_example("sklyanin-c2-R", {"a": a, "b": b_, "c": c})
    swapped = build_example("sklyanin", {"a": b_, "b": a, "c": c})
    renamed = [r.rename(b.opposite.gens, {x: x + "'" for x in "uvw"}) for r in swapped.pres.relations]
    assert QuadraticPresentation(b.opposite.gens, renamed).space == b.opposite.pres.space


@pytest.mark.parametrize("lam", [0, 1, 2])
def test_sweedler_opposite_products(lam):
    b = build_example("sweedler-plane", {"lambda": lam})
    A = b.factors[0]
    scal = dict(b.scalars)
    for pair, text in b.expected["opposite products"].items():
        y, z = (A.gens.index[n.rstrip("'")] for n in pair.split("."))
        image = braid_apply(b.braiding, A.action, A.action, {(y, z): 1})
        got = NcPoly(A.gens, {(i, j): c for (i, j), c in image.items()})
        assert got == NcPoly.parse(text, A.gens, scal)


@pytest.mark.parametrize("name", [n for n in NAMES if any(k.startswith("relation table") for k in expected_data()[n])])
def test_relation_tables(bundles, name):
    b = bundles[name]
    key = next(k for k in b.expected if k.startswith("relation table"))
    got = act_on_relations(b.action, b.pres)
    exp = b.expected_table(key)
    assert exp
    for entry, coords in exp.items():
        assert {l: c for l, c in got[entry].items() if c} == coords, entry


def test_braided_table_has_18_entries(bundles):
    assert len(bundles["uqsl2-braided"].expected_table("relation table n=3")) == 18


@pytest.mark.parametrize("name", [n for n in NAMES if any(k.startswith("overlap identities") for k in expected_data()[n])])
def test_overlap_identities(bundles, name):
    b = bundles[name]
    key = next(k for k in b.expected if k.startswith("overlap identities"))
    ids = b.overlap_identities(key)
    assert len(ids) == 4
    inter = overlap_intersection(b.pres)
    span = Subspace(b.pres.gens, 3, [x.element for x in inter])
    for left, right in ids:
        assert left == right
        assert span.contains(left)


@pytest.mark.parametrize("name", DOUBLES)
def test_intersection_dimension(bundles, name):
    b = bundles[name]
    assert len(overlap_intersection(b.pres)) == b.expected["intersection dimension"]


@pytest.mark.parametrize("name", NAMES)
def test_hilbert(bundles, name):
    b = bundles[name]
    assert hilbert_prefix(b.pres, len(b.expected["hilbert"]) - 1) == b.expected["hilbert"]


@pytest.mark.parametrize("name", DOUBLES)
def test_hilbert_is_tensor_count(bundles, name):
    b = bundles[name]
    first, second = b.factors
    a = hilbert_prefix(first.pres, 4)
    c = hilbert_prefix(second.pres, 4)
    assert hilbert_prefix(b.pres, 4) == tensor_series(a, c)
    k = len(b.pres.gens)
    assert b.expected["hilbert"][3] == comb(3 + k - 1, k - 1)


def test_sweedler_dimension_one():
    b = build_example("sweedler-plane", {"lambda": 1})
    assert b.expected_dimension() == 1


def test_symmetric_sklyanin_dimension_15():
    with pytest.warns(UserWarning):
        b = build_example("sklyanin-c2-R", {"a": 1, "b": 1, "c": 1})
    assert b.expected_dimension() == 15
    assert solve_kappa(b.pres, b.action).dimension == 15


def test_jordan_trivial_expected_kappas():
    b = build_example("jordan-c2-trivial")
    assert b.expected["solution"] == [{"r1": "1"}, {"r2": "1"}, {"r3": "1"}]


@pytest.mark.parametrize("name", ["sweedler-plane", "jordan-c2-R", "jordan-c2-trivial",
                                  "sklyanin-c2-R", "sklyanin-c2-trivial"])
def test_expected_solutions_span_solved_space(bundles, name):
    b = bundles[name]
    sol = solve_kappa(b.pres, b.action)
    assert sol.dimension == b.expected_dimension()
    assert same_span(sol.basis_kappas(), b.expected_solution())
    for k in b.expected_solution():
        assert check_pbw(k).ok


def test_negative_control_recorded(bundles):
    b = bundles["sweedler-plane"]
    assert not check_pbw(b.kappa(b.expected["negative control"])).ok


def test_unknown_name():
    with pytest.raises(UnknownExample):
        build_example("nope")


@pytest.mark.parametrize("name", ["uqsl2-braided", "uqsl2-twisted", "uqgl2-twisted", "quantum-plane"])
def test_small_n_rejected(name):
    with pytest.raises(BadParams):
        build_example(name, {"n": 2})


def test_unknown_param_rejected():
    with pytest.raises(BadParams):
        build_example("sweedler-plane", {"mu": 1})


def test_dependent_sklyanin_is_bad_params():
    # a = b = c = 0 leaves no relations
    with pytest.raises(BadParams):
        build_example("sklyanin", {"a": 0, "b": 0, "c": 0})


@pytest.mark.parametrize("abc,count", [((1, 2, 3), 0), ((0, 1, 2), 1), ((1, 1, 1), 2), ((1, 1, -2), 1)])
def test_sklyanin_warnings(abc, count):
    assert len(sklyanin_warnings(*abc)) == count


def test_degenerate_sklyanin_warns_but_builds():
    with pytest.warns(UserWarning, match="degenerate"):
        b = build_example("sklyanin", {"a": 0, "b": 1, "c": 2})
    assert b.warnings


def test_braided_family_needs_n3():
    b = build_example("uqsl2-braided", {"n": 5})
    with pytest.raises(Exception):
        b.family_template()


def test_gl2_relations_match_sl2(bundles):
    assert bundles["uqgl2-twisted"].pres.space.basis == bundles["uqsl2-twisted"].pres.space.basis


def test_gl2_constraints_match_sl2_under_k(bundles):
    g, s = bundles["uqgl2-twisted"], bundles["uqsl2-twisted"]
    assert act_on_relations(g.action, g.pres, g.sl2_elements()) == act_on_relations(s.action, s.pres, s.sl2_elements())


def test_gl2_central_grouplike_scales_relations(bundles):
    # G1*G2 acts on every generator by q, hence by q^2 on each relation, while
    # its adjoint action on U_q(gl2) is trivial: kappa must vanish
    b = bundles["uqgl2-twisted"]
    H = b.hopf
    q = b.scalars["q"]
    c = H.parse("G1*G2")
    for label, r in zip(b.pres.labels, b.pres.relations):
        assert b.action.act(c, r) == r * q ** 2
    for t in ("E", "F", "G1", "G2"):
        assert c * H.gen(t) == H.gen(t) * c


def test_summary_is_json_ready(bundles):
    import json

    for b in bundles.values():
        json.dumps(b.summary())
