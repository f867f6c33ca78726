from math import comb

import pytest

from braidpbw.catalog import build_example
from braidpbw.errors import BoundExceeded
from braidpbw.koszul import (BOUND_ENV, ReductionSystem, confluence_check, degree_bound, dim_graded,
                             hilbert_prefix, tensor_series)
from braidpbw.modalg import QuadraticPresentation
from braidpbw.tensoralg import GenSet, NcPoly


def polynomial_dims(k, dmax):
    """Graded dimensions of a polynomial ring in k variables."""
    return [comb(d + k - 1, k - 1) for d in range(dmax + 1)]


def test_twisted_system_confluent():
    b = build_example("uqsl2-twisted")
    rep = confluence_check(ReductionSystem.from_relations(b.pres.gens, b.pres.relations))
    assert rep.ok
    assert len(rep.checks) == 4


def test_quantum_plane_confluent():
    b = build_example("quantum-plane")
    system = ReductionSystem.from_relations(b.pres.gens, b.pres.relations)
    assert system.overlaps() == []
    assert confluence_check(system).ok


def test_generic_sklyanin_not_confluent():
    b = build_example("sklyanin", {"a": 1, "b": 2, "c": 3})
    rep = confluence_check(ReductionSystem.from_relations(b.pres.gens, b.pres.relations))
    assert not rep.ok
    w = rep.first_failure().witness
    assert w["via left rule"] != w["via right rule"]


def test_d3_counts():
    assert dim_graded(build_example("uqsl2-braided").pres, 3) == comb(3 + 3, 3) == 20
    assert dim_graded(build_example("sklyanin-c2-R").pres, 3) == comb(3 + 5, 5) == 56


@pytest.mark.parametrize("name", ["quantum-plane", "sklyanin", "sweedler-plane"])
def test_d1_is_generator_count(name):
    pres = build_example(name).pres
    assert dim_graded(pres, 1) == len(pres.gens)
    assert dim_graded(pres, 0) == 1


def test_quantum_plane_series():
    assert hilbert_prefix(build_example("quantum-plane").pres, 4) == [1, 2, 3, 4, 5]


def test_jordan_double_series():
    got = hilbert_prefix(build_example("jordan-c2-R").pres, 3)
    assert got == polynomial_dims(4, 3) == [1, 4, 10, 20]


def test_free_algebra():
    G = GenSet(["x", "y"])
    assert hilbert_prefix(QuadraticPresentation(G, []), 3) == [1, 2, 4, 8]


def test_tensor_series():
    a = polynomial_dims(3, 4)
    assert tensor_series(a, a) == polynomial_dims(6, 4)


def test_bound(monkeypatch):
    pres = build_example("quantum-plane").pres
    with pytest.raises(BoundExceeded):
        dim_graded(pres, 5)
    assert dim_graded(pres, 6, bound=6) == 7
    monkeypatch.setenv(BOUND_ENV, "6")
    assert degree_bound() == 6
    assert hilbert_prefix(pres, 6) == list(range(1, 8))


def test_reduction_normal_forms():
    G = GenSet(["u", "v"])
    r = NcPoly.parse("v.u - 2*u.v", G)
    system = ReductionSystem.from_relations(G, [r])
    assert system.reduce_poly(NcPoly.parse("v.u", G)) == NcPoly.parse("2*u.v", G)
    assert [G.word_str(w) for w in system.normal_words(2)] == ["u.u", "u.v", "v.v"]
