import pytest

from braidpbw.scalars import Field
from braidpbw.tensoralg import GenSet, NcPoly, Subspace, subspace_intersect, tensor_spaces

W = GenSet(["u", "v", "u'", "v'"])


def P(text, **scalars):
    f = scalars.pop("field", None)
    return NcPoly.parse(text, W, scalars, f)


def test_concatenation_product():
    F = Field(3)
    q = F.zeta
    lhs = P("u.v - q*v.u", q=q, field=F) * P("u'", field=F)
    assert lhs == P("u.v.u' - q*v.u.u'", q=q, field=F)


def test_unit():
    p = P("u.v + 3*v")
    assert NcPoly.one(W) * p == p == p * NcPoly.one(W)


def test_noncommutative_expansion():
    assert P("u + v") * P("u - v") == P("u^2 - u.v + v.u - v^2")


def test_parse_roundtrip():
    for text in ["u.v - v.u", "2*u'^2 + v.u'", "0"]:
        p = P(text)
        assert P(str(p)) == p


def test_unknown_name_rejected():
    with pytest.raises(Exception):
        P("w.u")


def test_coordinate_planes_meet_in_line():
    G = GenSet(["x", "y", "z"])
    S1 = Subspace(G, 1, [G.gen("x"), G.gen("y")])
    S2 = Subspace(G, 1, [G.gen("y"), G.gen("z")])
    S = subspace_intersect(S1, S2)
    assert S.dim == 1
    assert S.contains(G.gen("y"))


def test_intersection_idempotent():
    G = GenSet(["x", "y", "z"])
    S = Subspace(G, 1, [G.gen("x") + G.gen("z")])
    assert subspace_intersect(S, S) == S


def test_tensor_spaces_dimension():
    G = GenSet(["u", "v"])
    r = NcPoly.parse("u.v - v.u", G)
    left = tensor_spaces([r], G, 0, 1)
    assert len(left) == 2
    assert all(p.is_homogeneous(3) for p in left)
