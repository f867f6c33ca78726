from fractions import Fraction

from hypothesis import given, strategies as st

from braidpbw.catalog import build_example
from braidpbw.hopf import antipode, coproduct, counit, sweedler, uqsl2
from braidpbw.koszul import hilbert_prefix
from braidpbw.modalg import QuadraticPresentation
from braidpbw.pbwdeform import check_pbw, solve_kappa
from braidpbw.products import SmashAlgebra
from braidpbw.scalars import Field, format_scalar, parse_scalar, scalar_invert
from braidpbw.tensoralg import GenSet, NcPoly

G = GenSet(["u", "v", "w"])
small = st.integers(-4, 4)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polys(draw, gens=G, max_len=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        w = tuple(draw(st.lists(st.integers(0, len(gens) - 1), max_size=max_len)))
        terms[w] = terms.get(w, 0) + draw(small)
    return NcPoly(gens, {w: Fraction(c) for w, c in terms.items() if c})


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(polys())
def test_print_parse_roundtrip(p):
    assert NcPoly.parse(str(p), G) == p


@st.composite
def cyclo(draw, m=7):
    F = Field(m)
    return F.from_coefficients([draw(rationals) for _ in range(F.degree)])


@given(cyclo(), cyclo())
def test_field_laws(x, y):
    if x:
        assert x * scalar_invert(x) == 1
    assert (x + y) * (x - y) == x * x - y * y
    F = Field(7)
    assert parse_scalar(format_scalar(x), F) == x


T2 = sweedler()
T2_BASIS = [T2.basis_elem(k) for k in T2.basis_keys()]


@st.composite
def t2_elems(draw):
    out = T2.elem({})
    for b in T2_BASIS:
        out = out + b * draw(small)
    return out


@given(t2_elems(), t2_elems())
def test_t2_bialgebra(x, y):
    assert coproduct(x * y) == coproduct(x) * coproduct(y)
    assert counit(x * y) == counit(x) * counit(y)
    assert antipode(x * y) == antipode(y) * antipode(x)


UQ = uqsl2(5)
UQ_GENS = ["E", "F", "K"]


@st.composite
def uq_words(draw):
    names = draw(st.lists(st.sampled_from(UQ_GENS + ["K^-1"]), min_size=1, max_size=4))
    return UQ.parse("*".join(names))


@given(uq_words(), uq_words())
def test_uq_coproduct_multiplicative(x, y):
    assert coproduct(x * y) == coproduct(x) * coproduct(y)
    assert antipode(x * y) == antipode(y) * antipode(x)


SWEEDLER = build_example("sweedler-plane", {"lambda": 1})


@given(polys(SWEEDLER.pres.gens, max_len=2), polys(SWEEDLER.pres.gens, max_len=2), st.sampled_from(T2_BASIS))
def test_action_is_module_algebra_on_free_algebra(p, r, h):
    act = SWEEDLER.action
    lhs = act.act(h, p * r)
    rhs = NcPoly.zero(p.gens)
    for (k1, k2), c in coproduct(h).terms.items():
        rhs = rhs + act.act(T2.basis_elem(k1), p) * act.act(T2.basis_elem(k2), r) * c
    assert lhs == rhs


SMASH = SmashAlgebra(SWEEDLER.action)


@st.composite
def smash_elems(draw):
    p = draw(polys(SWEEDLER.pres.gens, max_len=2, max_terms=2))
    h = draw(t2_elems())
    return SMASH.pair(p, h) + SMASH.pair(draw(polys(SWEEDLER.pres.gens, max_len=1, max_terms=2)), draw(t2_elems()))


@given(smash_elems(), smash_elems(), smash_elems())
def test_smash_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(lambda c: c != 0))
def test_skew_plane_series(c):
    W = GenSet(["u", "v"])
    pres = QuadraticPresentation(W, [NcPoly(W, {(0, 1): Fraction(1), (1, 0): -c})])
    assert hilbert_prefix(pres, 4) == [1, 2, 3, 4, 5]


@given(st.integers(-3, 3))
def test_sweedler_lambda_keeps_dimension(lam):
    b = build_example("sweedler-plane", {"lambda": lam})
    assert solve_kappa(b.pres, b.action).dimension == 1
    assert hilbert_prefix(b.pres, 3) == [1, 4, 10, 20]


JORDAN = build_example("jordan-c2-R")
JORDAN_SOL = solve_kappa(JORDAN.pres, JORDAN.action)


@given(st.lists(small, min_size=3, max_size=3))
def test_solution_points_pass(weights):
    kappa = JORDAN_SOL.kappa(JORDAN_SOL.space.point(weights))
    assert check_pbw(kappa).ok
