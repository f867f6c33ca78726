from fractions import Fraction

import pytest
from sympy import totient

from braidpbw.errors import EvenOrderNeedsExtension
from braidpbw.scalars import (EXTEND, ODD_POWER, Field, field_create, format_scalar, parse_scalar,
                              quantum_parameters, resolve_half_power, scalar_invert)


def test_m1_is_rationals():
    F = field_create("cyclotomic", 1)
    assert F.is_rational
    assert F.zeta == 1
    assert field_create() == F


def test_m3_minimal_relation():
    F = Field(3)
    z = F.zeta
    assert z * z + z + 1 == 0
    assert z ** 3 == 1 and z != 1


@pytest.mark.parametrize("m", [4, 5, 7, 8, 9, 12, 15])
def test_degree_is_totient(m):
    assert Field(m).degree == int(totient(m))


def test_m12_degree_four():
    assert Field(12).degree == 4


def test_invert_cube_root():
    q = Field(3).zeta
    assert scalar_invert(q) == q ** 2 == -1 - q


def test_invert_rational():
    assert scalar_invert(Fraction(2)) == Fraction(1, 2)
    assert scalar_invert(2) == Fraction(1, 2)


def test_invert_q_minus_qinv_at_5():
    q = Field(5).zeta
    x = q - scalar_invert(q)
    assert x * scalar_invert(x) == 1


def test_half_power_odd():
    F = Field(3)
    q = F.zeta
    assert resolve_half_power(F, 3, ODD_POWER) == q ** 2
    F5 = Field(5)
    s = resolve_half_power(F5, 5, ODD_POWER)
    assert s == F5.zeta ** 3 and s ** 2 == F5.zeta


def test_half_power_even_needs_extension():
    with pytest.raises(EvenOrderNeedsExtension):
        resolve_half_power(Field(4), 4, ODD_POWER)
    F = Field(8)
    s = resolve_half_power(F, 4, EXTEND)
    assert s == F.zeta
    assert s ** 2 == F.root_of_unity(4)
    assert s ** 4 == -1


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_quantum_parameters(n):
    F, q, s = quantum_parameters(n)
    assert s * s == q
    assert q ** n == 1
    assert all(q ** k != 1 for k in range(1, n))


def test_format_roundtrip():
    F = Field(5)
    z = F.zeta
    for x in [z, 1 + z, Fraction(3, 7) * z ** 3 - 2, F(0), F(-5)]:
        assert parse_scalar(format_scalar(x), F) == x
