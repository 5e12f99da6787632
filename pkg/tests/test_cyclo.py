"""Exact cyclotomic arithmetic."""

from fractions import Fraction

import pytest

from conductor.cyclo import CycloNumber
from conductor.errors import InvalidAutomorphismError


def test_root_powers_sum_to_minus_one():
    z = CycloNumber.root(7)
    total = sum((z**k for k in range(1, 7)), CycloNumber.rational(0))
    assert total == CycloNumber.rational(-1)


def test_root_order():
    z = CycloNumber.root(9)
    assert z**9 == CycloNumber.rational(1)
    assert not (z**3).is_rational()


def test_scalar_arithmetic():
    z = CycloNumber.root(5)
    x = 2 * z - z
    assert x == z
    assert (x / 2) * 2 == z
    assert (Fraction(1, 3) * z) * 3 == z


def test_inverse():
    z = CycloNumber.root(12)
    x = 1 + z
    assert x * x.inverse() == CycloNumber.rational(1)


def test_galois_permutes_roots():
    z = CycloNumber.root(7)
    assert z.galois(2) == z**2
    assert (z + z**6).galois(3) == z**3 + z**4


def test_galois_requires_unit_exponent():
    z = CycloNumber.root(9)
    with pytest.raises(InvalidAutomorphismError):
        z.galois(3)


def test_conjugate_of_root_is_inverse_power():
    z = CycloNumber.root(5)
    assert z.conjugate() == z**4
    x = z + 2 * z**2
    assert (x * x.conjugate()).conjugate() == x * x.conjugate()


def test_trace_to_q():
    z = CycloNumber.root(3)
    # Tr(zeta_3) over Q is -1, trace of 1 is [Q(zeta_3):Q] = 2
    assert z.trace_to_q() == Fraction(-1)
    assert CycloNumber.rational(1).lift(3).trace_to_q() == Fraction(2)


def test_lift_preserves_value():
    z3 = CycloNumber.root(3)
    z12 = CycloNumber.root(12)
    assert z3.lift(12) == z12**4


def test_even_conductors_normalize():
    # conductors = 2 mod 4 are never stored: zeta_6 = 1 + zeta_3
    z6 = CycloNumber.root(6)
    assert z6.m == 3
    assert z6 == 1 + CycloNumber.root(3)


def test_minimal_conductor_strips_redundancy():
    z = CycloNumber.root(12)
    x = z**4  # a cube root of unity written mod 12
    assert x.minimal_conductor().m == 3


def test_json_round_trip():
    z = CycloNumber.root(9)
    x = Fraction(2, 3) * z**2 - 5
    assert CycloNumber.from_json(x.to_json()) == x


def test_as_fraction_on_rational():
    x = CycloNumber.rational(Fraction(7, 4)).lift(5)
    assert x.is_rational()
    assert x.as_fraction() == Fraction(7, 4)
