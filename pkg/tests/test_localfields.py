"""Abelian local fields inside cyclotomic towers."""

import pytest

from conductor.cyclo import CycloNumber
from conductor.errors import ContainmentError, InputError
from conductor.localfields import (
    AbelianLocalField,
    decomposition_group,
    field_of_values,
    relative_data,
)


def test_base_field_invariants():
    k = AbelianLocalField.qp(3)
    assert (k.ramification_index, k.residue_degree, k.degree, k.different_exponent) == (1, 1, 1, 0)


def test_cyclotomic_invariants():
    z3 = AbelianLocalField.cyclotomic(3, 1)
    z9 = AbelianLocalField.cyclotomic(3, 2)
    assert (z3.ramification_index, z3.residue_degree, z3.different_exponent) == (2, 1, 1)
    assert (z9.ramification_index, z9.residue_degree, z9.different_exponent) == (6, 1, 9)


def test_different_exponent_totally_ramified_formula():
    # p^(k-1) (k(p-1) - 1) for Q_p(zeta_{p^k})
    for p in (3, 5):
        for k in (1, 2):
            field = AbelianLocalField.cyclotomic(p, k)
            assert field.different_exponent == p ** (k - 1) * (k * (p - 1) - 1)


def test_unramified_invariants():
    u = AbelianLocalField.unramified(3, 2)
    assert (u.ramification_index, u.residue_degree, u.degree, u.different_exponent) == (1, 2, 2, 0)


def test_relative_data():
    qp = AbelianLocalField.qp(3)
    z3 = AbelianLocalField.cyclotomic(3, 1)
    z9 = AbelianLocalField.cyclotomic(3, 2)
    assert relative_data(qp, z3) == (2, 1, 1)
    assert relative_data(z3, z9) == (3, 1, 6)
    assert relative_data(qp, AbelianLocalField.unramified(3, 2)) == (1, 2, 0)


def test_relative_data_needs_containment():
    z3 = AbelianLocalField.cyclotomic(3, 1)
    u = AbelianLocalField.unramified(3, 2)
    with pytest.raises(ContainmentError):
        relative_data(z3, u)


def test_decomposition_group_is_cyclic_on_p():
    # generated by p mod m; for 3 mod 7 that is everything
    assert set(decomposition_group(3, 7)) == {1, 2, 3, 4, 5, 6}
    assert set(decomposition_group(3, 4)) == {1, 3}


def test_field_of_values_detects_rationality():
    qp = AbelianLocalField.qp(3)
    z = CycloNumber.root(7)
    k = field_of_values(qp, [z + z**2 + z**4])
    # the Gauss period generates the quadratic subfield; 3 is inert there
    assert (k.ramification_index, k.residue_degree) == (1, 2)
    k2 = field_of_values(qp, [CycloNumber.rational(5)])
    assert k2.equals(qp)


def test_json_round_trip():
    u = AbelianLocalField.unramified(3, 2)
    again = AbelianLocalField.from_json(u.to_json())
    assert again.equals(u)


def test_rejects_even_prime():
    with pytest.raises(InputError):
        AbelianLocalField.qp(2)
