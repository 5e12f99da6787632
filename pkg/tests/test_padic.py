"""p-adic column reduction, lattice membership, Smith valuations."""

from fractions import Fraction

import pytest

from conductor.errors import PrecisionExhaustedError
from conductor.padic import (
    hnf_columns,
    lattice_contains,
    smith_valuations,
    sublattice_of,
    vp,
)


def test_vp():
    assert vp(18, 3) == 2
    assert vp(Fraction(9, 2), 3) == 2
    assert vp(Fraction(1, 3), 3) == -1


def test_hnf_diagonal():
    lat = hnf_columns(3, 12, [[1, 0], [0, 3]])
    assert lat.pivots == [0, 1]
    assert lat.pivot_vals == [0, 1]
    assert lat.index_valuation() == 1


def test_hnf_accepts_p_integral_fractions():
    lat = hnf_columns(3, 12, [[Fraction(3, 2), 0], [0, 3]])
    assert lat.pivot_vals == [1, 1]


def test_hnf_is_column_space_invariant():
    cols = [[3, 1, 0], [0, 1, 1], [9, 0, 2]]
    mixed = [
        [a + b for a, b in zip(cols[0], cols[1])],
        cols[1],
        [a + 3 * b for a, b in zip(cols[2], cols[0])],
    ]
    assert hnf_columns(3, 14, cols) == hnf_columns(3, 14, mixed)


def test_lattice_membership():
    lat = hnf_columns(3, 12, [[1, 0], [0, 3]])
    assert lattice_contains(lat, [1, 3])
    assert lattice_contains(lat, [5, -6])
    assert not lattice_contains(lat, [0, 1])


def test_rank_deficient_membership():
    # column space spanned by a single vector in Z^2
    lat = hnf_columns(3, 12, [[1, 2]])
    assert lattice_contains(lat, [3, 6])
    assert not lattice_contains(lat, [1, 0])


def test_sublattice_of():
    inner = hnf_columns(3, 12, [[3, 0], [0, 9]])
    outer = hnf_columns(3, 12, [[1, 0], [0, 1]])
    assert sublattice_of(inner, outer)
    assert not sublattice_of(outer, inner)


def test_smith_valuations():
    assert smith_valuations(3, 12, [[3, 0], [0, 9]]) == [1, 2]
    # unimodular moves do not change the valuations
    assert smith_valuations(3, 12, [[3, 9], [3, 18]]) == [1, 2]


def test_precision_exhaustion_is_loud():
    with pytest.raises(PrecisionExhaustedError):
        hnf_columns(3, 8, [[1, 0], [0, 3]])
