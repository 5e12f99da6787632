"""Group construction, conjugacy, automorphisms, semidirect quotients."""

import pytest

from conductor.catalog import (
    alternating_4,
    dihedral,
    quaternion_8,
    sd_c3_trivial,
    sd_c7,
    symmetric_3,
)
from conductor.errors import InputError, InvalidQuotientError
from conductor.groups import (
    FiniteGroup,
    SemidirectData,
    commutator_subgroup,
    conjugacy_classes,
    cyclic_automorphism,
    cyclic_group,
    direct_product,
    finite_quotient,
)


def test_cyclic_group_law():
    g = cyclic_group(6)
    assert g.order == 6
    assert g.mult(4, 5) == 3
    assert g.inv(2) == 4


def test_class_counts():
    for g, want in ((symmetric_3(), 3), (dihedral(4), 5), (quaternion_8(), 5), (alternating_4(), 4)):
        assert len(conjugacy_classes(g).classes) == want, g.name


def test_class_sizes_partition_group():
    g = dihedral(4)
    cls = conjugacy_classes(g)
    assert sorted(cls.sizes) == [1, 1, 2, 2, 2]
    assert sum(cls.sizes) == g.order


def test_commutator_subgroups():
    assert len(commutator_subgroup(symmetric_3())) == 3
    assert len(commutator_subgroup(quaternion_8())) == 2
    assert len(commutator_subgroup(cyclic_group(12))) == 1


def test_from_table_rejects_non_group():
    bad = [[0, 1], [1, 1]]  # second row not a permutation
    with pytest.raises(InputError):
        FiniteGroup.from_table(bad)


def test_from_table_requires_identity_first():
    # this table is C2 relabeled so index 0 is not the identity
    bad = [[1, 0], [0, 1]]
    with pytest.raises(InputError):
        FiniteGroup.from_table(bad)


def test_automorphism_order():
    alpha = cyclic_automorphism(7, 2)
    assert alpha.order() == 3
    with pytest.raises(InputError):
        cyclic_automorphism(6, 2)


def test_semidirect_requires_p_power_order():
    h = cyclic_group(7)
    alpha = cyclic_automorphism(7, 3)  # order 6
    with pytest.raises(InputError):
        SemidirectData(h, alpha, 3)
    with pytest.raises(InputError):
        SemidirectData(h, cyclic_automorphism(7, 2), 4)  # p not prime


def test_semidirect_action_exponent():
    assert sd_c7().n == 1
    assert sd_c3_trivial().n == 0


def test_finite_quotient_law():
    sd = sd_c7()
    g = finite_quotient(sd, 1)
    assert g.order == 21
    hn = sd.h.order
    # gamma * h * gamma^-1 = alpha(h) for every h
    gamma = hn
    for x in range(hn):
        assert g.conj(gamma, x) == sd.alpha.images[x]


def test_finite_quotient_level_zero():
    sd = sd_c3_trivial()
    g = finite_quotient(sd, 0)
    assert g.order == 3
    assert all(gen < g.order for gen in g.generators)
    assert len(conjugacy_classes(g).classes) == 3


def test_finite_quotient_below_action_exponent():
    with pytest.raises(InvalidQuotientError):
        finite_quotient(sd_c7(), 0)


def test_direct_product_structure():
    g = direct_product(cyclic_group(2), cyclic_group(3))
    assert g.order == 6
    assert len(conjugacy_classes(g).classes) == 6


def test_element_orders():
    g = quaternion_8()
    orders = sorted(g.element_order(x) for x in range(8))
    assert orders == [1, 2, 4, 4, 4, 4, 4, 4]
