"""Central conductor of o[[H x| Gamma]]: worked cases, truncated-algebra
identities, idempotents, and the degeneration to the finite formula."""

from fractions import Fraction

import pytest

from conductor.catalog import (
    sd_c3_trivial,
    sd_c7,
    sd_c9,
    sd_s3_inner,
    sd_s3_trivial,
)
from conductor.errors import InputError, InvalidQuotientError
from conductor.iwasawa import (
    TruncatedAlgebra,
    central_conductor,
    character_classes,
    commutator_criterion,
    degeneration_matches_finite,
    dual_basis_check,
    extension_dual_basis_check,
    filtered_annihilator,
    idempotent_suite,
    quotient_degree_check,
    scalar_conductor_exponent,
    splitting_field_bound,
    trace_lemma_check,
    trace_oracle,
    trace_truncated,
)
from conductor.localfields import AbelianLocalField


def test_c7_worked_case():
    cls = character_classes(sd_c7())
    assert len(cls) == 2
    by_w = {c.w: c for c in cls}
    big = by_w[3]
    assert [tuple(o) for o in big.orbits] == [(0, 1, 3), (2, 5, 4)]
    assert (big.eta_degree, big.chi_degree) == (1, 3)
    assert (big.field.ramification_index, big.field.residue_degree) == (1, 2)
    assert big.multiplier == Fraction(7) and big.multiplier_vp == 0
    assert big.invdiff_v == 0 and big.total_valuation() == 0
    assert big.embedding_exponent == 1
    small = by_w[1]
    assert [tuple(o) for o in small.orbits] == [(6,)]
    assert small.field.equals(AbelianLocalField.qp(3))
    assert small.total_valuation() == 0
    assert small.embedding_exponent == 3


def test_c3_worked_case():
    cls = character_classes(sd_c3_trivial())
    assert len(cls) == 2
    data = sorted(
        (c.w, c.field.ramification_index, c.field.residue_degree, c.total_valuation())
        for c in cls
    )
    assert data == [(1, 1, 1, 1), (1, 2, 1, 1)]
    merged = next(c for c in cls if c.field.ramification_index == 2)
    # the two nontrivial characters fall into one class over Q_3
    assert sorted(o[0] for o in merged.orbits) == [0, 1]
    assert merged.invdiff_v == -1 and merged.multiplier_vp == 1


def test_scalar_conductor_exponents():
    q3 = AbelianLocalField.qp(3)
    assert scalar_conductor_exponent(character_classes(sd_c7()), q3) == 0
    assert scalar_conductor_exponent(character_classes(sd_c3_trivial()), q3) == 1


def test_filtered_annihilator_drops_vanishing_classes():
    q3 = AbelianLocalField.qp(3)
    cls = character_classes(sd_c7())
    assert filtered_annihilator(cls, q3) == 0
    assert filtered_annihilator(cls, q3, vanishing=(0,)) == 0
    assert filtered_annihilator(cls, q3, vanishing=(0, 1)) == 0


def test_degeneration_to_finite_formula():
    assert degeneration_matches_finite(sd_s3_trivial())
    assert degeneration_matches_finite(sd_c3_trivial())
    with pytest.raises(InputError):
        degeneration_matches_finite(sd_c7())  # n = 1 is not a degeneration


def test_commutator_criterion():
    assert commutator_criterion(sd_c7())
    assert not commutator_criterion(sd_s3_inner())


def test_splitting_field_bound_c7():
    e, certs = splitting_field_bound(sd_c7())
    assert (e.ramification_index, e.residue_degree) == (1, 6)
    assert certs == {"orbits_singleton": True, "values_in_field": True}


def test_splitting_field_bound_c3():
    e, _ = splitting_field_bound(sd_c3_trivial())
    assert (e.ramification_index, e.residue_degree) == (2, 1)


def test_trace_is_scaled_delta():
    sd = sd_c7()
    for level in (1, 2):
        assert trace_lemma_check(sd, level)
        assert dual_basis_check(sd, level)


def test_trace_oracle_agrees_on_products():
    sd = sd_s3_inner()
    alg = TruncatedAlgebra(sd, 2)
    x = alg.basis_element(1, 2)
    y = alg.basis_element(2, 4)
    prod = alg.mul(x, y)
    assert trace_truncated(alg, prod) == trace_oracle(alg, prod)


def test_truncation_below_action_exponent_rejected():
    with pytest.raises(InvalidQuotientError):
        TruncatedAlgebra(sd_c7(), 0)
    with pytest.raises(InvalidQuotientError):
        extension_dual_basis_check(AbelianLocalField.qp(3), 1, 0)


def test_extension_dual_bases():
    fields = (
        AbelianLocalField.qp(3),
        AbelianLocalField.cyclotomic(3, 1),
        AbelianLocalField.unramified(3, 2),
    )
    for k in fields:
        for n in (0, 1):
            assert extension_dual_basis_check(k, n, n + 1)


def test_idempotent_suite_all_relations():
    for sd in (sd_c7(), sd_c9()):
        results = idempotent_suite(sd, level=sd.n + 1)
        assert all(results.values()), results


def test_quotient_degrees_small():
    assert quotient_degree_check(sd_c7(), 1)
    assert quotient_degree_check(sd_c3_trivial(), 1)


def test_full_description_round_trips_to_json():
    import json

    desc = central_conductor(sd_c7())
    text = json.dumps(desc.to_json())
    again = json.loads(text)
    assert again == desc.to_json()
    assert again["r_cap_exponent"] == 0
    assert again["splitting_field"] == {"e": 1, "f": 6, "d_abs": 0}
    assert len(again["components"]) == 2
