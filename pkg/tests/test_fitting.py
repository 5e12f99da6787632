"""Fitting generators via reduced norms, and conductor-times-Fitting
annihilation of presentation cokernels."""

from fractions import Fraction

import pytest

from conductor.catalog import splitting_reps, symmetric_3
from conductor.cyclo import CycloNumber
from conductor.errors import InputError, UnsupportedPresentationError
from conductor.fitting import (
    PresentationMatrix,
    annihilation_check,
    fitting_generators,
    group_algebra_determinant,
    materialize_center,
    reduced_norm,
)
from conductor.groups import cyclic_group


def unit_vec(order, coeffs):
    out = [0] * order
    for k, v in coeffs.items():
        out[k] = v
    return out


def test_reduced_norm_of_identity_is_one():
    for g, reps in ((cyclic_group(3), []), (symmetric_3(), splitting_reps("S3"))):
        nr = reduced_norm(g, [[unit_vec(g.order, {0: 1})]], reps=reps)
        assert all(v == CycloNumber.rational(1) for v in nr)


def test_reduced_norm_c3_augmentation_style_element():
    g = cyclic_group(3)
    # 1 - g at each character: 0 at the trivial one, 1 - zeta elsewhere
    nr = reduced_norm(g, [[unit_vec(3, {0: 1, 1: -1})]])
    z = CycloNumber.root(3)
    zero = CycloNumber.rational(0)
    assert sorted(v.is_zero() for v in nr) == [False, False, True]
    assert {v for v in nr if not v.is_zero()} == {1 - z, 1 - z**2}
    trivial_rows = [i for i, v in enumerate(nr) if v == zero]
    assert len(trivial_rows) == 1


def test_reduced_norm_s3_transposition():
    g = symmetric_3()
    reps = splitting_reps("S3")
    t = g.generators[0]  # a transposition
    nr = reduced_norm(g, [[unit_vec(6, {0: 1, t: -1})]], reps=reps)
    # 0 at the trivial character, 2 at the sign, 0 at the 2-dimensional
    assert sorted(v.as_fraction() for v in nr) == [0, 0, 2]


def test_reduced_norm_multiplicative():
    g = symmetric_3()
    reps = splitting_reps("S3")
    a = [[unit_vec(6, {0: 2, 1: 1})]]
    b = [[unit_vec(6, {0: 1, 3: -2})]]
    from conductor.finite import _convolve

    prod = [[[Fraction(v) for v in _convolve(g, a[0][0], b[0][0])]]]
    nra = reduced_norm(g, a, reps=reps)
    nrb = reduced_norm(g, b, reps=reps)
    nrp = reduced_norm(g, prod, reps=reps)
    assert all(x * y == z for x, y, z in zip(nra, nrb, nrp))


def test_scalar_presentation_fitting_and_annihilation():
    g = cyclic_group(3)
    pres = PresentationMatrix(g, 1, 1, [[unit_vec(3, {0: 3})]])
    fit = fitting_generators(pres)
    assert not fit.zero
    assert fit.values == [[CycloNumber.rational(3)] * 3]
    assert annihilation_check(pres, 3)


def test_s3_transposition_presentation_annihilates():
    g = symmetric_3()
    reps = splitting_reps("S3")
    t = g.generators[0]
    pres = PresentationMatrix(g, 1, 1, [[unit_vec(6, {0: 1, t: -1})]])
    assert annihilation_check(pres, 3, reps=reps)


def test_tall_presentation():
    g = symmetric_3()
    reps = splitting_reps("S3")
    pres = PresentationMatrix(
        g, 2, 1, [[unit_vec(6, {0: 3})], [unit_vec(6, {0: 1, 3: -1})]]
    )
    fit = fitting_generators(pres, reps=reps)
    assert len(fit.subsets) == 2
    assert annihilation_check(pres, 3, reps=reps)


def test_wide_presentation_is_zero_class():
    g = cyclic_group(3)
    pres = PresentationMatrix(g, 1, 2, [[unit_vec(3, {0: 1}), unit_vec(3, {1: 1})]])
    fit = fitting_generators(pres)
    assert fit.zero and fit.values == []
    assert annihilation_check(pres, 3)


def test_degree_two_requires_splitting_rep():
    g = symmetric_3()
    with pytest.raises(UnsupportedPresentationError):
        reduced_norm(g, [[unit_vec(6, {0: 1})]], reps=[])


def test_materialize_center_requires_galois_coherence():
    g = cyclic_group(3)
    z = CycloNumber.root(3)
    # a constant tuple materializes to that constant times the identity
    good = materialize_center(g, [CycloNumber.rational(2)] * 3)
    assert good == [Fraction(2), Fraction(0), Fraction(0)]
    with pytest.raises(InputError):
        # equal values on a conjugate pair of characters are not coherent
        materialize_center(g, [z, z, CycloNumber.rational(1)])


def test_classical_determinant_cross_check():
    g = cyclic_group(4)
    mat = [
        [unit_vec(4, {0: 2, 1: 1}), unit_vec(4, {2: 1})],
        [unit_vec(4, {3: -1}), unit_vec(4, {0: 1, 1: 1})],
    ]
    det = group_algebra_determinant(g, mat)
    nr_det = reduced_norm(g, [[det]])
    prodwise = reduced_norm(g, mat)
    assert nr_det == prodwise


def test_mismatched_shapes_rejected():
    g = cyclic_group(3)
    with pytest.raises(InputError):
        PresentationMatrix(g, 2, 1, [[unit_vec(3, {0: 1})]])
    with pytest.raises(InputError):
        PresentationMatrix(g, 1, 1, [[[1, 0]]])


def test_nonabelian_classical_determinant_rejected():
    g = symmetric_3()
    with pytest.raises(InputError):
        group_algebra_determinant(g, [[unit_vec(6, {0: 1})]])
