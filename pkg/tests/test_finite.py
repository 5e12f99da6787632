"""Finite group rings: the conductor formula against the brute-force
oracle, and the Ext annihilation consequences."""

from fractions import Fraction

from conductor.catalog import splitting_reps, symmetric_3
from conductor.finite import (
    annihilation_check,
    augmentation_module,
    brute_force_conductor,
    conductor_annihilates,
    formula_conductor_lattice,
    jacobinski_conductor,
    maximal_order_basis,
    maximal_order_module,
    sharpness_probe,
    trivial_module,
    working_precision,
)
from conductor.groups import cyclic_group
from conductor.padic import lattice_contains, sublattice_of


def test_formula_matches_brute_force_on_small_cases():
    cases = [
        (cyclic_group(3), 3, []),
        (cyclic_group(4), 3, []),
        (cyclic_group(9), 3, []),
        (symmetric_3(), 3, splitting_reps("S3")),
        (symmetric_3(), 5, splitting_reps("S3")),
    ]
    for g, p, reps in cases:
        prec = working_precision(g, p)
        assert formula_conductor_lattice(g, p, precision=prec) == brute_force_conductor(
            g, p, reps=reps, precision=prec
        ), "%s p=%d" % (g.name, p)


def test_conductor_index_valuations():
    # v_p of [maximal order center : conductor] on class-sum coordinates
    expected = {
        "C3": 1,
        "C6": 2,
        "C9": 4,
        "S3": 1,
        "D4": 0,
    }
    groups = {
        "C3": cyclic_group(3),
        "C6": cyclic_group(6),
        "C9": cyclic_group(9),
        "S3": symmetric_3(),
        "D4": None,
    }
    from conductor.catalog import dihedral

    groups["D4"] = dihedral(4)
    for name, want in expected.items():
        lat = formula_conductor_lattice(groups[name], 3)
        assert lat.index_valuation() == want, name


def test_c9_report_components():
    rep = jacobinski_conductor(cyclic_group(9), 3)
    data = sorted((c.degree, c.e, c.d_rel, c.multiplier, c.valuation) for c in rep.components)
    assert data == [
        (1, 1, 0, Fraction(9), 2),
        (1, 2, 1, Fraction(9), 3),
        (1, 6, 9, Fraction(9), 3),
    ]


def test_s3_report_at_split_prime():
    rep = jacobinski_conductor(symmetric_3(), 3)
    assert sorted(c.multiplier for c in rep.components) == [3, 6, 6]
    assert all(c.valuation == 1 for c in rep.components)
    assert all(c.e == 1 and c.f == 1 for c in rep.components)


def test_prime_to_order_conductor_is_everything():
    rep = jacobinski_conductor(symmetric_3(), 7)
    assert all(c.valuation == 0 for c in rep.components)
    lat = formula_conductor_lattice(symmetric_3(), 7)
    assert lat.index_valuation() == 0


def test_twist_does_not_change_conductor():
    g = symmetric_3()
    reps = splitting_reps("S3")
    plain = brute_force_conductor(g, 3, reps=reps)
    for seed in (1, 7):
        assert brute_force_conductor(g, 3, reps=reps, twist_seed=seed) == plain


def test_conductor_is_an_ideal_inside_the_group_ring_center():
    # conductor lattice sits inside the class-sum span of o[G] center
    g = cyclic_group(9)
    lat = formula_conductor_lattice(g, 3)
    from conductor.padic import hnf_columns

    n = lat.dim
    center = hnf_columns(3, lat.precision, [[int(i == j) for i in range(n)] for j in range(n)])
    assert sublattice_of(lat, center)


def test_maximal_order_basis_spans_unit():
    g = cyclic_group(4)
    cols, blocks = maximal_order_basis(g, 3)
    assert len(cols) == g.order
    # one block per Galois orbit of characters: x^4 - 1 = (x-1)(x+1)(x^2+1)
    assert sorted(b[2] for b in blocks) == [1, 2, 4]
    from conductor.padic import hnf_columns

    lat = hnf_columns(3, 16, cols)
    assert lattice_contains(lat, [1, 0, 0, 0])


def test_conductor_annihilates_ext():
    g = cyclic_group(3)
    triv = trivial_module(g)
    aug = augmentation_module(g)
    assert conductor_annihilates(g, 3, triv, triv.mod_p_power(1))
    assert conductor_annihilates(g, 3, aug, triv.mod_p_power(1))
    assert conductor_annihilates(g, 3, maximal_order_module(g, 3), aug.mod_p_power(1))


def test_sub_conductor_element_fails_somewhere():
    g = cyclic_group(3)
    triv = trivial_module(g)
    target = triv.mod_p_power(1)
    coords, name_m, name_n = sharpness_probe(g, 3, pool=[(triv, target)])
    assert not annihilation_check(coords, triv, target, 3)
    assert (name_m, name_n) == (triv.name, target.name)


def test_a4_agrees_even_at_the_bad_prime():
    # the acceptance catalog only runs A4 at split primes, but the two
    # computations agree at p = 3 as well
    from conductor.catalog import alternating_4

    g = alternating_4()
    brute = brute_force_conductor(g, 3, reps=splitting_reps("A4"))
    assert brute == formula_conductor_lattice(g, 3)
    assert brute.index_valuation() == 1
