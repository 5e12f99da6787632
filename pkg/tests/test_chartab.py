"""Character tables: orthogonality, restriction, orbit structure."""

from fractions import Fraction

from conductor.catalog import s3_x_c9, sd_c7, symmetric_3
from conductor.chartab import alpha_orbits, character_table, restrict_and_decompose
from conductor.cyclo import CycloNumber
from conductor.groups import cyclic_group


def test_s3_table_values():
    t = character_table(symmetric_3())
    assert t.degrees.count(1) == 2 and t.degrees.count(2) == 1
    # classes come out as (identity, transpositions, 3-cycles)
    assert t.sizes() == [1, 3, 2]
    rows = sorted(
        tuple(v.as_fraction() for v in row) for row in t.values
    )
    assert rows == [
        (Fraction(1), Fraction(-1), Fraction(1)),
        (Fraction(1), Fraction(1), Fraction(1)),
        (Fraction(2), Fraction(0), Fraction(-1)),
    ]


def test_degree_squares_sum_to_order():
    for g in (symmetric_3(), cyclic_group(8), s3_x_c9()):
        t = character_table(g)
        assert sum(d * d for d in t.degrees) == g.order


def test_orthogonality_verifiers():
    t = character_table(s3_x_c9())
    assert t.verify_row_orthogonality()
    assert t.verify_column_orthogonality()
    assert t.verify_degrees()


def test_column_sum_counts_identity():
    # sum over chi of chi(g) chi(1) is |G| at the identity and 0 elsewhere
    g = symmetric_3()
    t = character_table(g)
    reps = t.representatives()
    for j, rep in enumerate(reps):
        total = sum(
            (t.values[i][j] * t.degrees[i] for i in range(t.n_classes)),
            CycloNumber.rational(0),
        )
        want = CycloNumber.rational(g.order if rep == 0 else 0)
        assert total == want


def test_restriction_from_direct_product():
    big = s3_x_c9()
    small = symmetric_3()
    # elements of S3 sit at indices x*9 inside S3 x C9
    embedding = [x * 9 for x in range(6)]
    tb = character_table(big)
    ts = character_table(small)
    for row in range(tb.n_classes):
        parts = restrict_and_decompose(tb, row, ts, embedding=embedding)
        total = sum(mult * ts.degrees[r] for r, mult in parts)
        assert total == tb.degrees[row]


def test_alpha_orbits_of_c7_squaring():
    sd = sd_c7()
    orbs = alpha_orbits(character_table(sd.h), sd.alpha)
    data = [(o.members, o.w, o.eta_degree) for o in orbs]
    assert data == [((0, 1, 3), 3, 1), ((2, 5, 4), 3, 1), ((6,), 1, 1)]


def test_trivial_character_row_need_not_come_first():
    t = character_table(cyclic_group(3))
    trivial = [
        i
        for i, row in enumerate(t.values)
        if all(v == CycloNumber.rational(1) for v in row)
    ]
    assert len(trivial) == 1


def test_json_export_shape():
    t = character_table(symmetric_3())
    obj = t.to_json()
    assert obj["order"] == 6
    assert len(obj["rows"]) == t.n_classes
    assert [c["size"] for c in obj["classes"]] == list(t.sizes())
