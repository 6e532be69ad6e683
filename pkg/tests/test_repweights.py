"""Tests for the weight-matrix constructors and the reference fixtures."""

from math import comb

import numpy as np
import pytest

from liecodes.fieldcodes import FpMatrix, analyze, row_space_code
from liecodes.repweights import (
    ModuleSpec,
    adjoint_weight_matrix_A,
    build_weight_matrix,
    d_adjoint_spin_matrix,
    d_lambda2_matrix,
    d_lambda3_matrix,
    d_spin_matrix,
    exceptional_adjoint_matrix,
    exceptional_minimal_matrix,
    ext4_sl8_matrix,
    ext_weight_matrix_A,
    fixture_matrix,
    to_cartan_h,
    validate_module_spec,
)


def column_multiset(entries):
    return sorted(map(tuple, entries.T.tolist()))


def column_multiset_up_to_sign(entries):
    cols = []
    for col in entries.T.tolist():
        lead = next((x for x in col if x), 0)
        cols.append(tuple(col) if lead >= 0 else tuple(-x for x in col))
    return sorted(cols)


# ---------------------------------------------------------------------------
# sl(n) exterior powers

def test_ext_matrix_unit_rows():
    wm = ext_weight_matrix_A(4, 2, "matrix_unit_E")
    assert wm.entries.shape == (4, 6)
    assert wm.entries[0].tolist() == [1, 1, 1, 0, 0, 0]


def test_ext_cartan_rows_are_differences():
    for n, r in [(4, 2), (6, 3), (8, 4)]:
        e = ext_weight_matrix_A(n, r, "matrix_unit_E").entries
        h = ext_weight_matrix_A(n, r, "cartan_h").entries
        assert np.array_equal(h, e[:-1] - e[1:])
    assert ext_weight_matrix_A(4, 2, "cartan_h").entries[0].tolist() == [0, 1, 1, -1, -1, 0]


@pytest.mark.parametrize("n,r", [(5, 2), (7, 3), (8, 4)])
def test_ext_column_count(n, r):
    assert ext_weight_matrix_A(n, r, "matrix_unit_E").cols == comb(n, r)


def test_ext_odd_row_relation_mod2():
    # over F2 the odd-indexed Cartan rows of the square power sum to zero
    for m in (3, 4, 5):
        h = ext_weight_matrix_A(2 * m, 2, "cartan_h").mod(2).entries
        assert not (h[0::2].sum(axis=0) % 2).any()


def test_ext_rejects_bad_degree():
    with pytest.raises(ValueError):
        ext_weight_matrix_A(3, 3)
    with pytest.raises(ValueError):
        ext_weight_matrix_A(2, 0)


# ---------------------------------------------------------------------------
# sl(n) adjoint

def test_adjoint_rows_sum_to_zero():
    for n in (3, 5, 8):
        rows = adjoint_weight_matrix_A(n, "matrix_unit_E").entries
        assert not rows.sum(axis=0).any()


def test_adjoint_cartan_column_for_first_simple_root():
    k = adjoint_weight_matrix_A(4, "cartan_h")
    col = list(k.column_labels).index("e1-e2")
    assert k.entries[:, col].tolist() == [2, -1, 0]


def test_adjoint_k_code_sl6():
    # enumeration gives [15,4,9]; the stated distance 3 is a documented typo
    rep = analyze(row_space_code(adjoint_weight_matrix_A(6, "cartan_h").mod(3)))
    assert rep.params() == (15, 4, 9)
    assert rep.self_orthogonal


# ---------------------------------------------------------------------------
# o(2m) constructions

def test_lambda2_shape_and_self_product():
    for m in (3, 4, 7):
        wm = d_lambda2_matrix(m)
        assert wm.cols == m * (m - 1)
        gram = wm.entries @ wm.entries.T
        assert all(gram[i, i] == 2 * (m - 1) for i in range(m))


def test_lambda2_codes():
    assert analyze(row_space_code(d_lambda2_matrix(4).mod(3))).params() == (12, 4, 6)
    assert analyze(row_space_code(d_lambda2_matrix(7).mod(3))).params() == (42, 7, 12)


def test_lambda3_shape_and_self_product():
    for m in (3, 5, 6):
        wm = d_lambda3_matrix(m)
        assert wm.cols == comb(m, 3) + m * comb(m, 2)
        gram = wm.entries @ wm.entries.T
        assert all(gram[i, i] == (m - 1) * (2 * m - 3) for i in range(m))


def test_lambda3_codes():
    assert analyze(row_space_code(d_lambda3_matrix(3).mod(3))).params() == (10, 3, 6)
    assert analyze(row_space_code(d_lambda3_matrix(4).mod(3))).params() == (28, 4, 15)


def test_spin_shapes_and_weights():
    wm = d_spin_matrix(5)
    assert wm.cols == 16
    m5 = wm.mod(3)
    from liecodes.fieldcodes import combination_weight

    assert combination_weight(m5, [1, 0, 0, 0, 0]) == 16
    assert combination_weight(m5, [1, 1, 0, 0, 0]) == 8
    assert d_spin_matrix(8, half=True).cols == 64


def test_spin_code_m6_exception():
    assert analyze(row_space_code(d_spin_matrix(6).mod(3))).params() == (32, 6, 12)


def test_spin_rejects_bad_requests():
    with pytest.raises(ValueError):
        d_spin_matrix(5, half=True)
    with pytest.raises(ValueError):
        d_spin_matrix(6).mod(2)


def test_adjoint_spin_blocks():
    even = d_adjoint_spin_matrix(8, "weight_code")
    assert even.cols == 8 * 7 + 2 ** 6
    odd = d_adjoint_spin_matrix(9, "weight_code")
    assert odd.cols == 2 * 9 * 8 + 2 ** 8
    ds = d_adjoint_spin_matrix(5, "direct_sum")
    assert ds.cols == 5 * 4 + 2 ** 4


def test_adjoint_spin_codes():
    assert analyze(row_space_code(d_adjoint_spin_matrix(8, "weight_code").mod(3))).params() == (120, 8, 57)
    assert analyze(row_space_code(d_adjoint_spin_matrix(5, "direct_sum").mod(3))).params() == (36, 5, 21)
    assert analyze(row_space_code(d_adjoint_spin_matrix(6, "direct_sum").mod(3))).params() == (62, 6, 27)


# ---------------------------------------------------------------------------
# exceptional families and fixtures

@pytest.mark.parametrize(
    "family,fixture,cols",
    [("F4", "F4_minimal", 12), ("E6", "E6_minimal", 27), ("E7", "E7_minimal", 28)],
)
def test_minimal_matches_fixture_up_to_sign(family, fixture, cols):
    gen = exceptional_minimal_matrix(family)
    fix = fixture_matrix(fixture)
    assert gen.cols == cols
    assert column_multiset_up_to_sign(gen.entries) == column_multiset_up_to_sign(fix.entries)
    rep_gen = analyze(row_space_code(gen.mod(3)))
    rep_fix = analyze(row_space_code(fix.mod(3)))
    assert rep_gen.params() == rep_fix.params()
    assert rep_gen.weight_distribution == rep_fix.weight_distribution


def test_e6_minimal_matches_fixture_exactly():
    gen = exceptional_minimal_matrix("E6")
    fix = fixture_matrix("E6_minimal")
    assert column_multiset(gen.entries) == column_multiset(fix.entries)


def test_f4_adjoint_matches_fixture_up_to_permutation():
    gen = exceptional_adjoint_matrix("F4")
    fix = fixture_matrix("F4_adjoint")
    assert column_multiset(gen.entries) == column_multiset(fix.entries)
    rep_gen = analyze(row_space_code(gen.mod(3)))
    rep_fix = analyze(row_space_code(fix.mod(3)))
    assert rep_gen.weight_distribution == rep_fix.weight_distribution


def test_discarded_pair_members_are_negations():
    from liecodes.rootsys import cartan_matrix, weyl_orbit

    for family, rank, node in [("F4", 4, 3), ("E7", 7, 6)]:
        orbit = weyl_orbit(cartan_matrix(family, rank), tuple(1 if i == node else 0 for i in range(rank)))
        kept = [tuple(c) for c in exceptional_minimal_matrix(family).entries.T.tolist()]
        dropped = [tuple(-x for x in c) for c in kept]
        assert sorted(kept + dropped) == sorted(orbit)


def test_opposite_representative_choice_same_report():
    for family in ("F4", "E7"):
        wm = exceptional_minimal_matrix(family)
        rep = analyze(row_space_code(wm.mod(3)))
        flipped = analyze(row_space_code(FpMatrix.reduce(3, -wm.entries)))
        assert flipped.params() == rep.params()
        assert flipped.weight_distribution == rep.weight_distribution
    half = d_spin_matrix(8, half=True)
    rep = analyze(row_space_code(half.mod(3)))
    flipped = analyze(row_space_code(FpMatrix.reduce(3, -half.entries)))
    assert flipped.weight_distribution == rep.weight_distribution


def test_e6_adjoint_rank_and_row_relation():
    wm = exceptional_adjoint_matrix("E6")
    rel = (wm.entries[0] - wm.entries[2] + wm.entries[4] - wm.entries[5]) % 3
    assert not rel.any()
    assert row_space_code(wm.mod(3)).k == 5


@pytest.mark.parametrize("family,cols", [("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120)])
def test_adjoint_column_counts(family, cols):
    assert exceptional_adjoint_matrix(family).cols == cols


def test_e8_adjoint_code():
    assert analyze(row_space_code(exceptional_adjoint_matrix("E8").mod(3))).params() == (120, 8, 57)


def test_ext4_sl8():
    from liecodes.fieldcodes import combination_weight

    wm = ext4_sl8_matrix()
    assert wm.entries.shape == (7, 70)
    m = wm.mod(3)
    assert combination_weight(m, [1, -1, 0, 0, 0, 0, 0]) == 40
    assert combination_weight(m, [1, 1, 1, 1, 1, 1, 0]) == 30
    assert combination_weight(m, [0] * 7) == 0


def test_fixture_unknown_name():
    with pytest.raises(ValueError):
        fixture_matrix("G2_minimal")


def test_fixture_row_weights_as_published():
    from liecodes.fieldcodes import combination_weight

    a = fixture_matrix("F4_minimal").mod(3)
    unit = lambda i, n: [1 if j == i else 0 for j in range(n)]
    assert combination_weight(a, unit(0, 4)) == 6
    assert all(combination_weight(a, unit(i, 4)) == 9 for i in (2, 3))
    assert combination_weight(a, [1, 0, 1, 0]) == 9

    b = fixture_matrix("F4_adjoint").mod(3)
    assert all(combination_weight(b, unit(i, 4)) == 15 for i in range(4))
    assert combination_weight(b, [1, 0, 1, 0]) == 18

    e6 = fixture_matrix("E6_minimal").mod(3)
    assert all(combination_weight(e6, unit(i, 6)) == 12 for i in range(6))
    assert combination_weight(e6, [1, 0, 1, 0, 0, 0]) == 12
    assert combination_weight(e6, [1, 0, 0, 1, 0, 0]) == 18
    assert combination_weight(e6, [1, 1, 0, 0, 0, 0]) == 18
    assert combination_weight(e6, [1, -1, -1, 0, 0, 0]) == 21

    # binary row weights of the sl(n) exterior matrices
    for n in (6, 10):
        h2 = ext_weight_matrix_A(n, 2, "cartan_h").mod(2)
        assert all(combination_weight(h2, unit(i, n - 1)) == 2 * (n - 2) for i in range(n - 1))
        h3 = ext_weight_matrix_A(n, 3, "cartan_h").mod(2)
        assert all(combination_weight(h3, unit(i, n - 1)) == (n - 2) * (n - 3) for i in range(n - 1))


# ---------------------------------------------------------------------------
# module specs and basis conversion

def test_build_weight_matrix_legality():
    good = ModuleSpec("E8", 8, "minimal", 3)
    assert build_weight_matrix(good).module == "adjoint"
    for bad in [
        ModuleSpec("A", 6, "spin", 3),
        ModuleSpec("A", 6, "ext2", 5),
        ModuleSpec("D", 6, "ext2", 2),
        ModuleSpec("D", 5, "spin_half", 3),
        ModuleSpec("D", 6, "adjoint_plus_spin", 3),  # missing mode
        ModuleSpec("F4", 4, "spin", 3),
        ModuleSpec("F4", 5, "minimal", 3),
        ModuleSpec("A", 2, "ext2", 2),
        ModuleSpec("X9", 4, "minimal", 3),
    ]:
        with pytest.raises(ValueError):
            validate_module_spec(bad)


def test_to_cartan_h_families():
    e = ext_weight_matrix_A(5, 2, "matrix_unit_E")
    h = to_cartan_h(e)
    assert np.array_equal(h.entries, ext_weight_matrix_A(5, 2, "cartan_h").entries)
    d = to_cartan_h(d_lambda2_matrix(4))
    assert d.rows == 4
    g = d_lambda2_matrix(4).entries
    assert np.array_equal(d.entries[-1], g[-2] + g[-1])
    with pytest.raises(ValueError):
        to_cartan_h(ext4_sl8_matrix())  # the eighth matrix-unit row is missing
