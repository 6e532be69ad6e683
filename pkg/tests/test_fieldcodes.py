"""Tests for the F2/F3 matrix algebra and the packed code analytics."""

import numpy as np
import pytest

from liecodes.fieldcodes import (
    EmptyCodeError,
    FpMatrix,
    analyze,
    combination_weight,
    dual_code,
    format_matrix_text,
    min_distance,
    parse_matrix_text,
    row_space_code,
    rref,
    weight_distribution,
)
from liecodes.repweights import (
    adjoint_weight_matrix_A,
    d_spin_matrix,
    exceptional_adjoint_matrix,
    ext_weight_matrix_A,
    fixture_matrix,
)

from _oracles import naive_min_distance, naive_weight_distribution


def random_fp_matrix(rng, p, max_rows=4, max_cols=20):
    rows = int(rng.integers(1, max_rows + 1))
    cols = int(rng.integers(1, max_cols + 1))
    return FpMatrix(p, rng.integers(0, p, size=(rows, cols)))


# ---------------------------------------------------------------------------
# FpMatrix and the shared text format

def test_fpmatrix_rejects_bad_inputs():
    with pytest.raises(ValueError):
        FpMatrix(5, [[0]])
    with pytest.raises(ValueError):
        FpMatrix(2, [[2]])
    with pytest.raises(ValueError):
        FpMatrix(3, [[-1]])
    with pytest.raises(ValueError):
        FpMatrix(2, np.zeros((2, 0), dtype=np.int64))


def test_fpmatrix_reduce_normalizes():
    m = FpMatrix.reduce(3, [[-1, 4], [5, -6]])
    assert m.entries.tolist() == [[2, 1], [2, 0]]


def test_text_format_round_trip():
    m = FpMatrix(3, [[0, 1, 2], [2, 2, 0]])
    text = format_matrix_text(m)
    assert text.splitlines()[0] == "3 2 3"
    assert parse_matrix_text(text) == m


@pytest.mark.parametrize(
    "text",
    [
        "3 1",  # truncated header
        "3 1 2\n0 3",  # out-of-range symbol
        "2 1 2\n0",  # wrong entry count
        "2 1 2\n0 x",  # non-numeric entry
        "7 1 1\n0",  # unsupported modulus
    ],
)
def test_text_format_rejects(text):
    with pytest.raises(ValueError):
        parse_matrix_text(text)


# ---------------------------------------------------------------------------
# row reduction and canonical codes

def test_rref_duplicate_rows():
    red, rank, pivots = rref(FpMatrix(2, [[1, 1], [1, 1]]))
    assert rank == 1
    assert red.entries.tolist() == [[1, 1]]
    assert pivots == (0,)


def test_rref_identity():
    red, rank, pivots = rref(FpMatrix(3, np.eye(3, dtype=np.int64)))
    assert rank == 3
    assert pivots == (0, 1, 2)
    assert red.entries.tolist() == np.eye(3, dtype=np.int64).tolist()


def test_rref_e6_adjoint_rank_five():
    b = exceptional_adjoint_matrix("E6").mod(3)
    _, rank, _ = rref(b)
    assert rank == 5


def test_rref_idempotent_on_random(seed=11):
    rng = np.random.default_rng(seed)
    for _ in range(50):
        p = int(rng.choice([2, 3]))
        m = random_fp_matrix(rng, p)
        red, rank, pivots = rref(m)
        again, rank2, pivots2 = rref(red)
        assert again == red and rank2 == rank and pivots2 == pivots
        assert list(pivots) == sorted(pivots)


def test_row_space_code_examples():
    code = row_space_code(ext_weight_matrix_A(4, 2, "cartan_h").mod(2))
    assert (code.n, code.k) == (6, 2)
    zero = row_space_code(FpMatrix(3, np.zeros((2, 5), dtype=np.int64)))
    assert zero.k == 0
    k_code = row_space_code(adjoint_weight_matrix_A(6, "cartan_h").mod(3))
    assert k_code.k == 4


# ---------------------------------------------------------------------------
# minimum distance and weight distribution

def test_min_distance_identity_generator():
    for p in (2, 3):
        code = row_space_code(FpMatrix(p, np.eye(5, dtype=np.int64)))
        assert min_distance(code) == 1


def test_min_distance_zero_code_raises():
    zero = row_space_code(FpMatrix(2, np.zeros((1, 4), dtype=np.int64)))
    with pytest.raises(EmptyCodeError):
        min_distance(zero)


def test_min_distance_f4_and_e8():
    f4 = row_space_code(fixture_matrix("F4_minimal").mod(3))
    assert min_distance(f4) == 6
    e8 = row_space_code(exceptional_adjoint_matrix("E8").mod(3))
    assert min_distance(e8) == 57


def test_worker_counts_agree():
    codes = [
        row_space_code(exceptional_adjoint_matrix("F4").mod(3)),
        row_space_code(ext_weight_matrix_A(8, 2, "cartan_h").mod(3)),
        row_space_code(ext_weight_matrix_A(10, 3, "cartan_h").mod(2)),
    ]
    for code in codes:
        base = min_distance(code)
        assert min_distance(code, workers=2) == base
        assert min_distance(code, workers=5) == base
        assert weight_distribution(code, workers=3) == weight_distribution(code)


def test_weight_distribution_zero_code():
    zero = row_space_code(FpMatrix(3, np.zeros((1, 6), dtype=np.int64)))
    dist = weight_distribution(zero)
    assert dist[0] == 1 and sum(dist) == 1


def test_weight_distribution_f4_minimal():
    # weights 6 and 9 only; counts frozen from the naive oracle
    code = row_space_code(fixture_matrix("F4_minimal").mod(3))
    dist = weight_distribution(code)
    support = {w: c for w, c in enumerate(dist) if c}
    assert support == {0: 1, 6: 24, 9: 56}
    rows = fixture_matrix("F4_minimal").mod(3).entries.tolist()
    assert naive_weight_distribution(3, rows, 12) == list(dist)


def test_e6_minimal_no_small_weights():
    code = row_space_code(fixture_matrix("E6_minimal").mod(3))
    dist = weight_distribution(code)
    assert all(dist[w] == 0 for w in range(1, 12))
    assert dist[12] > 0


def test_min_distance_matches_distribution():
    for wm, p in [
        (exceptional_adjoint_matrix("F4"), 3),
        (ext_weight_matrix_A(7, 3, "cartan_h"), 3),
        (ext_weight_matrix_A(8, 2, "cartan_h"), 2),
        (d_spin_matrix(5), 3),
    ]:
        code = row_space_code(wm.mod(p))
        dist = weight_distribution(code)
        assert min_distance(code) == next(w for w in range(1, code.n + 1) if dist[w])


def test_oracle_equivalence_on_random_codes(seed=2024):
    # 200 random generator matrices, checked against the unpacked oracle
    rng = np.random.default_rng(seed)
    checked = 0
    while checked < 200:
        p = int(rng.choice([2, 3]))
        m = random_fp_matrix(rng, p)
        code = row_space_code(m)
        rows = code.basis.entries.tolist()
        dist = weight_distribution(code)
        assert list(dist) == naive_weight_distribution(p, rows, code.n)
        if code.k:
            assert min_distance(code) == naive_min_distance(p, rows, code.n)
            if checked % 20 == 0:
                assert min_distance(code, workers=2) == min_distance(code)
        checked += 1


# ---------------------------------------------------------------------------
# duality and the analysis report

def test_dual_of_full_space_is_zero():
    full = row_space_code(FpMatrix(3, np.eye(4, dtype=np.int64)))
    assert dual_code(full).k == 0


def test_dual_involution_and_dimension(seed=7):
    rng = np.random.default_rng(seed)
    for _ in range(60):
        p = int(rng.choice([2, 3]))
        code = row_space_code(random_fp_matrix(rng, p, max_rows=6, max_cols=12))
        dual = dual_code(code)
        assert code.k + dual.k == code.n
        assert dual_code(dual) == code
        # orthogonality of the pair
        prod = code.basis.entries @ dual.basis.entries.T % p
        assert not prod.any()


def test_f4_minimal_inside_its_dual():
    code = row_space_code(fixture_matrix("F4_minimal").mod(3))
    dual = dual_code(code)
    prod = code.basis.entries @ dual.basis.entries.T % 3
    assert not prod.any()
    assert analyze(code).self_orthogonal


def test_analyze_doubly_even_case():
    rep = analyze(row_space_code(ext_weight_matrix_A(6, 2, "cartan_h").mod(2)))
    assert rep.params() == (15, 4, 8)
    assert rep.doubly_even and rep.even and rep.self_orthogonal


def test_analyze_zero_code():
    rep = analyze(row_space_code(FpMatrix(3, np.zeros((1, 4), dtype=np.int64))))
    assert rep.d is None
    assert rep.self_orthogonal and not rep.self_dual
    assert rep.even is None and rep.doubly_even is None


def test_analyze_sl7_cube_not_orthogonal():
    rep = analyze(row_space_code(ext_weight_matrix_A(7, 3, "cartan_h").mod(3)))
    assert not rep.self_orthogonal


def test_analyze_self_dual_repetition_code():
    rep = analyze(row_space_code(FpMatrix(2, [[1, 1]])))
    assert rep.self_dual and rep.self_orthogonal
    assert rep.params() == (2, 1, 2)


def test_distribution_totals(seed=23):
    rng = np.random.default_rng(seed)
    for _ in range(20):
        p = int(rng.choice([2, 3]))
        code = row_space_code(random_fp_matrix(rng, p, max_rows=5, max_cols=12))
        dist = weight_distribution(code)
        assert dist[0] == 1
        assert sum(dist) == p**code.k


def test_self_orthogonal_matches_gram_and_dual(seed=3):
    rng = np.random.default_rng(seed)
    for _ in range(40):
        p = int(rng.choice([2, 3]))
        code = row_space_code(random_fp_matrix(rng, p, max_rows=5, max_cols=10))
        rep = analyze(code)
        g = code.basis.entries
        assert rep.self_orthogonal == (not (g @ g.T % p).any())
        dual = dual_code(code)
        contained = all(
            row_space_code(FpMatrix(p, np.vstack([dual.basis.entries, [r]]))).k == dual.k
            for r in g
        )
        assert rep.self_orthogonal == contained
        if p == 2 and rep.doubly_even:
            assert rep.self_orthogonal


def test_column_permutation_and_negation_invariance(seed=5):
    rng = np.random.default_rng(seed)
    base = fixture_matrix("F4_minimal").mod(3)
    rep = analyze(row_space_code(base))
    for _ in range(5):
        perm = rng.permutation(base.cols)
        shuffled = analyze(row_space_code(FpMatrix(3, base.entries[:, perm])))
        assert shuffled.params() == rep.params()
        assert shuffled.weight_distribution == rep.weight_distribution
    negated = base.entries.copy()
    col = int(rng.integers(0, base.cols))
    negated[:, col] = (-negated[:, col]) % 3
    rep_neg = analyze(row_space_code(FpMatrix(3, negated)))
    assert rep_neg.params() == rep.params()
    assert rep_neg.weight_distribution == rep.weight_distribution


# ---------------------------------------------------------------------------
# row combinations

def test_combination_weight_examples():
    b3 = ext_weight_matrix_A(10, 3, "matrix_unit_E").mod(2)
    assert combination_weight(b3, [1, 1] + [0] * 8) == 56
    assert combination_weight(b3, [0] * 10) == 0
    spin = d_spin_matrix(5).mod(3)
    assert combination_weight(spin, [1, 1, 0, 0, 0]) == 8


def test_combination_weight_dimension_mismatch():
    m = FpMatrix(2, [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        combination_weight(m, [1])
