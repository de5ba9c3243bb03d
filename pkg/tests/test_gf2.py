import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interlacement import (
    DimensionMismatch,
    GF2Matrix,
    GF2Vector,
    IndexOutOfRange,
    Singular,
    add_row,
    inverse,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank,
    rref,
    spans_equal,
)


def naive_mat_mul(a, b):
    # textbook triple loop over {0,1}, the oracle for the bitset product
    n, k, m = a.nrows, a.ncols, b.ncols
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            s = 0
            for t in range(k):
                s ^= a.entry(i, t) & b.entry(t, j)
            out[i][j] = s
    return out


def naive_rank(lists):
    rows = [list(r) for r in lists if any(r)]
    ncols = len(lists[0]) if lists else 0
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def random_matrix(rng, nrows, ncols):
    return GF2Matrix.from_rows(
        [[rng.randrange(2) for _ in range(ncols)] for _ in range(nrows)]
    )


def test_vector_basics():
    v = GF2Vector.from_coords([1, 0, 1, 1])
    assert v.n == 4
    assert v.to_tuple() == (1, 0, 1, 1)
    assert v.weight() == 3
    assert v.support() == (0, 2, 3)
    assert str(v) == "1011"
    assert v + v == GF2Vector.zero(4)
    assert v + GF2Vector.unit(4, 1) == GF2Vector.from_coords([1, 1, 1, 1])


def test_vector_unit_out_of_range():
    with pytest.raises(IndexOutOfRange):
        GF2Vector.unit(3, 3)


def test_matrix_identity_and_entry():
    m = GF2Matrix.identity(3)
    assert m.to_lists() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert m.entry(2, 2) == 1
    assert m.entry(2, 0) == 0
    assert m.transpose() == m


def test_matmul_against_naive():
    rng = random.Random(11)
    for _ in range(60):
        n, k, m = rng.randrange(1, 7), rng.randrange(1, 7), rng.randrange(1, 7)
        a = random_matrix(rng, n, k)
        b = random_matrix(rng, k, m)
        assert (a @ b).to_lists() == naive_mat_mul(a, b)


def test_matmul_dimension_mismatch():
    a = GF2Matrix.identity(2)
    b = GF2Matrix.identity(3)
    with pytest.raises(DimensionMismatch):
        mat_mul(a, b)


def test_mat_vec_matches_matmul_column():
    rng = random.Random(5)
    for _ in range(40):
        n, k = rng.randrange(1, 7), rng.randrange(1, 7)
        a = random_matrix(rng, n, k)
        x = GF2Vector(k, rng.getrandbits(k))
        col = GF2Matrix.from_vectors([x], k).transpose()
        assert mat_vec(a, x).to_tuple() == tuple(
            (a @ col).entry(i, 0) for i in range(n)
        )


def test_rank_against_naive():
    rng = random.Random(23)
    for _ in range(80):
        n, m = rng.randrange(1, 8), rng.randrange(1, 8)
        a = random_matrix(rng, n, m)
        assert rank(a) == naive_rank(a.to_lists())


def test_rref_idempotent_and_rank_preserving():
    rng = random.Random(31)
    for _ in range(40):
        a = random_matrix(rng, rng.randrange(1, 7), rng.randrange(1, 7))
        r = rref(a)
        assert rref(r) == r
        assert rank(r) == rank(a)


def test_kernel_vectors_annihilate():
    rng = random.Random(7)
    for _ in range(80):
        a = random_matrix(rng, rng.randrange(1, 8), rng.randrange(1, 8))
        basis = kernel_basis(a)
        assert len(basis) == a.ncols - rank(a)
        for v in basis:
            assert mat_vec(a, v) == GF2Vector.zero(a.nrows)
        # basis vectors are independent
        assert rank(GF2Matrix.from_vectors(basis, a.ncols)) == len(basis)


def test_inverse_round_trip():
    rng = random.Random(13)
    found = 0
    while found < 25:
        n = rng.randrange(1, 7)
        a = random_matrix(rng, n, n)
        if rank(a) < n:
            continue
        found += 1
        inv = inverse(a)
        assert (a @ inv) == GF2Matrix.identity(n)
        assert (inv @ a) == GF2Matrix.identity(n)


def test_inverse_singular_raises():
    a = GF2Matrix.from_rows([[1, 1], [1, 1]])
    with pytest.raises(Singular):
        inverse(a)


def test_add_row():
    a = GF2Matrix.from_rows([[1, 0, 1], [0, 1, 1]])
    b = add_row(a, 0, 1)
    assert b.to_lists() == [[1, 0, 1], [1, 1, 0]]
    assert a.to_lists() == [[1, 0, 1], [0, 1, 1]]  # input untouched


def test_spans_equal_permuted_basis():
    rng = random.Random(3)
    for _ in range(40):
        n, m = rng.randrange(1, 7), rng.randrange(1, 7)
        a = random_matrix(rng, n, m)
        rows = a.to_lists()
        rng.shuffle(rows)
        # add a random row sum, keeping the span
        if len(rows) >= 2:
            rows.append([x ^ y for x, y in zip(rows[0], rows[1])])
        b = GF2Matrix.from_rows(rows)
        assert spans_equal(a, b)


def test_spans_equal_detects_difference():
    a = GF2Matrix.from_rows([[1, 0], [0, 1]])
    b = GF2Matrix.from_rows([[1, 0]])
    assert not spans_equal(a, b)


@given(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.randoms(use_true_random=False),
)
@settings(max_examples=60, deadline=None)
def test_matmul_associative(n, k, m, rng):
    a = random_matrix(rng, n, k)
    b = random_matrix(rng, k, m)
    c = random_matrix(rng, m, n)
    assert (a @ b) @ c == a @ (b @ c)


@given(st.integers(min_value=1, max_value=8), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_rank_bounded_and_transpose_invariant(n, rng):
    a = random_matrix(rng, n, rng.randrange(1, 8))
    r = rank(a)
    assert 0 <= r <= min(a.nrows, a.ncols)
    assert rank(a.transpose()) == r
