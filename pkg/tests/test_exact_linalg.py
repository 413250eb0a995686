from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from veronese.exact_linalg import (
    DimensionError,
    Matrix,
    Q,
    Subspace,
    kernel_basis,
    quotient_coords,
    rank,
    rank_of_rows,
    rref,
    span,
)


def bareiss_rank(rows):
    """Fraction-free elimination over the integers, used as an independent oracle."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    n, m = len(a), len(a[0])
    prev = 1
    rk = 0
    for c in range(m):
        piv = next((i for i in range(rk, n) if a[i][c]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        for i in range(rk + 1, n):
            for j in range(c + 1, m):
                a[i][j] = (a[i][j] * a[rk][c] - a[i][c] * a[rk][j]) // prev
            a[i][c] = 0
        prev = a[rk][c]
        rk += 1
        if rk == n:
            break
    return rk


int_matrices = st.integers(1, 7).flatmap(
    lambda n: st.integers(1, 7).flatmap(
        lambda m: st.lists(st.lists(st.integers(-4, 4), min_size=m, max_size=m), min_size=n, max_size=n)
    )
)


@given(int_matrices)
@settings(max_examples=300, deadline=None)
def test_rank_matches_bareiss(rows):
    assert rank(Matrix.from_dense(rows)) == bareiss_rank(rows)


@given(int_matrices)
@settings(max_examples=300, deadline=None)
def test_kernel_is_annihilated_and_complementary(rows):
    A = Matrix.from_dense(rows)
    K = kernel_basis(A)
    assert K.dim + rank(A) == A.ncols
    for v in K.basis:
        assert A.apply(v) == {}


@given(int_matrices)
@settings(max_examples=200, deadline=None)
def test_rref_is_idempotent_and_row_equivalent(rows):
    A = Matrix.from_dense(rows)
    R, piv = rref(A)
    R2, piv2 = rref(R)
    assert R == R2 and piv == piv2
    assert span(A.ncols, A.sparse_rows()) == span(A.ncols, R.sparse_rows())
    # pivot columns are unit vectors
    for k, c in enumerate(piv):
        assert [R[i, c] for i in range(R.nrows)] == [1 if i == k else 0 for i in range(R.nrows)]


@given(int_matrices)
@settings(max_examples=200, deadline=None)
def test_rank_of_transpose(rows):
    A = Matrix.from_dense(rows)
    assert rank(A) == rank(A.transpose()) == rank_of_rows(A.columns())


def test_huge_rationals():
    big = 10**200 + 7
    x = Q(Fraction(big, 3))
    rows = [[x, 1, Fraction(1, big)], [2 * x, 2, Fraction(2, big)], [1, big, 0]]
    A = Matrix.from_dense(rows)
    assert rank(A) == 2
    K = kernel_basis(A)
    assert K.dim == 1
    assert A.apply(K.basis[0]) == {}
    assert len(str(max(abs(v) for v in K.basis[0].values()).numerator)) >= 190


def test_subspace_equality_is_basis_independent():
    a = span(3, [[1, 2, 3], [0, 1, 1]])
    b = span(3, [[1, 3, 4], [2, 4, 6]])
    assert a == b
    assert a != span(3, [[1, 0, 0]])
    assert a.contains([3, 7, 10]) and not a.contains([0, 0, 1])


def test_quotient_coordinates():
    s = span(4, [[1, 1, 0, 0], [0, 0, 1, -1]])
    assert s.complement_columns() == [1, 3]
    # e0 = -e1 mod s and e2 = e3 mod s
    assert quotient_coords(s, [1, 0, 0, 0]) == [-1, 0]
    assert quotient_coords(s, [0, 0, 1, 0]) == [0, 1]
    for j in range(4):
        assert s.unit_quotient(j) == s.quotient_coords({j: 1})


def test_zero_and_full():
    assert Subspace.zero(3).dim == 0 and Subspace.full(3).codim == 0
    assert kernel_basis(Matrix(0, 3)).dim == 3
    assert kernel_basis(Matrix.identity(4)).dim == 0


def test_dimension_errors():
    with pytest.raises(DimensionError):
        span(2, [[1, 2, 3]])
    with pytest.raises(DimensionError):
        Subspace(2, [{5: 1}])
    with pytest.raises(DimensionError):
        Matrix.identity(2) @ Matrix(3, 1)


def test_matmul_against_dense():
    A = Matrix.from_dense([[1, 2], [3, 4], [0, 1]])
    B = Matrix.from_dense([[0, 1, Fraction(1, 2)], [1, 0, 0]])
    C = A @ B
    assert C.to_dense() == [[2, 1, Fraction(1, 2)], [4, 3, Fraction(3, 2)], [1, 0, 0]]
