from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from catfourier.linalg import (
    DimensionError,
    RationalMatrix,
    cokernel,
    inverse,
    is_isomorphism,
    kernel_subspace,
    mat_compose,
    mat_direct_sum,
    mat_dual,
    mat_kron,
    rank,
    rref,
    solve,
    swap_matrix,
)

from oracles import dense_mul, dense_rank

small = st.integers(-3, 3).map(Fraction) | st.fractions(min_value=-2, max_value=2, max_denominator=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices())
def test_rank_matches_dense_elimination(rows):
    assert rank(RationalMatrix.from_rows(rows)) == dense_rank(rows)


@given(matrices(4, 4), matrices(4, 4))
def test_product_matches_dense(a, b):
    b = [r[: len(b[0])] for r in (b * 4)[: len(a[0])]]
    got = mat_compose(RationalMatrix.from_rows(a), RationalMatrix.from_rows(b))
    assert got.to_lists() == dense_mul(a, b)


@given(matrices())
def test_rref_is_idempotent_and_rank_preserving(rows):
    m = RationalMatrix.from_rows(rows)
    r, pivots = rref(m)
    assert rref(r)[0] == r
    assert len(pivots) == rank(m)
    for k, p in enumerate(pivots):
        assert r[k, p] == 1


@given(matrices())
def test_cokernel_presentation(rows):
    a = RationalMatrix.from_rows(rows)
    pres = cokernel(a)
    pres.check()
    assert pres.dim == a.rows - rank(a)
    assert (pres.projection @ a).is_zero
    assert pres.projection @ pres.section == RationalMatrix.identity(pres.dim)


@given(matrices())
def test_kernel_presentation(rows):
    a = RationalMatrix.from_rows(rows)
    pres = kernel_subspace(a)
    assert pres.dim == a.cols - rank(a)
    assert (a @ pres.section).is_zero
    assert pres.projection @ pres.section == RationalMatrix.identity(pres.dim)


@given(matrices(3, 3), matrices(3, 3), matrices(2, 2))
def test_kron_mixed_product(a, b, c):
    a, b, c = (RationalMatrix.from_rows(x) for x in (a, b, c))
    ab = mat_kron(a, b)
    assert ab.shape == (a.rows * b.rows, a.cols * b.cols)
    assert mat_kron(ab, c) == mat_kron(a, mat_kron(b, c))
    assert mat_dual(ab) == mat_kron(mat_dual(a), mat_dual(b))


@given(st.integers(0, 4), st.integers(0, 4), matrices(3, 3), matrices(3, 3))
def test_swap_intertwines_kron(m, n, a, b):
    s = swap_matrix(m, n)
    assert s @ swap_matrix(n, m) == RationalMatrix.identity(m * n)
    a, b = RationalMatrix.from_rows(a), RationalMatrix.from_rows(b)
    lhs = swap_matrix(a.rows, b.rows) @ mat_kron(a, b)
    assert lhs == mat_kron(b, a) @ swap_matrix(a.cols, b.cols)


@settings(max_examples=50)
@given(matrices(4, 4))
def test_solve_and_inverse(rows):
    n = min(len(rows), len(rows[0]))
    a = RationalMatrix.from_rows([r[:n] for r in rows[:n]])
    if is_isomorphism(a):
        assert a @ inverse(a) == RationalMatrix.identity(n)
    b = a @ RationalMatrix.from_rows([[1]] * n)
    x = solve(a, b)
    assert x is not None and a @ x == b


def test_inconsistent_system():
    a = RationalMatrix.from_rows([[1, 1], [2, 2]])
    assert solve(a, RationalMatrix.from_rows([[1], [3]])) is None


def test_shape_mismatch_raises():
    with pytest.raises(DimensionError):
        RationalMatrix.identity(2) @ RationalMatrix.identity(3)


def test_string_entries_and_direct_sum():
    m = RationalMatrix.from_rows([["1/2", "0"], ["-3/4", 2]])
    assert m[1, 0] == Fraction(-3, 4)
    d = mat_direct_sum(m, RationalMatrix.identity(1))
    assert d.shape == (3, 3) and d[2, 2] == 1 and d[0, 2] == 0


def test_zero_sized_edges():
    z = RationalMatrix.zeros(0, 3)
    assert cokernel(z).dim == 0
    assert kernel_subspace(z).dim == 3
    assert rank(RationalMatrix.zeros(3, 0)) == 0
