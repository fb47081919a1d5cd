"""Exact rational linear algebra: frozen oracles plus randomized laws."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibnizalg.linalg import (
    Matrix,
    frac,
    integer_grid,
    integer_rank,
    inverse,
    kernel_basis,
    rank,
    rref,
    solve,
    vec,
)


def test_frac_accepts_ints_strings_fractions():
    assert frac(3) == Fraction(3)
    assert frac("2/7") == Fraction(2, 7)
    assert frac(Fraction(-1, 4)) == Fraction(-1, 4)


def test_frac_rejects_floats():
    # floats smuggle binary rounding into exact pipelines
    with pytest.raises(TypeError):
        frac(0.5)


def test_rref_frozen_oracle():
    # worked by hand: row-reduce [[1,2,1],[2,4,0],[3,6,1]]
    m = Matrix([[1, 2, 1], [2, 4, 0], [3, 6, 1]])
    r, pivots = rref(m)
    assert pivots == (0, 2)
    assert r == Matrix([[1, 2, 0], [0, 0, 1], [0, 0, 0]])


def test_rref_fractional_pivots():
    m = Matrix([["1/2", "1/3"], ["1/4", "1/6"]])
    r, pivots = rref(m)
    assert pivots == (0,)
    assert r == Matrix([[1, "2/3"], [0, 0]])


def test_solve_unique_frozen():
    # 2x + y = 5, x - y = 1  =>  x = 2, y = 1
    m = Matrix([[2, 1], [1, -1]])
    x = solve(m, vec([5, 1]))
    assert x == vec([2, 1])


def test_solve_inconsistent_returns_none():
    m = Matrix([[1, 1], [1, 1]])
    assert solve(m, vec([0, 1])) is None


def test_kernel_frozen_oracle():
    # kernel of [1 2 3] is spanned by (-2,1,0) and (-3,0,1)
    basis = kernel_basis(Matrix([[1, 2, 3]]))
    assert basis == (vec([-2, 1, 0]), vec([-3, 0, 1]))


def test_kernel_of_invertible_is_empty():
    assert kernel_basis(Matrix([[1, 1], [0, 1]])) == ()


def test_inverse_round_trip():
    m = Matrix([[1, 2], [3, 5]])
    mi = inverse(m)
    assert mi is not None
    assert m @ mi == Matrix.identity(2)
    assert mi @ m == Matrix.identity(2)


def test_inverse_singular_returns_none():
    assert inverse(Matrix([[1, 2], [2, 4]])) is None


small_entries = st.integers(min_value=-5, max_value=5)


def matrices(max_dim=5):
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda r: st.integers(min_value=1, max_value=max_dim).flatmap(
            lambda c: st.lists(
                st.lists(small_entries, min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            ).map(Matrix)
        )
    )


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_plus_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_is_idempotent(m):
    r, pivots = rref(m)
    r2, pivots2 = rref(r)
    assert r2 == r
    assert pivots2 == pivots


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilate(m):
    for v in kernel_basis(m):
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_integer_fast_path_agrees_with_rref(m):
    grid = integer_grid(m)
    assert grid is not None  # integer entries by construction
    assert integer_rank(grid, m.cols) == rank(m)


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=4), st.lists(small_entries, min_size=1, max_size=4))
def test_solve_result_satisfies_system(m, rhs_seed):
    rhs = vec((rhs_seed * m.rows)[: m.rows])
    x = solve(m, rhs)
    if x is not None:
        assert m.apply(x) == rhs
