"""Exact rational linear algebra."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from ncgl2.linalg import (
    identity,
    mat_mul,
    mat_vec,
    nullspace,
    nullspace_sparse,
    rank,
    rref,
    same_row_space,
    solve,
    span_contains,
)

F = Fraction


def test_rref_known():
    # hand-reduced
    mat = [[F(1), F(2), F(3)], [F(2), F(4), F(7)], [F(0), F(0), F(1)]]
    reduced, pivots = rref(mat)
    assert pivots == [0, 2]
    assert reduced[0] == [F(1), F(2), F(0)]
    assert reduced[1] == [F(0), F(0), F(1)]


def test_rank_and_nullspace():
    mat = [[F(1), F(1), F(0)], [F(0), F(1), F(1)]]
    assert rank(mat) == 2
    null = nullspace(mat)
    assert len(null) == 1
    v = null[0]
    assert mat_vec(mat, v) == [F(0), F(0)]


def test_solve_unique():
    mat = [[F(2), F(1)], [F(1), F(3)]]
    rhs = [F(5), F(10)]
    sol = solve(mat, rhs)
    assert sol is not None
    assert mat_vec(mat, sol) == rhs


def test_solve_inconsistent():
    mat = [[F(1), F(1)], [F(2), F(2)]]
    assert solve(mat, [F(1), F(3)]) is None


def test_span_and_row_space():
    rows = [[F(1), F(0), F(1)], [F(0), F(1), F(1)]]
    assert span_contains(rows, [F(2), F(3), F(5)])
    assert not span_contains(rows, [F(0), F(0), F(1)])
    assert same_row_space(rows, [[F(1), F(1), F(2)], [F(1), F(-1), F(0)]])
    assert not same_row_space(rows, [[F(1), F(0), F(0)]])


def test_nullspace_sparse_matches_dense():
    rows = [
        {0: F(1), 2: F(-1)},
        {1: F(2), 2: F(2)},
    ]
    dense = [[F(1), F(0), F(-1)], [F(0), F(2), F(2)]]
    sparse_basis = nullspace_sparse(rows, 3)
    dense_basis = nullspace(dense)
    assert same_row_space(sparse_basis, dense_basis)


SMALL = st.integers(min_value=-4, max_value=4).map(F)


@st.composite
def matrices(draw, max_dim=4):
    n = draw(st.integers(min_value=1, max_value=max_dim))
    m = draw(st.integers(min_value=1, max_value=max_dim))
    return [[draw(SMALL) for _ in range(m)] for _ in range(n)]


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_rank_nullity(mat):
    cols = len(mat[0])
    assert rank(mat) + len(nullspace(mat)) == cols


@given(matrices())
@settings(max_examples=100, deadline=None)
def test_nullspace_vectors_annihilate(mat):
    for v in nullspace(mat):
        assert all(entry == 0 for entry in mat_vec(mat, v))


@given(matrices(max_dim=3), matrices(max_dim=3))
@settings(max_examples=60, deadline=None)
def test_rank_of_product_bounded(m1, m2):
    if len(m1[0]) != len(m2):
        return
    prod = mat_mul(m1, m2)
    assert rank(prod) <= min(rank(m1), rank(m2))


@given(st.integers(min_value=1, max_value=5))
def test_identity_is_full_rank(n):
    assert rank(identity(n)) == n
