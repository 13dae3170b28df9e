"""Exact linear algebra over Q(zeta_16)."""

from hypothesis import given, strategies as st

from hopf16 import linalg
from hopf16.cyclo import cyc, ZERO


def test_identity_and_rank():
    n = 5
    m = linalg.identity(n)
    assert linalg.rank(m) == n
    assert linalg.nullspace(m) == []


def test_singular():
    m = linalg.from_ints([[1, 2], [2, 4]])
    assert linalg.rank(m) == 1
    assert not linalg.det_nonzero(m)
    (ns,) = linalg.nullspace(m)
    assert linalg.mat_vec(m, ns) == [ZERO, ZERO]


def test_solve_and_inverse():
    m = linalg.from_ints([[2, 1], [1, 1]])
    rhs = [cyc(3), cyc(2)]
    x = linalg.solve(m, rhs)
    assert linalg.mat_vec(m, x) == rhs
    inv = linalg.inv_matrix(m)
    assert linalg.mat_mul(m, inv) == linalg.identity(2)


def test_inconsistent_system():
    m = linalg.from_ints([[1, 1], [1, 1]])
    assert linalg.solve(m, [cyc(0), cyc(1)]) is None


small = st.integers(-9, 9)
rows3 = st.lists(st.lists(small, min_size=3, max_size=3),
                 min_size=3, max_size=3)


@given(rows3)
def test_rank_transpose_and_nullity(rows):
    m = linalg.from_ints(rows)
    r = linalg.rank(m)
    assert r == linalg.rank(linalg.transpose(m))
    ns = linalg.nullspace(m)
    assert len(ns) == 3 - r
    zero = [ZERO] * 3
    for v in ns:
        assert linalg.mat_vec(m, v) == zero


@given(rows3, st.lists(small, min_size=3, max_size=3))
def test_solve_consistent_systems(rows, xs):
    m = linalg.from_ints(rows)
    rhs = linalg.mat_vec(m, [cyc(v) for v in xs])
    sol = linalg.solve(m, rhs)
    assert sol is not None
    assert linalg.mat_vec(m, sol) == rhs
