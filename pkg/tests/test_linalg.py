from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from torusloc import linalg

small = st.integers(-6, 6)


def matrices(n, m):
    return st.lists(st.lists(small, min_size=m, max_size=m), min_size=n, max_size=n)


@given(matrices(3, 3), matrices(3, 3))
def test_det_is_multiplicative(a, b):
    prod = [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert linalg.det(prod) == linalg.det(a) * linalg.det(b)


@given(matrices(3, 3))
def test_det_matches_float_oracle(a):
    assert abs(float(linalg.det(a)) - np.linalg.det(np.array(a, dtype=float))) < 1e-6


@given(matrices(3, 3))
def test_inverse(a):
    if linalg.det(a) == 0:
        return
    inv = linalg.inverse(a)
    for i in range(3):
        for j in range(3):
            assert sum(a[i][k] * inv[k][j] for k in range(3)) == (1 if i == j else 0)


@given(matrices(3, 5))
def test_rank_nullity(a):
    ns = linalg.nullspace(a, 5)
    assert linalg.rank(a) + len(ns) == 5
    for v in ns:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)


@given(matrices(4, 3))
def test_rank_matches_numpy(a):
    assert linalg.rank(a) == np.linalg.matrix_rank(np.array(a, dtype=float))


@given(matrices(3, 3), st.lists(small, min_size=3, max_size=3))
def test_solve_consistent_systems(a, x):
    b = linalg.matvec(a, x)
    sol = linalg.solve(a, b)
    assert sol is not None
    assert linalg.matvec(a, sol) == [Fraction(v) for v in b]


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_xgcd(a, b):
    g, x, y = linalg.xgcd(a, b)
    assert a * x + b * y == g
    assert g >= 0


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=5))
def test_primitive_int(v):
    p = linalg.primitive_int(v)
    if any(v):
        from math import gcd
        from functools import reduce
        assert reduce(gcd, (abs(x) for x in p)) == 1
        k = next(a // b for a, b in zip(v, p) if b)
        assert [k * x for x in p] == list(v)


def test_common_denominator():
    assert linalg.common_denominator([Fraction(1, 2), Fraction(1, 3), 4]) == 6


@given(matrices(3, 3))
def test_adjugate(a):
    if linalg.det(a) == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.adjugate(a)
        return
    adj, d = linalg.adjugate(a)
    assert d == linalg.det(a)
    for i in range(3):
        for j in range(3):
            assert sum(a[i][k] * adj[k][j] for k in range(3)) == (d if i == j else 0)


def test_rref_pivots():
    red, piv = linalg.rref([[0, 2, 4], [1, 1, 1]])
    assert piv == [0, 1]
    assert red[0] == [1, 0, -1] and red[1] == [0, 1, 2]


@given(matrices(3, 3))
def test_echelon_basis_preserves_the_row_lattice(a):
    basis = linalg.echelon_basis(a)
    assert len(basis) == linalg.rank(a)
    if len(basis) == 3:
        assert abs(linalg.det(basis)) == abs(linalg.det(a))
    # every original row is an integer combination of the basis
    for row in a:
        if not any(row):
            continue
        cols = [list(c) for c in zip(*basis)]
        sol = linalg.solve(cols, row)
        assert sol is not None and all(x.denominator == 1 for x in sol)


def test_lcm():
    assert linalg.lcm(4, 6) == 12
    with pytest.raises(TypeError):
        linalg.lcm(4)
