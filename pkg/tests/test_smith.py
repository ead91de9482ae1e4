import random

import pytest

from freedouble.smith import invariant_factors, smith_normal_form

sympy = pytest.importorskip("sympy")
from sympy.matrices.normalforms import smith_normal_form as sympy_snf  # noqa: E402


def matmul(X, Y):
    return [[sum(X[i][k] * Y[k][j] for k in range(len(Y))) for j in range(len(Y[0]))] for i in range(len(X))]


def det(M):
    return int(sympy.Matrix(M).det())


def random_matrix(rng, rows, cols, spread=6):
    return [[rng.randint(-spread, spread) for _ in range(cols)] for _ in range(rows)]


def test_known_example():
    D, U, V = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [D[i][i] for i in range(3)] == [2, 6, 12]


def test_transforms_and_divisibility():
    rng = random.Random(0)
    for _ in range(200):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        M = random_matrix(rng, r, c)
        D, U, V = smith_normal_form(M)
        assert matmul(matmul(U, M), V) == D
        assert abs(det(U)) == 1 and abs(det(V)) == 1
        diag = [D[i][i] for i in range(min(r, c))]
        assert all(D[i][j] == 0 for i in range(r) for j in range(c) if i != j)
        assert all(d >= 0 for d in diag)
        for x, y in zip(diag, diag[1:]):
            assert (y == 0) if x == 0 else y % x == 0


def test_matches_sympy():
    rng = random.Random(1)
    for _ in range(100):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        M = random_matrix(rng, r, c)
        ours = invariant_factors(M)
        S = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
        theirs = sorted(abs(int(S[i, i])) for i in range(min(r, c)) if S[i, i] != 0)
        assert sorted(d for d in ours if d) == theirs


def test_zero_and_empty():
    D, U, V = smith_normal_form([[0, 0], [0, 0]])
    assert D == [[0, 0], [0, 0]]
    assert [d for d in invariant_factors([[0, 0, 0]]) if d] == []
