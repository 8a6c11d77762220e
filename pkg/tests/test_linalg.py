"""Exact rational linear algebra: deterministic echelon forms, kernels
and solving."""

import random
from fractions import Fraction

from zzqh.linalg import Matrix

F = Fraction


def _random_matrix(rng, nrows, ncols):
    return Matrix([[F(rng.randint(-3, 3), rng.randint(1, 4))
                    for _ in range(ncols)] for _ in range(nrows)],
                  ncols=ncols)


def test_rref_fixed_example():
    m = Matrix([[2, 4, -2], [1, 2, 0], [3, 6, -3]])
    pivots, red = m.rref()
    assert pivots == [0, 2]
    assert red.data[0] == [F(1), F(2), F(0)]
    assert red.data[1] == [F(0), F(0), F(1)]
    assert red.data[2] == [F(0), F(0), F(0)]


def test_rref_idempotent_and_leading_ones():
    rng = random.Random(7)
    for _ in range(25):
        m = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        pivots, red = m.rref()
        again_pivots, again = red.rref()
        assert again == red and again_pivots == pivots
        for r, c in enumerate(pivots):
            assert red.data[r][c] == 1
            assert all(red.data[i][c] == 0 for i in range(red.nrows) if i != r)


def test_rank_nullity():
    rng = random.Random(11)
    for _ in range(25):
        m = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        ker = m.kernel_basis()
        assert m.rank() + ker.nrows == m.ncols
        for v in ker.data:
            assert all(sum(row[j] * v[j] for j in range(m.ncols)) == 0
                       for row in m.data)


def test_left_kernel_is_kernel_of_transpose():
    m = Matrix([[1, 2], [2, 4], [0, 1]])
    left = m.left_kernel_basis()
    assert left.nrows == 1
    u = left.data[0]
    assert all(sum(u[i] * m.data[i][j] for i in range(m.nrows)) == 0
               for j in range(m.ncols))


def test_solve_consistent_and_inconsistent():
    m = Matrix([[1, 1], [0, 1], [1, 2]])
    x = m.solve([F(3), F(1), F(4)])
    assert x is not None
    assert [sum(row[j] * x[j] for j in range(2)) for row in m.data] \
        == [F(3), F(1), F(4)]
    assert m.solve([F(3), F(1), F(5)]) is None


def test_solve_random_roundtrip():
    rng = random.Random(13)
    for _ in range(25):
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        x = [F(rng.randint(-2, 2)) for _ in range(m.ncols)]
        rhs = [sum(row[j] * x[j] for j in range(m.ncols)) for row in m.data]
        got = m.solve(rhs)
        assert got is not None
        back = [sum(row[j] * got[j] for j in range(m.ncols))
                for row in m.data]
        assert back == rhs


def test_mul_row_matches_matrix_product():
    rng = random.Random(17)
    a = _random_matrix(rng, 3, 4)
    b = _random_matrix(rng, 4, 2)
    prod = a * b
    for i in range(3):
        assert b.mul_row(a.data[i]) == prod.data[i]


def test_exactness_no_float_drift():
    m = Matrix([[F(1, 3), F(1, 7)], [F(1, 11), F(1, 13)]])
    _, red = m.rref()
    assert m.rank() == 2
    assert red == Matrix.identity(2)
