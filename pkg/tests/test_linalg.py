import random
from fractions import Fraction as F

import pytest
import sympy

from divode import linalg

from conftest import rand_fraction


def to_sympy(a):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in a])


def from_sympy(x):
    return F(int(x.p), int(x.q))


def random_matrix(rng, n, m=None, rank=None):
    m = n if m is None else m
    if rank is None:
        return [[rand_fraction(rng) for _ in range(m)] for _ in range(n)]
    left = [[rand_fraction(rng) for _ in range(rank)] for _ in range(n)]
    right = [[rand_fraction(rng) for _ in range(m)] for _ in range(rank)]
    return linalg.matmul(left, right)


def test_solve_against_sympy():
    rng = random.Random(31)
    for n in range(1, 8):
        a = random_matrix(rng, n)
        b = [rand_fraction(rng) for _ in range(n)]
        if to_sympy(a).det() == 0:
            continue
        expected = to_sympy(a).LUsolve(sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in b]))
        assert linalg.solve(a, b) == [from_sympy(x) for x in expected]


def test_solve_singular():
    with pytest.raises(linalg.SingularMatrix):
        linalg.solve([[1, 2], [2, 4]], [1, 2])


def test_solve_consistent():
    x = linalg.solve_consistent(linalg.as_matrix([[1, 2], [2, 4]]), [3, 6])
    assert x == [3, 0]
    with pytest.raises(linalg.SingularMatrix):
        linalg.solve_consistent(linalg.as_matrix([[1, 2], [2, 4]]), [3, 5])


def test_rank_of_constructed_products():
    rng = random.Random(5)
    for _ in range(10):
        n, m, r = rng.randint(2, 6), rng.randint(2, 6), rng.randint(0, 2)
        a = random_matrix(rng, n, m, rank=r)
        assert linalg.rank(a) == to_sympy(a).rank()
        assert linalg.rank(a) == len(linalg.rref(a)[1])


def test_nullspace_dimension_and_zero_products():
    rng = random.Random(6)
    for _ in range(10):
        a = random_matrix(rng, 4, 5, rank=rng.randint(1, 3))
        ns = linalg.nullspace(a)
        assert len(ns) == 5 - linalg.rank(a)
        for v in ns:
            assert not any(linalg.matvec(a, v))


def test_nullspace_free_columns_are_unit():
    a = linalg.as_matrix([[1, 2, 0, 3], [0, 0, 1, 4]])
    pairs = linalg.nullspace_by_free_column(a)
    assert [f for f, _ in pairs] == [1, 3]
    for f, v in pairs:
        assert [v[j] for j, _ in pairs] == [int(j == f) for j, _ in pairs]


def test_inverse_and_determinant_against_sympy():
    rng = random.Random(8)
    for n in range(1, 6):
        a = random_matrix(rng, n)
        det = from_sympy(to_sympy(a).det())
        assert linalg.determinant(a) == det
        if det:
            assert linalg.matmul(a, linalg.inverse(a)) == linalg.identity(n)


def test_charpoly_against_sympy():
    rng = random.Random(9)
    lam = sympy.Symbol("lam")
    for n in range(1, 6):
        a = random_matrix(rng, n)
        expected = sympy.Poly(to_sympy(a).charpoly(lam).as_expr(), lam).all_coeffs()[::-1]
        assert linalg.charpoly(a) == [from_sympy(sympy.Rational(c)) for c in expected]
