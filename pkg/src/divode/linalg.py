"""Small dense exact linear algebra over Fraction.

Matrices are lists of rows. Gauss-Jordan over Fraction everywhere except
square solves, which use fraction-free elimination because Padé systems
of order 30 or so are routine.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence

Matrix = List[List[Fraction]]
Vector = List[Fraction]


class SingularMatrix(ArithmeticError):
    pass


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt]
            for row in a]


def matvec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def madd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mscale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        den = math.lcm(*(Fraction(x).denominator for x in row))
        out.append([int(Fraction(x) * den) for x in row])
    return out


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot column list."""
    r = [list(row) for row in a]
    rows = len(r)
    cols = len(r[0]) if rows else 0
    pivots: list[int] = []
    i = 0
    for j in range(cols):
        p = next((k for k in range(i, rows) if r[k][j] != 0), None)
        if p is None:
            continue
        r[i], r[p] = r[p], r[i]
        piv = r[i][j]
        r[i] = [x / piv for x in r[i]]
        for k in range(rows):
            if k != i and r[k][j] != 0:
                f = r[k][j]
                r[k] = [x - f * y for x, y in zip(r[k], r[i])]
        pivots.append(j)
        i += 1
        if i == rows:
            break
    return r, pivots


def rank(a: Matrix) -> int:
    """Rank by fraction-free elimination."""
    m = _integer_rows(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r, prev = 0, 1
    for j in range(cols):
        p = next((k for k in range(r, rows) if m[k][j]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][j]
        for k in range(r + 1, rows):
            f = m[k][j]
            m[k] = [(piv * x - f * y) // prev for x, y in zip(m[k], m[r])]
        prev = piv
        r += 1
        if r == rows:
            break
    return r


def solve(a: Matrix, b: Sequence[Fraction]) -> Vector:
    """Unique solution of a square system; raises SingularMatrix otherwise.

    Fraction-free (Bareiss) elimination on integer rows: every division is
    exact, so entries stay the size of minors instead of growing fractions.
    """
    n = len(a)
    m = _integer_rows(list(row) + [x] for row, x in zip(a, b))
    prev = 1
    for j in range(n):
        p = next((k for k in range(j, n) if m[k][j]), None)
        if p is None:
            raise SingularMatrix(f"matrix of size {n} is singular")
        m[j], m[p] = m[p], m[j]
        piv = m[j][j]
        for k in range(j + 1, n):
            f = m[k][j]
            m[k] = [(piv * x - f * y) // prev for x, y in zip(m[k], m[j])]
        prev = piv
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        s = m[i][n] - sum(m[i][k] * x[k] for k in range(i + 1, n))
        x[i] = Fraction(s, m[i][i])
    return x


def solve_consistent(a: Matrix, b: Sequence[Fraction]) -> Vector:
    """Some solution of a possibly singular system, free variables set to 0.

    Raises SingularMatrix if the system is inconsistent.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [Fraction(x)] for row, x in zip(a, b)]
    r, pivots = rref(aug)
    if n in pivots:
        raise SingularMatrix("inconsistent linear system")
    x = [Fraction(0)] * n
    for i, j in enumerate(pivots):
        x[j] = r[i][n]
    return x


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrix(f"matrix of size {n} is singular")
    return [row[n:] for row in r]


def nullspace(a: Matrix) -> list[Vector]:
    """Null-space basis read off the reduced echelon form.

    One vector per free column f: it has a 1 at f, 0 at the other free
    columns, and minus the pivot-row entries at pivot columns.
    """
    return [v for _, v in nullspace_by_free_column(a)]


def nullspace_by_free_column(a: Matrix) -> list[tuple[int, Vector]]:
    if not a:
        return []
    n = len(a[0])
    r, pivots = rref(a)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, j in enumerate(pivots):
            v[j] = -r[i][f]
        basis.append((f, v))
    return basis


def determinant(a: Matrix) -> Fraction:
    """Determinant by elimination with row swaps."""
    m = [list(row) for row in a]
    n = len(m)
    det = Fraction(1)
    for j in range(n):
        p = next((k for k in range(j, n) if m[k][j] != 0), None)
        if p is None:
            return Fraction(0)
        if p != j:
            m[j], m[p] = m[p], m[j]
            det = -det
        piv = m[j][j]
        det *= piv
        for k in range(j + 1, n):
            if m[k][j] != 0:
                f = m[k][j] / piv
                m[k] = [x - f * y for x, y in zip(m[k], m[j])]
    return det


def charpoly(a: Matrix) -> list[Fraction]:
    """Coefficients (ascending) of det(tI - A) via Faddeev-LeVerrier."""
    n = len(a)
    if n == 0:
        return [Fraction(1)]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = zeros(n)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = matmul(a, m)
        c_prev = coeffs[n - k + 1]
        m = [[am[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        am = matmul(a, m)
        coeffs[n - k] = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
    return coeffs
