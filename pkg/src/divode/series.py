"""Maclaurin expansion of rational functions and divergent-series sums."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import EulerSumUndefined, InvalidArgument
from .rational import Poly, Q, RationalFunction, fmt, squarefree_part


@dataclass(frozen=True)
class SeriesTruncation:
    """Coefficients c_0..c_N of a power series in t."""

    coefficients: tuple
    nominal_radius: Optional[float] = None

    def __post_init__(self):
        cs = tuple(Q(c) for c in self.coefficients)
        if not cs:
            raise InvalidArgument("a series truncation needs at least c_0")
        object.__setattr__(self, "coefficients", cs)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def to_json(self) -> list:
        return [fmt(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, items) -> "SeriesTruncation":
        return cls(tuple(Q(c) for c in items))


def as_series(series) -> SeriesTruncation:
    if isinstance(series, SeriesTruncation):
        return series
    return SeriesTruncation(tuple(series))


def maclaurin_coeffs(R: RationalFunction, N: int) -> SeriesTruncation:
    """c_0..c_N of R via the recurrence c_n = -(q_1 c_{n-1} + ... + q_M c_{n-M}) + p_n.

    R is normalized, so q_0 = 1 and no division happens.
    """
    if N < 0:
        raise InvalidArgument("N must be non-negative")
    p, q = R.num.coeffs, R.den.coeffs
    q0 = q[0]
    M = len(q) - 1
    c: list[Fraction] = []
    for n in range(N + 1):
        acc = p[n] if n < len(p) else Fraction(0)
        for j in range(1, min(M, n) + 1):
            acc -= q[j] * c[n - j]
        c.append(acc / q0)
    return SeriesTruncation(tuple(c))


def root_moduli(p: Poly, tol: float = 1e-9) -> list[float]:
    """|z| for each distinct complex root of p, Newton-polished in double precision."""
    sf = squarefree_part(p)
    if sf.degree < 1:
        return []
    # numpy wants descending order
    roots = np.roots([float(c) for c in reversed(sf.coeffs)])
    coeffs = [float(c) for c in sf.coeffs]
    dcoeffs = [float(c) for c in sf.derivative().coeffs]
    out = []
    for z in roots:
        # a few Newton steps; the roots are simple after taking the squarefree part
        for _ in range(50):
            f = np.polyval(coeffs[::-1], z)
            df = np.polyval(dcoeffs[::-1], z)
            if df == 0:
                break
            step = f / df
            z = z - step
            if abs(step) <= tol * max(abs(z), 1e-300):
                break
        out.append(abs(z))
    return out


def convergence_radius(R: RationalFunction, tol: float = 1e-9) -> float:
    """Radius of convergence of the Maclaurin series of R: min |root of den|.

    Approximate and diagnostic only. A constant denominator gives ``math.inf``.
    """
    if R.den.degree < 1:
        return math.inf
    return min(root_moduli(R.den, tol))


def cesaro_means(coeffs: Sequence, upto: int) -> list[Fraction]:
    """Arithmetic means of the partial sums s_0..s_n for n < upto."""
    if upto > len(coeffs):
        raise InvalidArgument("upto exceeds the number of coefficients")
    means = []
    s = Fraction(0)
    total = Fraction(0)
    for n in range(upto):
        s += Q(coeffs[n])
        total += s
        means.append(total / (n + 1))
    return means


def euler_sum(series, L: int, M: int) -> Fraction:
    """Euler sum of sum(c_n): rebuild R_[L/M] from c_0..c_{L+M} and evaluate at t=1."""
    from .pade import pade_solve

    s = as_series(series)
    R = pade_solve(s, L, M)
    return evaluate_at_one(R)


def evaluate_at_one(R: RationalFunction) -> Fraction:
    d = R.den(Fraction(1))
    if d == 0:
        raise EulerSumUndefined(f"denominator of {R} vanishes at t=1")
    return R.num(Fraction(1)) / d
