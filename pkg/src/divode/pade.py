"""Recover R_[L/M] from the first L+M+1 Maclaurin coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import InvalidArgument, OracleDegenerate, PadeDegenerate
from .rational import Poly, RationalFunction, poly_gcd, ratfun_normalize
from .series import SeriesTruncation, as_series, maclaurin_coeffs

ORACLE_MAX_ORDER = 10


@dataclass(frozen=True)
class PadeRequest:
    series: SeriesTruncation
    L: int
    M: int

    def __post_init__(self):
        object.__setattr__(self, "series", as_series(self.series))
        if self.L < 0 or self.M < 0:
            raise InvalidArgument("degree bounds must be non-negative")
        if len(self.series) < self.L + self.M + 1:
            raise InvalidArgument(
                f"[{self.L}/{self.M}] needs {self.L + self.M + 1} coefficients, "
                f"got {len(self.series)}")


@dataclass(frozen=True)
class PadeResult:
    fraction: RationalFunction
    L: int
    M: int
    # degree bounds that actually produced a nonsingular system
    L_used: int
    M_used: int
    # expansion reproduces every supplied coefficient, not just c_0..c_{L+M}
    exact: bool


def _request(series, L, M) -> PadeRequest:
    if isinstance(series, PadeRequest):
        return series
    return PadeRequest(as_series(series), L, M)


def _coef(c, n):
    return c[n] if n >= 0 else Fraction(0)


def _toeplitz(c, L: int, M: int):
    return [[_coef(c, n - j) for j in range(1, M + 1)] for n in range(L + 1, L + M + 1)]


def _solve_level(c, L: int, M: int):
    """Denominator q (q_0 = 1) and numerator p for one (L, M), or None if singular."""
    if M == 0:
        q = [Fraction(1)]
    else:
        a = _toeplitz(c, L, M)
        b = [-c[n] for n in range(L + 1, L + M + 1)]
        try:
            q = [Fraction(1)] + linalg.solve(a, b)
        except linalg.SingularMatrix:
            return None
    p = [sum((q[j] * _coef(c, n - j) for j in range(min(n, M) + 1)), Fraction(0))
         for n in range(L + 1)]
    return Poly(p), Poly(q)


def pade_approximant(series, L: int | None = None, M: int | None = None) -> PadeResult:
    """Linear-system Padé with the diagonal degeneracy ladder.

    A singular Toeplitz system at (L, M) is retried at (L-1, M-1), and so on,
    never lowering just one side. The level-k matrix is the top-right
    (M-k)x(M-k) block of the level-0 one, so levels with M-k above the
    level-0 rank are singular and skipped outright.
    """
    req = _request(series, L, M)
    c = req.series.coefficients
    if not any(c):
        # every Toeplitz system is zero here, but the series is the rational function 0
        return PadeResult(RationalFunction(Poly(), Poly([1])), req.L, req.M, 0, 0, True)
    start = req.M - linalg.rank(_toeplitz(c, req.L, req.M)) if req.M else 0
    for k in range(start, min(req.L, req.M) + 1):
        Lk, Mk = req.L - k, req.M - k
        level = _solve_level(c, Lk, Mk)
        if level is None:
            continue
        R = ratfun_normalize(*level)
        exact = list(maclaurin_coeffs(R, len(c) - 1)) == list(c)
        return PadeResult(R, req.L, req.M, Lk, Mk, exact)
    raise PadeDegenerate(
        f"no [L-k/M-k] Padé system is solvable for L={req.L}, M={req.M}")


def pade_solve(series, L: int | None = None, M: int | None = None) -> RationalFunction:
    return pade_approximant(series, L, M).fraction


def _last_row_expand(minors, last_row) -> Poly:
    """Cofactor expansion of an (M+1)x(M+1) determinant along its last row."""
    size = len(last_row)
    total = Poly()
    for k, entry in enumerate(last_row):
        sign = 1 if (size - 1 + k) % 2 == 0 else -1
        total = total + entry.scale(sign * minors[k])
    return total


def pade_determinants(series, L: int | None = None, M: int | None = None) -> tuple[Poly, Poly]:
    """Numerator and denominator determinants of the classical Padé quotient.

    Both (M+1)x(M+1) determinants share their first M rows of numbers
    c_{L-M+1+i+k}; only the last row differs, so expanding along it needs
    only numeric minors.
    """
    req = _request(series, L, M)
    L, M = req.L, req.M
    if L + M > ORACLE_MAX_ORDER:
        raise InvalidArgument(f"oracle is restricted to L+M <= {ORACLE_MAX_ORDER}")
    c = req.series.coefficients
    top = [[_coef(c, L - M + 1 + i + k) for k in range(M + 1)] for i in range(M)]
    minors = [linalg.determinant([row[:k] + row[k + 1:] for row in top]) if M else Fraction(1)
              for k in range(M + 1)]

    # column k (0-based): sum_{j=M-k}^{L} c_{j-M+k} t^j
    num_row = []
    for k in range(M + 1):
        coeffs = [Fraction(0)] * (L + 1)
        for j in range(M - k, L + 1):
            coeffs[j] = _coef(c, j - M + k)
        num_row.append(Poly(coeffs))
    den_row = [Poly.monomial(M - k) for k in range(M + 1)]
    return _last_row_expand(minors, num_row), _last_row_expand(minors, den_row)


def pade_determinant_oracle(series, L: int | None = None, M: int | None = None) -> RationalFunction:
    """R_[L/M] as the literal quotient of the two determinants, normalized."""
    num, den = pade_determinants(series, L, M)
    if den.is_zero():
        raise OracleDegenerate("denominator determinant is identically zero")
    if den.coeff(0) == 0 and not num.is_zero():
        g = poly_gcd(num, den)
        num, den = num // g, den // g
    if den.coeff(0) == 0:
        raise OracleDegenerate("denominator determinant vanishes at t=0")
    return ratfun_normalize(num, den)
