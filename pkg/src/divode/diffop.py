"""Function spaces closed under d/dx and the matrix of D on them.

A basis term is x^j e^{ax} sin(bx), x^j e^{ax} cos(bx) or x^j e^{ax}
(kind "exp", b = 0). Bases are ordered by descending power of x with sin
before cos inside each (a, b) group; the operator matrices depend on that
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import BasisMismatch, InvalidArgument
from .linalg import Matrix
from .rational import (GaussianRational, Poly, Q, fmt, poly_eval_complex)
from .series import root_moduli

KINDS = ("sin", "cos", "exp")


@dataclass(frozen=True)
class BasisTerm:
    power: int
    alpha: Fraction
    beta: Fraction
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "alpha", Q(self.alpha))
        object.__setattr__(self, "beta", Q(self.beta))
        if self.kind not in KINDS:
            raise InvalidArgument(f"unknown term kind {self.kind!r}")
        if self.power < 0:
            raise InvalidArgument("x-power must be non-negative")
        if (self.kind == "exp") != (self.beta == 0):
            raise InvalidArgument("kind 'exp' is exactly the beta = 0 case")
        if self.beta < 0:
            raise InvalidArgument("beta must be non-negative; use canonical_term")

    @property
    def group(self) -> tuple[Fraction, Fraction]:
        return (self.alpha, self.beta)

    def with_power(self, power: int) -> "BasisTerm":
        return BasisTerm(power, self.alpha, self.beta, self.kind)

    def partner(self) -> "BasisTerm":
        """The sin/cos companion with the same power and group."""
        other = {"sin": "cos", "cos": "sin", "exp": "exp"}[self.kind]
        return BasisTerm(self.power, self.alpha, self.beta, other)

    def derivative(self) -> list[tuple[Fraction, "BasisTerm"]]:
        out = []
        if self.power > 0:
            out.append((Fraction(self.power), self.with_power(self.power - 1)))
        if self.alpha:
            out.append((self.alpha, self))
        if self.kind == "sin":
            out.append((self.beta, self.partner()))
        elif self.kind == "cos":
            out.append((-self.beta, self.partner()))
        return out

    def to_json(self) -> dict:
        return {"power": self.power, "alpha": fmt(self.alpha),
                "beta": fmt(self.beta), "kind": self.kind}

    @classmethod
    def from_json(cls, data: dict) -> "BasisTerm":
        return cls(int(data["power"]), Q(data["alpha"]), Q(data["beta"]), data["kind"])


def canonical_term(power: int, alpha, beta, kind: str) -> tuple[Fraction, BasisTerm | None]:
    """Fold sign and zero frequencies into a (factor, term) pair.

    sin(-bx) = -sin(bx), cos(-bx) = cos(bx), sin(0x) = 0, cos(0x) = 1.
    A factor of 0 means the term vanishes identically (term is None).
    """
    alpha, beta = Q(alpha), Q(beta)
    sign = Fraction(1)
    if kind in ("sin", "cos") and beta < 0:
        beta = -beta
        if kind == "sin":
            sign = -sign
    if kind in ("sin", "cos") and beta == 0:
        if kind == "sin":
            return Fraction(0), None
        kind = "exp"
    if kind == "exp" and beta != 0:
        raise InvalidArgument("exp terms carry no frequency")
    return sign, BasisTerm(power, alpha, beta, kind)


class FunctionSpaceBasis:
    """Ordered, duplicate-free list of terms closed under differentiation."""

    def __init__(self, terms: Iterable[BasisTerm]):
        self.terms: tuple[BasisTerm, ...] = tuple(terms)
        self._index = {t: i for i, t in enumerate(self.terms)}
        if len(self._index) != len(self.terms):
            raise InvalidArgument("basis terms must be distinct")
        for t in self.terms:
            for _, d in t.derivative():
                if d not in self._index:
                    raise InvalidArgument(f"basis not closed under d/dx: missing {d}")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __contains__(self, term):
        return term in self._index

    def __eq__(self, other):
        return isinstance(other, FunctionSpaceBasis) and self.terms == other.terms

    def __repr__(self):
        return f"FunctionSpaceBasis({list(self.terms)!r})"

    def index(self, term: BasisTerm) -> int:
        try:
            return self._index[term]
        except KeyError:
            raise BasisMismatch(f"{term} is not in the basis") from None

    def __add__(self, other: "FunctionSpaceBasis") -> "FunctionSpaceBasis":
        extra = [t for t in other.terms if t not in self._index]
        return FunctionSpaceBasis(self.terms + tuple(extra))


def _strip(rhs_terms) -> list[BasisTerm]:
    return [t[1] if isinstance(t, tuple) else t for t in rhs_terms]


def group_terms(terms: Sequence[BasisTerm]) -> dict:
    """Max x-power per (alpha, beta) group, in first-appearance order."""
    groups: dict = {}
    for t in terms:
        groups[t.group] = max(groups.get(t.group, 0), t.power)
    return groups


def build_basis(rhs_terms, k: int = 0) -> FunctionSpaceBasis:
    """Undetermined-coefficients basis: powers 0..d+k for every group."""
    terms = []
    for (alpha, beta), d in group_terms(_strip(rhs_terms)).items():
        for j in range(d + k, -1, -1):
            if beta == 0:
                terms.append(BasisTerm(j, alpha, beta, "exp"))
            else:
                terms.append(BasisTerm(j, alpha, beta, "sin"))
                terms.append(BasisTerm(j, alpha, beta, "cos"))
    return FunctionSpaceBasis(terms)


@dataclass(frozen=True)
class MatrixOperator:
    entries: tuple
    basis: FunctionSpaceBasis

    @property
    def matrix(self) -> Matrix:
        return [list(row) for row in self.entries]

    def __len__(self):
        return len(self.entries)


def _matrix(D) -> Matrix:
    return D.matrix if isinstance(D, MatrixOperator) else [list(r) for r in D]


def matrix_operator(basis: FunctionSpaceBasis) -> MatrixOperator:
    """Column i holds the coordinates of the derivative of term i."""
    m = len(basis)
    a = linalg.zeros(m)
    for i, t in enumerate(basis):
        for c, d in t.derivative():
            a[basis.index(d)][i] += c
    return MatrixOperator(tuple(tuple(row) for row in a), basis)


def apply_operator_poly(phi: Poly, D) -> Matrix:
    """a_n D^n + ... + a_1 D + a_0 I by Horner's rule in the matrix ring."""
    a = _matrix(D)
    m = len(a)
    acc = linalg.zeros(m)
    for c in reversed(phi.coeffs):
        acc = linalg.matmul(acc, a)
        for i in range(m):
            acc[i][i] += c
    return acc


def coordinates(rhs, basis: FunctionSpaceBasis) -> list[Fraction]:
    g = [Fraction(0)] * len(basis)
    for c, t in rhs:
        g[basis.index(t)] += Q(c)
    return g


def kernel_basis(A: Matrix) -> list[list[Fraction]]:
    return linalg.nullspace(_matrix(A))


@dataclass(frozen=True)
class ResonanceInfo:
    k: int
    derivative_poly: Poly
    root: GaussianRational


def resonance_multiplicity(phi: Poly, alpha, beta=0) -> ResonanceInfo:
    """Order of vanishing of phi at alpha + beta*i, by exact evaluation."""
    if phi.is_zero():
        raise InvalidArgument("zero operator polynomial")
    z = GaussianRational(Q(alpha), Q(beta))
    d, k = phi, 0
    # terminates: phi^{(n)} is a nonzero constant
    while not poly_eval_complex(d, z):
        d = d.derivative()
        k += 1
    return ResonanceInfo(k, d, z)


def estimate_spectral_radius(D, tol: float = 1e-9) -> float:
    """max |eigenvalue|, from the exact characteristic polynomial.

    The characteristic polynomial is made squarefree exactly before the
    numeric root step, so repeated eigenvalues (common for these operator
    matrices) do not cost precision.
    """
    a = _matrix(D)
    if not a:
        return 0.0
    moduli = root_moduli(Poly(linalg.charpoly(a)), tol)
    return max(moduli) if moduli else 0.0
