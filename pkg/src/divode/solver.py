"""Particular solutions of phi(D) y = f for typical right-hand sides.

Two pipelines share the same basis and operator matrix:

* direct: solve phi(M) y = g exactly on the undetermined-coefficients basis;
* divergent: expand 1/phi(t) as a power series, form sum c_k t^k M^k g,
  rebuild each coordinate as a rational function of t with Padé and sum
  the divergent series at t = 1 (Euler summation).

When phi vanishes at alpha + beta*i to order k, both pipelines first
replace the problem by phi^{(k)}(D) y = x^k f, whose operator matrix is
regular, and afterwards strip the kernel components of phi(M).
Right-hand sides are split into (alpha, beta) groups and solved per group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .diffop import (BasisTerm, FunctionSpaceBasis, ResonanceInfo, apply_operator_poly,
                     build_basis, coordinates, group_terms, matrix_operator,
                     resonance_multiplicity)
from .errors import (DivodeError, InverseExpansionUndefined, InvalidArgument, EulerSumUndefined,
                     PadeDegenerate, ReductionFailed, SummationInconsistent)
from .pade import pade_approximant
from .rational import Poly, Q, RationalFunction, fmt, ratfun_normalize
from .series import evaluate_at_one, maclaurin_coeffs

METHODS = ("direct", "divergent", "auto")


@dataclass(frozen=True)
class SolveOptions:
    method: str = "auto"
    # series degree for the divergent path; None means L + M
    truncation: Optional[int] = None
    # apply the x^k reduction on resonance (divergent path)
    reduce: bool = True

    def __post_init__(self):
        if self.method not in METHODS:
            raise InvalidArgument(f"unknown method {self.method!r}")
        if self.truncation is not None and (not isinstance(self.truncation, int)
                                            or self.truncation < 0):
            raise InvalidArgument("truncation must be a non-negative integer")


@dataclass(frozen=True)
class ODEProblem:
    phi: Poly
    rhs: tuple

    def __post_init__(self):
        phi = self.phi if isinstance(self.phi, Poly) else Poly(self.phi)
        if phi.is_zero():
            raise InvalidArgument("operator polynomial must be nonzero")
        merged: dict = {}
        for c, t in self.rhs:
            merged[t] = merged.get(t, Fraction(0)) + Q(c)
        rhs = tuple((c, t) for t, c in merged.items() if c)
        if not rhs:
            raise InvalidArgument("right-hand side is empty")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "rhs", rhs)

    @property
    def terms(self) -> list[BasisTerm]:
        return [t for _, t in self.rhs]

    def groups(self) -> list["ODEProblem"]:
        """One subproblem per (alpha, beta) group, in input order."""
        return [ODEProblem(self.phi, tuple((c, t) for c, t in self.rhs if t.group == g))
                for g in group_terms(self.terms)]


@dataclass(frozen=True)
class ParticularSolution:
    basis: FunctionSpaceBasis
    coords: tuple

    def __post_init__(self):
        coords = tuple(Q(c) for c in self.coords)
        if len(coords) != len(self.basis):
            raise InvalidArgument("coordinate vector does not match the basis")
        object.__setattr__(self, "coords", coords)

    def terms(self) -> list[tuple[Fraction, BasisTerm]]:
        return [(c, t) for c, t in zip(self.coords, self.basis) if c]

    def __str__(self):
        from .expr import render_terms
        return render_terms(self.terms())


@dataclass
class GroupReport:
    alpha: Fraction
    beta: Fraction
    method: str
    k: int
    basis: FunctionSpaceBasis
    operator_matrix: list = field(default_factory=list)
    L: Optional[int] = None
    M: Optional[int] = None
    truncation_degree: Optional[int] = None
    component_series: list = field(default_factory=list)
    component_fractions: list = field(default_factory=list)
    component_exact: list = field(default_factory=list)
    values_at_one: list = field(default_factory=list)
    full_coords: list = field(default_factory=list)
    kernel_pruned: list = field(default_factory=list)
    verified: bool = False
    note: str = ""

    def to_json(self) -> dict:
        return {
            "alpha": fmt(self.alpha), "beta": fmt(self.beta),
            "method": self.method, "k": self.k,
            "basis": [t.to_json() for t in self.basis],
            "L": self.L, "M": self.M, "truncation_degree": self.truncation_degree,
            "component_series": [[fmt(c) for c in s] for s in self.component_series],
            "component_fractions": [f.to_json() for f in self.component_fractions],
            "component_exact": list(self.component_exact),
            "values_at_one": [fmt(v) for v in self.values_at_one],
            "full_coords": [fmt(v) for v in self.full_coords],
            "kernel_pruned": [[i, fmt(c)] for i, c in self.kernel_pruned],
            "verified": self.verified,
            "note": self.note,
        }


@dataclass
class SolveReport:
    """Summary over all groups; per-group details live in ``groups``.

    For a single-group problem the top-level fields are exactly that
    group's values. Otherwise k, L, M and truncation_degree are maxima and
    the per-coordinate lists are concatenated in basis order.
    """

    method: str
    groups: list = field(default_factory=list)

    @property
    def k(self) -> int:
        return max((g.k for g in self.groups), default=0)

    def _max(self, name):
        vals = [getattr(g, name) for g in self.groups if getattr(g, name) is not None]
        return max(vals) if vals else None

    @property
    def L(self):
        return self._max("L")

    @property
    def M(self):
        return self._max("M")

    @property
    def truncation_degree(self):
        return self._max("truncation_degree")

    def _concat(self, name):
        return [x for g in self.groups for x in getattr(g, name)]

    @property
    def component_fractions(self) -> list[RationalFunction]:
        return self._concat("component_fractions")

    @property
    def component_series(self) -> list:
        return self._concat("component_series")

    @property
    def values_at_one(self) -> list[Fraction]:
        return self._concat("values_at_one")

    @property
    def full_coords(self) -> list[Fraction]:
        return self._concat("full_coords")

    @property
    def kernel_pruned(self) -> list[tuple[int, Fraction]]:
        out, offset = [], 0
        for g in self.groups:
            out.extend((i + offset, c) for i, c in g.kernel_pruned)
            offset += len(g.basis)
        return out

    @property
    def verified(self) -> bool:
        return bool(self.groups) and all(g.verified for g in self.groups)

    def to_json(self) -> dict:
        return {
            "method": self.method, "k": self.k, "L": self.L, "M": self.M,
            "truncation_degree": self.truncation_degree,
            "component_fractions": [f.to_json() for f in self.component_fractions],
            "values_at_one": [fmt(v) for v in self.values_at_one],
            "kernel_pruned": [[i, fmt(c)] for i, c in self.kernel_pruned],
            "verified": self.verified,
            "groups": [g.to_json() for g in self.groups],
        }


# --------------------------------------------------------------------------
# building blocks


def _single_group(p: ODEProblem) -> tuple:
    groups = group_terms(p.terms)
    if len(groups) != 1:
        raise InvalidArgument("expected a right-hand side with a single (alpha, beta) group")
    (group, d), = groups.items()
    return group, d


def reduce_resonant(p: ODEProblem) -> tuple[ODEProblem, ResonanceInfo]:
    """Replace phi by phi^{(k)} and multiply the right-hand side by x^k.

    Only valid for a single group whose terms carry no power of x
    (A e^{ax}, or e^{ax}(A sin bx + B cos bx)); for x^j with j > 0 the
    substituted problem is not equivalent and ReductionFailed is raised.
    """
    (alpha, beta), d = _single_group(p)
    info = resonance_multiplicity(p.phi, alpha, beta)
    if info.k == 0:
        return p, info
    if d > 0:
        raise ReductionFailed(
            f"resonant right-hand side with an x^{d} factor: the x^k reduction "
            "only holds for terms without a power of x")
    rhs = tuple((c, t.with_power(t.power + info.k)) for c, t in p.rhs)
    return ODEProblem(info.derivative_poly, rhs), info


def _prune(coords: Sequence[Fraction], A) -> tuple[list[Fraction], list[tuple[int, Fraction]]]:
    y = list(coords)
    removed = []
    # each kernel vector is 1 at its own free column and 0 at the others,
    # so the eliminations do not interfere
    for f, v in linalg.nullspace_by_free_column(A):
        c = y[f]
        if c:
            y = [a - c * b for a, b in zip(y, v)]
            removed.append((f, c))
    return y, removed


def prune_kernel(y: ParticularSolution, phiD) -> ParticularSolution:
    """Drop the kernel components of phi(M) from y, one free coordinate at a time."""
    coords, _ = _prune(y.coords, phiD)
    return ParticularSolution(y.basis, tuple(coords))


def verify_solution(p: ODEProblem, y: ParticularSolution) -> list[Fraction]:
    """phi(M) y - g on the basis of y, extended to cover the right-hand side."""
    basis = y.basis + build_basis(p.terms, 0)
    coords = list(y.coords) + [Fraction(0)] * (len(basis) - len(y.basis))
    A = apply_operator_poly(p.phi, matrix_operator(basis))
    g = coordinates(p.rhs, basis)
    return [a - b for a, b in zip(linalg.matvec(A, coords), g)]


# --------------------------------------------------------------------------
# per-group pipelines


def _setup(p: ODEProblem):
    (alpha, beta), d = _single_group(p)
    info = resonance_multiplicity(p.phi, alpha, beta)
    basis = build_basis(p.terms, info.k)
    D = matrix_operator(basis)
    A = apply_operator_poly(p.phi, D)
    g = coordinates(p.rhs, basis)
    return alpha, beta, d, info, basis, D, A, g


def _finish(rep: GroupReport, y, A, g, fail_cls):
    rep.full_coords = list(y)
    residual = [a - b for a, b in zip(linalg.matvec(A, y), g)]
    if any(residual):
        raise fail_cls(f"solution does not satisfy phi(D)y = f; residual {[fmt(r) for r in residual]}")
    pruned, removed = _prune(y, A)
    rep.kernel_pruned = removed
    if removed:
        rule = "kernel of phi(M) removed at the free columns of its reduced echelon form"
        rep.note = f"{rep.note}; {rule}" if rep.note else rule
    rep.verified = True
    return pruned


def _direct_group(p: ODEProblem, rep_out: list) -> list[Fraction]:
    alpha, beta, d, info, basis, D, A, g = _setup(p)
    rep = GroupReport(alpha, beta, "direct", info.k, basis, A)
    rep_out.append(rep)
    if info.k == 0:
        y = linalg.solve(A, g)
    elif d == 0:
        reduced, _ = reduce_resonant(p)
        rep.method = "reduced+direct"
        Ar = apply_operator_poly(reduced.phi, D)
        try:
            y = linalg.solve(Ar, coordinates(reduced.rhs, basis))
        except linalg.SingularMatrix:
            raise ReductionFailed("reduced operator matrix is singular", report=rep) from None
    else:
        # outside the x^k reduction: solve the singular but consistent system
        rep.note = "resonant x^j term: consistent solve on the enlarged basis"
        try:
            y = linalg.solve_consistent(A, g)
        except linalg.SingularMatrix:
            raise ReductionFailed("no solution on the enlarged basis", report=rep) from None
    return _finish(rep, y, A, g, ReductionFailed)


def default_bounds(n: int, m: int) -> tuple[int, int]:
    """Padé degree bounds for an order-n operator on an m-dimensional space."""
    return n * (m - 1), n * m


def _divergent_group(p: ODEProblem, rep_out: list, truncation: Optional[int],
                     reduce: bool) -> list[Fraction]:
    alpha, beta, d, info, basis, D, A, g = _setup(p)
    rep = GroupReport(alpha, beta, "divergent", info.k, basis, A)
    rep_out.append(rep)
    op, g_op = p.phi, g
    if reduce and info.k > 0:
        try:
            reduced, _ = reduce_resonant(p)
        except ReductionFailed as exc:
            exc.report = rep
            raise
        rep.method = "reduced+divergent"
        op, g_op = reduced.phi, coordinates(reduced.rhs, basis)
    if op.coeff(0) == 0:
        hint = " (the x^k reduction at alpha=0 is disabled)" if not reduce else ""
        raise InverseExpansionUndefined(
            f"1/phi(t) has no Maclaurin expansion: phi(0) = 0{hint}", report=rep)

    m = len(basis)
    L, M = default_bounds(op.degree, m)
    N = L + M if truncation is None else truncation
    if N < L + M:
        # fewer terms than needed: shrink bounds proportionally, result is an approximant
        L = (N * L) // (L + M) if L + M else 0
        M = N - L
    rep.L, rep.M, rep.truncation_degree = L, M, N

    c = maclaurin_coeffs(ratfun_normalize(Poly([1]), op), N)
    series = [[Fraction(0)] * (N + 1) for _ in range(m)]
    x = list(g_op)
    Dm = D.matrix
    for j in range(N + 1):
        for i in range(m):
            series[i][j] = c[j] * x[i]
        x = linalg.matvec(Dm, x)
    rep.component_series = series

    values = []
    for i, s in enumerate(series):
        try:
            res = pade_approximant(s, L, M)
        except PadeDegenerate as exc:
            exc.report = rep
            raise
        rep.component_fractions.append(res.fraction)
        rep.component_exact.append(res.exact)
        try:
            values.append(evaluate_at_one(res.fraction))
        except EulerSumUndefined as exc:
            raise EulerSumUndefined(f"component {i}: {exc}", report=rep) from None
    rep.values_at_one = values
    return _finish(rep, values, A, g, SummationInconsistent)


def _run(p: ODEProblem, method: str, fn) -> tuple[ParticularSolution, SolveReport]:
    report = SolveReport(method)
    coords: list[Fraction] = []
    basis_terms: list[BasisTerm] = []
    try:
        for sub in p.groups():
            coords.extend(fn(sub, report.groups))
            basis_terms.extend(report.groups[-1].basis.terms)
    except DivodeError as exc:
        exc.report = report
        raise
    if any(g.method.startswith("reduced") for g in report.groups):
        report.method = f"reduced+{method}"
    y = ParticularSolution(FunctionSpaceBasis(basis_terms), tuple(coords))
    if any(verify_solution(p, y)):
        raise SummationInconsistent("assembled solution failed verification", report=report)
    return y, report


def solve_direct(p: ODEProblem) -> tuple[ParticularSolution, SolveReport]:
    return _run(p, "direct", _direct_group)


def solve_divergent(p: ODEProblem, truncation: Optional[int] = None,
                    reduce: bool = True) -> tuple[ParticularSolution, SolveReport]:
    return _run(p, "divergent",
                lambda sub, reps: _divergent_group(sub, reps, truncation, reduce))


def solve(p: ODEProblem, method: str = "auto", truncation: Optional[int] = None,
          reduce: bool = True) -> tuple[ParticularSolution, SolveReport]:
    opts = SolveOptions(method, truncation, reduce)
    if opts.method == "divergent":
        return solve_divergent(p, opts.truncation, opts.reduce)
    # the direct path already falls back to the reduced operator on resonance
    return solve_direct(p)
