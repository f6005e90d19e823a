"""Exact arithmetic: Gaussian rationals, dense polynomials, rational functions.

Rationals are plain :class:`fractions.Fraction` values. Polynomials store
coefficients in ascending powers with trailing zeros trimmed, so the zero
polynomial is the empty tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import InvalidArgument, NotDefinedAtZero

RationalLike = Union[int, Fraction, str]


def Q(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction.

    Floats are refused; they would silently smuggle binary rounding in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational literal")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def fmt(q: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(Q(q))


# --------------------------------------------------------------------------
# Gaussian rationals


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Q(self.re))
        object.__setattr__(self, "im", Q(self.im))

    @classmethod
    def of(cls, z) -> "GaussianRational":
        if isinstance(z, GaussianRational):
            return z
        return cls(Q(z), Fraction(0))

    def __add__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other):
        return GaussianRational.of(other) - self

    def __mul__(self, other):
        o = GaussianRational.of(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = GaussianRational.of(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conjugate()
        return GaussianRational(p.re / n, p.im / n)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational.of(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if not self.im:
            return fmt(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{fmt(self.re)}{sign}{fmt(abs(self.im))}i"


# --------------------------------------------------------------------------
# Polynomials


class Poly:
    """Dense univariate polynomial over Q, ascending coefficient order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: RationalLike) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: RationalLike = 1) -> "Poly":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(fmt(c) for c in self.coeffs)}])"

    def __str__(self):
        return render_poly(self)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lead()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lc
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation; works for any ring element that mixes with Fraction."""
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, c: RationalLike) -> "Poly":
        c = Q(c)
        return Poly(a * c for a in self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead())

    def derivative(self) -> "Poly":
        return poly_derivative(self)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly.const(x)


def poly_derivative(p: Poly) -> Poly:
    return Poly(i * c for i, c in enumerate(p.coeffs) if i > 0)


def poly_eval_complex(p: Poly, z: GaussianRational) -> GaussianRational:
    z = GaussianRational.of(z)
    acc = GaussianRational()
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise InvalidArgument("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p') made monic; has the same roots, each simple."""
    if p.degree < 1:
        return p.monic()
    return (p // poly_gcd(p, p.derivative())).monic()


def _term(c: Fraction, n: int, var: str) -> str:
    if n == 0:
        return fmt(c)
    mono = var if n == 1 else f"{var}^{n}"
    if c == 1:
        return mono
    if c.denominator == 1:
        return f"{c.numerator}*{mono}"
    return f"({fmt(c)})*{mono}"


def render_poly(p: Poly, var: str = "t") -> str:
    """Ascending-order rendering such as ``1 - 2*t + (1/2)*t^3``."""
    if p.is_zero():
        return "0"
    parts = []
    for n, c in enumerate(p.coeffs):
        if not c:
            continue
        body = _term(abs(c), n, var)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


# --------------------------------------------------------------------------
# Rational functions


@dataclass(frozen=True)
class RationalFunction:
    """num/den in lowest terms with den(0) == 1.

    Build these with :func:`ratfun_normalize`; the constructor trusts its
    arguments.
    """

    num: Poly
    den: Poly

    def __call__(self, t):
        d = self.den(t)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at t={t}")
        return self.num(t) / d

    def __str__(self):
        if self.den == Poly.const(1):
            return render_poly(self.num)
        return f"({render_poly(self.num)})/({render_poly(self.den)})"

    def to_json(self) -> dict:
        return {"num": [fmt(c) for c in self.num.coeffs],
                "den": [fmt(c) for c in self.den.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return ratfun_normalize(Poly(data["num"]), Poly(data["den"]))


def ratfun_normalize(num: Poly, den: Poly) -> RationalFunction:
    num, den = _as_poly(num), _as_poly(den)
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if den.coeff(0) == 0:
        raise NotDefinedAtZero("denominator vanishes at t=0")
    if num.is_zero():
        return RationalFunction(Poly(), Poly.const(1))
    g = poly_gcd(num, den)
    num, den = num // g, den // g
    c0 = den.coeff(0)
    return RationalFunction(num.scale(1 / c0), den.scale(1 / c0))
