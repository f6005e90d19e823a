from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from divode.errors import InvalidArgument, NotDefinedAtZero
from divode.rational import (GaussianRational, Poly, Q, fmt, poly_derivative, poly_eval_complex,
                             poly_gcd, ratfun_normalize, render_poly, squarefree_part)

from conftest import rationals, rand_fraction

polys = st.lists(rationals, max_size=6).map(Poly)


def test_q_and_fmt():
    assert Q("6/4") == F(3, 2)
    assert fmt(F(3, 2)) == "3/2"
    assert fmt(F(-4, 2)) == "-2"
    with pytest.raises(TypeError):
        Q(0.5)


def test_poly_trims_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).is_zero()
    assert Poly([]).degree == -1


def test_derivative_characteristic_poly():
    # k^2 - 4k + 13 -> 2k - 4
    assert poly_derivative(Poly([13, -4, 1])) == Poly([-4, 2])


def test_derivative_of_constant():
    assert poly_derivative(Poly([7])).is_zero()


def test_derivative_index_oracle(rng):
    for _ in range(10):
        cs = [rand_fraction(rng) for _ in range(5)] + [F(rng.randint(1, 5))]
        d = poly_derivative(Poly(cs))
        assert list(d.coeffs) == [i * cs[i] for i in range(1, 6)]
        assert d.degree == 4


def test_eval_complex_known_root():
    assert poly_eval_complex(Poly([13, -4, 1]), GaussianRational(2, 3)) == 0
    assert poly_eval_complex(Poly([13, -4, 1]), GaussianRational(2, -3)) == 0


def test_eval_complex_constant():
    assert poly_eval_complex(Poly([1]), GaussianRational(F(5, 7), -2)) == 1


def test_eval_complex_power_oracle():
    # 1 - k - k^2 at 1+i, expanded with sympy's exact complex arithmetic
    z = sympy.Integer(1) + sympy.I
    expected = sympy.expand(1 - z - z ** 2)
    got = poly_eval_complex(Poly([1, -1, -1]), GaussianRational(1, 1))
    assert (got.re, got.im) == (F(int(sympy.re(expected))), F(int(sympy.im(expected))))


@given(polys, rationals)
def test_eval_complex_agrees_with_real(p, x):
    assert poly_eval_complex(p, GaussianRational(x, 0)) == GaussianRational(p(x), 0)


@given(rationals, rationals, rationals, rationals)
def test_gaussian_field_ops(a, b, c, d):
    z, w = GaussianRational(a, b), GaussianRational(c, d)
    assert (z * z.conjugate()).im == 0
    if w:
        assert (z / w) * w == z
    assert z * (w + 1) == z * w + z


def test_gcd_shared_factor():
    assert poly_gcd(Poly([-1, 0, 1]), Poly([-1, 1])) == Poly([-1, 1])


def test_gcd_unreduced_pair_is_constant():
    num = Poly([3600, 3600, 14400])
    den = Poly([3600, -7200, 7200, 14400, 14400])
    assert poly_gcd(num, den) == Poly([1])


def test_gcd_both_zero():
    with pytest.raises(InvalidArgument):
        poly_gcd(Poly(), Poly())


def test_gcd_construct_then_check(rng):
    for _ in range(15):
        p = Poly([rand_fraction(rng) for _ in range(3)] + [1])
        q = Poly([rand_fraction(rng) for _ in range(2)] + [2])
        if poly_gcd(p, q).degree > 0:
            continue
        r = Poly([rand_fraction(rng) for _ in range(2)] + [3])
        g = poly_gcd(p * r, q * r)
        assert g == r.monic()
        assert ((p * r) % g).is_zero() and ((q * r) % g).is_zero()


@given(polys, polys)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    quo, rem = divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


def test_normalize_constant_scaling():
    R = ratfun_normalize(Poly([2, 2]), Poly([2]))
    assert R.num == Poly([1, 1]) and R.den == Poly([1])


def test_normalize_raw_determinant_pair():
    R = ratfun_normalize(Poly([3600, 3600, 14400]), Poly([3600, -7200, 7200, 14400, 14400]))
    assert R.num == Poly([1, 1, 4])
    assert R.den == Poly([1, -2, 2, 4, 4])


def test_normalize_rejects_pole_at_zero():
    with pytest.raises(NotDefinedAtZero):
        ratfun_normalize(Poly([1]), Poly([0, 1]))


def test_normalize_pointwise_oracle(rng):
    for _ in range(10):
        common = Poly([1, rand_fraction(rng), 1])
        num = Poly([rand_fraction(rng) for _ in range(3)]) * common
        den = Poly([F(rng.randint(1, 5))] + [rand_fraction(rng) for _ in range(2)]) * common
        R = ratfun_normalize(num, den)
        assert R.den.coeff(0) == 1
        assert poly_gcd(R.num, R.den).degree <= 0 or R.num.is_zero()
        for _ in range(5):
            t = rand_fraction(rng)
            if den(t) != 0:
                assert R(t) == num(t) / den(t)


def test_squarefree_part():
    p = Poly([-1, 1]) ** 3 * Poly([2, 1])
    assert squarefree_part(p) == (Poly([-1, 1]) * Poly([2, 1])).monic()


def test_render_poly():
    assert render_poly(Poly([1, -2, F(1, 2)])) == "1 - 2*t + (1/2)*t^2"
    assert render_poly(Poly()) == "0"
