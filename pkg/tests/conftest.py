import random
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def rand_fraction(rng: random.Random, lo=-6, hi=6, maxden=4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, maxden))


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_nonresonant(rng: random.Random, n_max=3, m_max=4):
    """Random phi of order <= n_max with phi(0) != 0 and a single-group rhs whose
    basis has dimension <= m_max and does not hit a root of phi."""
    from divode.diffop import BasisTerm
    from divode.rational import Poly
    from divode.solver import ODEProblem, reduce_resonant

    while True:
        n = rng.randint(1, n_max)
        lead = Fraction(rng.choice([-2, -1, 1, 2]))
        phi = Poly([rand_fraction(rng, -4, 4, 2) for _ in range(n)] + [lead])
        if phi.coeff(0) == 0:
            continue
        alpha = rand_fraction(rng, -2, 2, 2)
        if rng.random() < 0.5:
            beta = Fraction(rng.randint(1, 3))
            j = rng.randint(0, m_max // 2 - 1)
            rhs = ((rand_fraction(rng) or 1, BasisTerm(j, alpha, beta, "sin")),
                   (rand_fraction(rng), BasisTerm(j, alpha, beta, "cos")))
        else:
            rhs = ((rand_fraction(rng) or 1, BasisTerm(rng.randint(0, m_max - 1), alpha, Fraction(0), "exp")),)
        p = ODEProblem(phi, rhs)
        if reduce_resonant(p)[1].k == 0:
            return p


def planted_resonant(rng: random.Random, k_max=3):
    """phi with a root alpha+beta*i of multiplicity k <= k_max, rhs in that group."""
    from divode.diffop import BasisTerm
    from divode.rational import Poly
    from divode.solver import ODEProblem

    a, b, k = Fraction(rng.randint(-2, 2)), Fraction(rng.randint(0, 2)), rng.randint(1, k_max)
    root = Poly([a * a + b * b, -2 * a, 1]) if b else Poly([-a, 1])
    phi = root ** k * Poly([abs(a) + rng.randint(2, 4), 1])  # extra real root -(|a|+2..4) stays off alpha
    if b:
        rhs = ((rand_fraction(rng) or 1, BasisTerm(0, a, b, "sin")),
               (rand_fraction(rng), BasisTerm(0, a, b, "cos")))
    else:
        rhs = ((rand_fraction(rng) or 1, BasisTerm(0, a, b, "exp")),)
    return ODEProblem(phi, rhs), k


# acceptance criteria summary, filled in by tests/test_acceptance.py
CRITERIA: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA):
        ok, label = CRITERIA[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key:>2}: {label}")
