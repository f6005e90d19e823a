"""Print the worked examples: series, Padé reconstruction, Euler sums and both ODE problems.

    python3 scripts/worked_examples.py
"""

from fractions import Fraction

from divode.diffop import BasisTerm, estimate_spectral_radius, matrix_operator
from divode.pade import pade_determinants, pade_solve
from divode.rational import Poly, fmt, ratfun_normalize, render_poly
from divode.series import convergence_radius, euler_sum, maclaurin_coeffs
from divode.solver import ODEProblem, solve_direct, solve_divergent


def show_matrix(name, a):
    print(f"  {name}:")
    for row in a:
        print("    [" + ", ".join(f"{fmt(Fraction(x)):>5}" for x in row) + "]")


def term(power, alpha, beta, kind):
    return BasisTerm(power, Fraction(alpha), Fraction(beta), kind)


def series_and_pade():
    R = ratfun_normalize(Poly([1, 1, 4]), Poly([1, -2, 2, 4, 4]))
    c = maclaurin_coeffs(R, 8)
    print("Maclaurin coefficients of", R)
    print("  ", ", ".join(fmt(x) for x in c))
    print("  radius of convergence ~", f"{convergence_radius(R):.6f}")
    num, den = pade_determinants(c, 3, 4)
    print("[3/4] determinants:", render_poly(num), "|", render_poly(den))
    print("[3/4] reduced:     ", pade_solve(c, 3, 4))
    print()


def euler_sums():
    print("Euler sums")
    for coeffs, L, M in [([1, -1], 0, 1), ([1, 2], 0, 1),
                         ([1, 3, 8, 6, -20, -96, -208], 2, 4),
                         ([-2, -1, 4, 18, 40, 32, -104], 2, 4)]:
        shown = " + ".join(str(x) for x in coeffs).replace("+ -", "- ")
        print(f"  {shown} + ...  =  {fmt(euler_sum(coeffs, L, M))}")
    print()


def flagship():
    p = ODEProblem(Poly([1, -1, -1]), ((1, term(0, 1, 1, "sin")), (-2, term(0, 1, 1, "cos"))))
    print("(1 - D - D^2) y = e^x sin x - 2 e^x cos x")
    y, rep = solve_direct(p)
    show_matrix("phi(M)", rep.groups[0].operator_matrix)
    print("  direct:   ", y)
    y, rep = solve_divergent(p, truncation=6)
    for i, f in enumerate(rep.component_fractions, 1):
        print(f"  f{i}(t) = {f}")
    print("  values at t=1:", ", ".join(fmt(v) for v in rep.values_at_one))
    print("  divergent:", y)
    print()


def resonant():
    p = ODEProblem(Poly([13, -4, 1]), ((4, term(0, 2, 3, "sin")), (2, term(0, 2, 3, "cos"))))
    print("(D^2 - 4D + 13) y = e^{2x} (4 sin 3x + 2 cos 3x)")
    y, rep = solve_direct(p)
    g = rep.groups[0]
    D = matrix_operator(g.basis).matrix
    print(f"  resonance multiplicity k = {g.k}")
    show_matrix("M", D)
    print(f"  spectral radius of M ~ {estimate_spectral_radius(D):.6f}")
    show_matrix("phi(M)", g.operator_matrix)
    print("  full coordinates:  ", ", ".join(fmt(v) for v in g.full_coords))
    print("  after pruning:     ", y)
    y, rep = solve_divergent(p)
    print(f"  reduced operator, [{rep.L}/{rep.M}] from degree {rep.truncation_degree}:")
    for s in rep.component_series:
        print("    ", render_poly(Poly(s)))
    print("  values at t=1:", ", ".join(fmt(v) for v in rep.values_at_one))
    print("  divergent:", y)


if __name__ == "__main__":
    series_and_pade()
    euler_sums()
    flagship()
    resonant()
