"""Particular solutions of linear constant-coefficient ODEs in exact arithmetic.

Both the operator-matrix method and Euler summation of the divergent
operator series (via Padé reconstruction at t = 1) are implemented.
"""

from .diffop import (BasisTerm, FunctionSpaceBasis, MatrixOperator, ResonanceInfo,
                     apply_operator_poly, build_basis, coordinates, estimate_spectral_radius,
                     kernel_basis, matrix_operator, resonance_multiplicity)
from .expr import parse_rhs_expression, render_solution
from .pade import PadeRequest, pade_determinant_oracle, pade_solve
from .rational import (GaussianRational, Poly, RationalFunction, poly_derivative,
                       poly_eval_complex, poly_gcd, ratfun_normalize)
from .series import (SeriesTruncation, cesaro_means, convergence_radius, euler_sum,
                     maclaurin_coeffs)
from .solver import (ODEProblem, ParticularSolution, SolveOptions, SolveReport,
                     prune_kernel, reduce_resonant, solve, solve_direct, solve_divergent,
                     verify_solution)

__version__ = "0.1.0"
