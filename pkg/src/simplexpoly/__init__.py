"""Orthogonal polynomial families on the interval, triangle and unit
tetrahedron, with exact verification of their ladder-operator calculus.

The package is organized bottom-up:

    ratpoly     exact sparse polynomials in (x, y, z) over Fractions
    special     Pochhammer / gamma-ratio / terminating hypergeometric sums
    operators   first-order differential operators, verification reports
    jacobi1d    shifted Jacobi polynomials on (0, 1), 12 ladder relations
    triangle2d  four-parameter triangle family, 24 ladder relations
    simplex3d   six-parameter tetrahedron family, 36 ladder relations,
                differential equations, connections, recurrences
    quadrature  Gauss-Jacobi rules, collapsed simplex rules, Gram matrices
    sweeps      verification sweep harness (used by the CLI and tests)
    cli         `simplexpoly` command-line front end
"""

from .ratpoly import MPoly, NonzeroRemainder, Point
from .special import GammaRatioSpec, PoleHit, gamma_ratio, hyper2f1_terminating, hyper3f2_unit, pochhammer
from .operators import DiffOperator, SparseRelation, VerificationReport, summarize
from .jacobi1d import JacobiParams, shifted_jacobi, norm_ratio, verify_ladder, verify_second_order_1d
from .triangle2d import (
    TriangleParams,
    TriIndex,
    triangle_poly,
    triangle_norm_ratio,
    monic_triangle,
    verify_m_relation,
    verify_second_order_m,
    pde_residual,
)
from .simplex3d import (
    SimplexParams,
    Index3,
    ConnectionExpansion,
    simplex_poly,
    simplex_norm,
    monic_simplex,
    verify_theorem1,
    verify_second_order_3d,
    pde_residual_3d,
    verify_reduction_ab0,
    connect_alpha,
    connect_general,
    three_term_x,
    verify_three_term,
)
from .quadrature import ConvergenceFailure, QuadRule1D, SimplexRule, gauss_jacobi_01, tetra_rule, gram_matrix

__version__ = "0.1.0"
