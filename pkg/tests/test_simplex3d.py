"""Tetrahedron family: construction, relations, equations, recurrences."""

from fractions import Fraction

import pytest

from simplexpoly.ratpoly import (
    MPoly,
    ONE,
    ONE_MINUS_X,
    ONE_MINUS_XY,
    ONE_MINUS_XYZ,
    X,
    Y,
    Z,
)
from simplexpoly.simplex3d import (
    DERIVATIVE_IDS,
    MULTIPLICATION_IDS,
    OPERATOR_IDS_3D,
    SECOND_ORDER_3D,
    THEOREM1,
    Index3,
    SimplexParams,
    classical_simplex_poly,
    monic_simplex,
    n_operator,
    o_operator,
    pde_residual_3d,
    simplex_norm,
    simplex_poly,
    simplex_poly_raw,
    three_term_x,
    verify_corollary_derivatives,
    verify_corollary_multiplication,
    verify_corollary_weighted,
    verify_reduction_ab0,
    verify_second_order_3d,
    verify_theorem1,
    verify_three_term,
)

from oracles import integrate_tetra, tetra_weighted_mean

F = Fraction

ZEROS = (F(0),) * 6
PARAMS_GRID = [
    ZEROS,
    (F(1, 3), F(-1, 2), F(1), F(0), F(1, 2), F(2)),
    (F(-1, 2), F(0), F(1, 3), F(1), F(2), F(-1, 2)),
    (F(1), F(1, 3), F(0), F(-1, 2), F(0), F(1)),
]


def indices(max_n):
    return [
        (i, j, k)
        for i in range(max_n + 1)
        for j in range(max_n + 1)
        for k in range(max_n + 1)
        if i + j + k <= max_n
    ]


def test_validation():
    with pytest.raises(ValueError):
        SimplexParams(F(-2), F(0), F(0), F(0), F(0), F(0))
    with pytest.raises(ValueError):
        Index3(1, -1, 0)
    assert SimplexParams(*PARAMS_GRID[1]).e == sum(PARAMS_GRID[1])
    assert Index3(1, 2, 3).n == 6


def test_degree_zero_and_one_members():
    assert simplex_poly(Index3(0, 0, 0), SimplexParams(*ZEROS)) == ONE
    assert simplex_poly((1, 0, 0), ZEROS) == X.scale(4) - 1
    al, be, ga, de, a, b = PARAMS_GRID[1]
    assert simplex_poly((0, 0, 1), PARAMS_GRID[1]) == Z.scale(
        ga + de + 2
    ) - ONE_MINUS_XY.scale(ga + 1)


def test_norm_frozen_values():
    ratio, absolute = simplex_norm((0, 0, 0), ZEROS)
    assert ratio == 1
    assert absolute == pytest.approx(F(1, 6), rel=1e-13)
    ratio, absolute = simplex_norm((1, 0, 0), ZEROS)
    assert absolute == pytest.approx(F(1, 10), rel=1e-13)


def test_norm_against_exact_integration():
    mass = integrate_tetra(ONE)
    assert mass == F(1, 6)
    for idx in indices(3):
        p = simplex_poly_raw(*idx, *ZEROS)
        ratio, absolute = simplex_norm(idx, ZEROS)
        exact = integrate_tetra(p * p)
        assert exact / mass == ratio
        assert absolute == pytest.approx(exact, rel=1e-12)


def test_norm_against_weighted_moments():
    for params in PARAMS_GRID:
        for idx in indices(3):
            p = simplex_poly_raw(*idx, *params)
            ratio, _ = simplex_norm(idx, params)
            assert tetra_weighted_mean(p * p, params) == ratio


def test_orthogonality_of_distinct_members():
    params = PARAMS_GRID[1]
    members = [simplex_poly_raw(*idx, *params) for idx in indices(3)]
    for i, p in enumerate(members):
        for q in members[:i]:
            assert tetra_weighted_mean(p * q, params) == 0


def test_operator_descriptors():
    idx = (2, 1, 3)
    al, be, ga, de, a, b = PARAMS_GRID[1]
    op = o_operator("O10", idx, PARAMS_GRID[1])
    assert op.cz == ONE and op.c0.is_zero
    op = n_operator("N06", idx, PARAMS_GRID[1])
    assert op.denom == ONE_MINUS_XY
    assert op.c0 == ONE_MINUS_XY.scale(be) + Y.scale(3)
    assert op.cy == Y * ONE_MINUS_XY and op.cz == -(Y * Z)
    op = o_operator("O60p", idx, PARAMS_GRID[1])
    assert op.c0 == MPoly.const(de) and op.cz == -ONE_MINUS_XYZ


def test_theorem1_spot_examples():
    assert verify_theorem1("O10", (0, 0, 1), PARAMS_GRID[1]).status == "pass"
    assert verify_theorem1("N30p", (0, 0, 0), PARAMS_GRID[1]).status == "pass"
    assert verify_theorem1("N20", (0, 0, 0), PARAMS_GRID[2]).status == "pass"


def test_second_order_spot_examples():
    assert verify_second_order_3d("N01.N01p", (0, 0, 0), PARAMS_GRID[1]).status == "pass"
    assert verify_second_order_3d("O10.O10p", (0, 0, 0), PARAMS_GRID[2]).status == "pass"
    assert verify_second_order_3d("N40p.N40", (1, 0, 0), PARAMS_GRID[3]).status == "pass"


def test_table_sizes():
    assert len(OPERATOR_IDS_3D) == 36
    assert len(THEOREM1) == 36
    assert len(SECOND_ORDER_3D) == 36


@pytest.mark.parametrize("params", PARAMS_GRID)
def test_all_relations_small_sweep(params):
    for idx in indices(3):
        for op in OPERATOR_IDS_3D:
            assert verify_theorem1(op, idx, params).ok, (op, idx)
        for key in SECOND_ORDER_3D:
            assert verify_second_order_3d(key, idx, params).ok, (key, idx)


@pytest.mark.parametrize("params", PARAMS_GRID)
def test_pde_residuals_vanish(params):
    for idx in indices(3):
        for which in ("T1", "T2", "T3", "T4"):
            assert pde_residual_3d(which, idx, params).is_zero, (which, idx)


def test_pde_spot_examples():
    assert pde_residual_3d("T3", (0, 0, 1), PARAMS_GRID[1]).is_zero
    assert pde_residual_3d("T1", (0, 0, 0), PARAMS_GRID[2]).is_zero
    assert pde_residual_3d("T4", (1, 0, 0), PARAMS_GRID[3]).is_zero


def test_pde_nonmember_leaves_residual():
    assert not pde_residual_3d("T3", (1, 1, 1), ZEROS, u=X * Y * Z).is_zero


def test_reduction_examples():
    assert simplex_poly((1, 0, 0), ZEROS) == classical_simplex_poly((1, 0, 0), (0, 0, 0, 0))
    for params in PARAMS_GRID:
        for idx in indices(3):
            assert verify_reduction_ab0(idx, params[:4]).status == "pass"


def test_reduced_equation_drift_coefficient():
    """At a = b = 0 the y-drift of the first equation collapses to
    (beta+1) - (alpha+beta+gamma+delta+4) y times the clearing factor."""
    from simplexpoly.simplex3d import _t1_coeffs

    al, be, ga, de = F(1, 3), F(-1, 2), F(1), F(2)
    coeffs = _t1_coeffs(2, 1, 0, al, be, ga, de, F(0), F(0))
    expected = (MPoly.const(be + 1) - Y.scale(al + be + ga + de + 4)) * (
        ONE_MINUS_X * ONE_MINUS_XY
    )
    assert coeffs["y"] == expected


def test_monic_frozen_examples():
    assert monic_simplex((0, 0, 0), ZEROS) == ONE
    assert monic_simplex((0, 1, 1), ZEROS) == Y * Z
    m = monic_simplex((1, 0, 0), PARAMS_GRID[1])
    assert m.coeff(1, 0, 0) == 1
    assert pde_residual_3d("T4", (1, 0, 0), PARAMS_GRID[1], m).is_zero


@pytest.mark.parametrize("params", PARAMS_GRID)
def test_monic_satisfies_equation_with_unit_lead(params):
    for idx in indices(4):
        m = monic_simplex(idx, params)
        assert m.coeff(*idx) == 1
        assert pde_residual_3d("T4", idx, params, m).is_zero


def test_three_term_hand_checked_case():
    ca, cb, cc = three_term_x((0, 0, 0), ZEROS)
    assert (ca, cb, cc) == (F(1, 4), F(1, 4), F(0))
    # x * 1 == 1/4 * (4x - 1) + 1/4
    assert X == simplex_poly_raw(1, 0, 0, *ZEROS).scale(ca) + ONE.scale(cb)


def test_three_term_coefficient_values():
    ca, _, _ = three_term_x((0, 0, 0), ZEROS)
    assert ca == F(1, 4)
    _, cb, _ = three_term_x((1, 0, 0), ZEROS)
    assert cb == F(5, 12)


@pytest.mark.parametrize("params", PARAMS_GRID)
def test_three_term_holds(params):
    for idx in indices(4):
        assert verify_three_term(idx, params).status == "pass"


def test_three_term_evaluation_spot_check():
    """Evaluating both sides at (1, 0, 0) reduces the recurrence to a
    scalar identity between boundary values."""
    params = PARAMS_GRID[1]
    at = (F(1), F(0), F(0))
    for n1 in range(5):
        ca, cb, cc = three_term_x((n1, 0, 0), params)
        lhs = simplex_poly_raw(n1, 0, 0, *params).evaluate(at)  # times x = 1
        rhs = (
            ca * simplex_poly_raw(n1 + 1, 0, 0, *params).evaluate(at)
            + cb * simplex_poly_raw(n1, 0, 0, *params).evaluate(at)
            + cc * simplex_poly_raw(n1 - 1, 0, 0, *params).evaluate(at)
        )
        assert lhs == rhs


def test_three_term_degenerate_parameter_sum_not_applicable():
    degenerate = (F(-1, 2),) * 6  # parameter sum -3 makes a denominator vanish
    report = verify_three_term((0, 0, 0), degenerate)
    assert report.status == "not_applicable"


QUADS = [p[:4] for p in PARAMS_GRID]


@pytest.mark.parametrize("quad", QUADS)
def test_corollary_identities(quad):
    for idx in indices(3):
        for which in DERIVATIVE_IDS:
            assert verify_corollary_derivatives(which, idx, quad).ok, (which, idx)
            assert verify_corollary_weighted(which, idx, quad).ok, (which, idx)
        for which in MULTIPLICATION_IDS:
            assert verify_corollary_multiplication(which, idx, quad).ok, (which, idx)


def test_corollary_spot_examples():
    quad = QUADS[1]
    # pure z-derivative at the first nontrivial index
    assert verify_corollary_derivatives("dz", (0, 0, 1), quad).status == "pass"
    # degree zero: both sides vanish
    assert verify_corollary_derivatives("dx-dy", (0, 0, 0), quad).status == "pass"
    assert verify_corollary_derivatives("dz.dx-dy", (0, 0, 0), quad).status == "pass"
    # weighted z-derivative at the origin member
    assert verify_corollary_weighted("dz", (0, 0, 0), quad).status == "pass"
    assert verify_corollary_weighted("dx-dy", (0, 0, 0), quad).status == "pass"
    # multiplication identities at the origin member
    for which in MULTIPLICATION_IDS:
        assert verify_corollary_multiplication(which, (0, 0, 0), quad).status == "pass"
