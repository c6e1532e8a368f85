"""Triangle family: construction, norms, M relations, equations, monic."""

from fractions import Fraction

import pytest

from simplexpoly.ratpoly import MPoly, ONE, ONE_MINUS_X, X, Y
from simplexpoly.triangle2d import (
    M_IDS,
    SECOND_ORDER_2D,
    TriangleParams,
    TriIndex,
    classical_triangle_poly_raw,
    m_operator,
    monic_triangle,
    pde_residual,
    triangle_norm_ratio,
    triangle_poly,
    triangle_poly_raw,
    verify_d0_reduction,
    verify_m_relation,
    verify_second_order_m,
)

from oracles import integrate_triangle, triangle_weighted_mean

F = Fraction

PARAMS_GRID = [
    (F(0), F(0), F(0), F(0)),
    (F(-1, 2), F(0), F(1, 3), F(1)),
    (F(1), F(1, 3), F(0), F(-1, 2)),
    (F(1, 3), F(-1, 2), F(1), F(0)),
]


def indices(max_n):
    return [(n, k) for n in range(max_n + 1) for k in range(n + 1)]


def test_index_validation():
    with pytest.raises(ValueError):
        TriIndex(1, 2)
    with pytest.raises(ValueError):
        TriangleParams(F(-2), F(0), F(0), F(0))


def test_degree_zero():
    assert triangle_poly(TriIndex(0, 0), TriangleParams(F(1, 3), F(0), F(1), F(2))) == ONE


@pytest.mark.parametrize("params", PARAMS_GRID)
def test_degree_one_members(params):
    a, b, c, d = params
    assert triangle_poly((1, 0), params) == X.scale(a + b + c + d + 3) - (a + 1)
    assert triangle_poly((1, 1), params) == Y.scale(b + c + 2) - ONE_MINUS_X.scale(b + 1)


def test_norm_ratio_frozen_values():
    zeros = (F(0),) * 4
    assert triangle_norm_ratio((0, 0), zeros) == 1
    assert triangle_norm_ratio((1, 1), zeros) == F(1, 6)
    assert triangle_norm_ratio((1, 0), zeros) == F(1, 2)


def test_norm_ratio_against_exact_integration():
    """Unweighted case: direct factorial-formula integration."""
    zeros = (F(0),) * 4
    mass = integrate_triangle(ONE)
    for idx in indices(4):
        p = triangle_poly_raw(*idx, *zeros)
        assert integrate_triangle(p * p) / mass == triangle_norm_ratio(idx, zeros)


def test_norm_ratio_against_weighted_moments():
    """Rational parameters via exact collapsed moments."""
    for params in PARAMS_GRID:
        for idx in indices(3):
            p = triangle_poly_raw(*idx, *params)
            assert triangle_weighted_mean(p * p, params) == triangle_norm_ratio(
                idx, params
            )


def test_orthogonality_of_distinct_members():
    params = PARAMS_GRID[1]
    members = [triangle_poly_raw(*idx, *params) for idx in indices(3)]
    for i, p in enumerate(members):
        for q in members[:i]:
            assert triangle_weighted_mean(p * q, params) == 0


def test_operator_descriptors():
    a, b, c, d = F(1, 3), F(1), F(-1, 2), F(2)
    op = m_operator("M01", (3, 2), (a, b, c, d))
    assert op.cy == ONE and op.c0.is_zero
    op = m_operator("M06", (3, 2), (a, b, c, d))
    assert op.c0 == MPoly.const(b) and op.cy == Y
    op = m_operator("M40p", (3, 2), (a, b, c, d))
    assert op.denom == ONE_MINUS_X
    assert op.c0 == MPoly.const(2) - ONE_MINUS_X.scale(3)
    assert op.cx == X * ONE_MINUS_X and op.cy == -(X * Y)


def test_sparse_spot_examples():
    assert verify_m_relation("M01", (1, 1), PARAMS_GRID[1]).status == "pass"
    assert verify_m_relation("M30p", (0, 0), PARAMS_GRID[2]).status == "pass"
    assert verify_m_relation("M20", (0, 0), PARAMS_GRID[3]).status == "pass"


def test_second_order_spot_examples():
    assert verify_second_order_m("M01.M01p", (0, 0), PARAMS_GRID[1]).status == "pass"
    assert verify_second_order_m("M10.M10p", (0, 0), PARAMS_GRID[2]).status == "pass"
    assert verify_second_order_m("M60p.M60", (1, 0), PARAMS_GRID[3]).status == "pass"


def test_table_sizes():
    assert len(M_IDS) == 24
    assert len(SECOND_ORDER_2D) == 24


@pytest.mark.parametrize("params", PARAMS_GRID)
def test_all_relations_small_sweep(params):
    for idx in indices(4):
        for op in M_IDS:
            assert verify_m_relation(op, idx, params).ok, (op, idx)
        for key in SECOND_ORDER_2D:
            assert verify_second_order_m(key, idx, params).ok, (key, idx)


@pytest.mark.parametrize("params", PARAMS_GRID)
def test_pde_residuals_vanish(params):
    for idx in indices(4):
        for which in ("L1", "L2", "B1"):
            assert pde_residual(which, idx, params).is_zero, (which, idx)


def test_pde_nonmember_leaves_residual():
    res = pde_residual("L1", (2, 1), PARAMS_GRID[0], u=X * Y * Y)
    assert not res.is_zero


def test_d0_reduction():
    for params in PARAMS_GRID:
        for idx in indices(4):
            assert verify_d0_reduction(idx, params[:3]).status == "pass"


def test_classical_construction_differs_from_generic_path():
    # Same polynomials, produced by the recurrence route.
    p = classical_triangle_poly_raw(3, 1, F(1, 3), F(0), F(1))
    q = triangle_poly_raw(3, 1, F(1, 3), F(0), F(1), F(0))
    assert p == q


def test_monic_frozen_examples():
    zeros = (F(0),) * 4
    assert monic_triangle((0, 0), zeros) == ONE
    assert monic_triangle((1, 1), zeros) == Y
    assert monic_triangle((1, 0), zeros) == X - F(1, 3)


@pytest.mark.parametrize("params", PARAMS_GRID)
def test_monic_satisfies_equation_with_unit_lead(params):
    for idx in indices(5):
        n, k = idx
        m = monic_triangle(idx, params)
        assert m.coeff(n - k, k, 0) == 1
        assert pde_residual("B1", idx, params, m).is_zero


def test_monic_prefactor_is_already_unit():
    """The closed-form prefactor itself produces a unit leading
    coefficient, so the normalization guard is a no-op."""
    from simplexpoly.jacobi1d import shifted_jacobi_raw
    from simplexpoly.special import factorial, gamma_ratio

    for params in PARAMS_GRID:
        a, b, c, d = params
        for n, k in indices(4):
            pre = factorial(n - k) * gamma_ratio(a + b + c + d + 2 * n + 2, -(n - k))
            raw = (Y**k * shifted_jacobi_raw(n - k, b + c + d + 2 * k + 1, a)).scale(pre)
            assert raw.coeff(n - k, k, 0) == 1
