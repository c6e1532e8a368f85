"""Four-parameter orthogonal family on the unit triangle.

P(n, k; a, b, c, d) is built from two shifted Jacobi factors: a degree
(n-k) factor in x with leading parameter 2k+b+c+d+1, and a degree-k factor
in t = y/(1-x) multiplied by (1-x)^k so the substitution expands to a
polynomial.  The family is orthogonal on {x, y > 0, x + y < 1} against
x^a y^b (1-x-y)^c (1-x)^d.

The module carries the twenty-four M ladder operators, their sparse
recurrence and second-order composition tables, the three second-order
differential equations satisfied by the family, the monic solution of the
third equation, and an independent classical (d = 0) construction used as
a reduction cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .operators import (
    NOT_APPLICABLE,
    DiffOperator,
    SparseRelation,
    VerificationReport,
    report_equality,
)
from .ratpoly import MPoly, ONE, ONE_MINUS_X, ONE_MINUS_XY, X, Y, ZERO
from .special import factorial, gamma_ratio
from .jacobi1d import h_ratio, shifted_jacobi_raw


@dataclass(frozen=True)
class TriangleParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if min(self.a, self.b, self.c, self.d) <= -1:
            raise ValueError("parameters must exceed -1")

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class TriIndex:
    n: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"index must satisfy 0 <= k <= n, got {self}")

    def as_tuple(self):
        return (self.n, self.k)


def _params4(p) -> Tuple[Fraction, ...]:
    if isinstance(p, TriangleParams):
        return p.as_tuple()
    return tuple(Fraction(v) for v in p)


def _index2(idx) -> Tuple[int, int]:
    if isinstance(idx, TriIndex):
        return idx.as_tuple()
    n, k = idx
    return (int(n), int(k))


def lift_univariate(q: MPoly, num: MPoly, cof: MPoly, power: int) -> MPoly:
    """Expand cof^power * q(num/cof) for a degree <= power polynomial q in x.

    Writing q = sum_j q_j x^j, the result is sum_j q_j num^j cof^(power-j),
    which is how the inner Jacobi factors of the triangle and tetrahedron
    families become honest polynomials.
    """
    out = ZERO
    for j in range(q.degree("x") + 1):
        qj = q.coeff(j, 0, 0)
        if qj == 0:
            continue
        out = out + (num**j * cof ** (power - j)).scale(qj)
    return out


@lru_cache(maxsize=None)
def triangle_poly_raw(n, k, a, b, c, d) -> MPoly:
    if n < 0 or k < 0 or k > n:
        return ZERO
    fx = shifted_jacobi_raw(n - k, 2 * k + b + c + d + 1, a)
    fy = lift_univariate(shifted_jacobi_raw(k, c, b), Y, ONE_MINUS_X, k)
    return fx * fy


def triangle_poly(idx, p) -> MPoly:
    n, k = _index2(idx)
    return triangle_poly_raw(n, k, *_params4(p))


def triangle_norm_ratio(idx, p) -> Fraction:
    """Squared-norm ratio against the (0, 0) member, exactly.

    The weighted square integral factorizes into two interval norms, so the
    ratio is h_{n-k}^{(2k+b+c+d+1, a)} h_k^{(c, b)} over the degree-(0,0)
    product, every gamma pair having an integer offset.
    """
    n, k = _index2(idx)
    a, b, c, d = _params4(p)
    rx = h_ratio(n - k, 2 * k + b + c + d + 1, a, b + c + d + 1)
    ry = h_ratio(k, c, b, c)
    return rx * ry


@lru_cache(maxsize=None)
def classical_triangle_poly_raw(n, k, a, b, c) -> MPoly:
    """Independent d = 0 construction via the classical recurrence.

    Builds each univariate Jacobi factor by the classical three-term
    recurrence in t and substitutes t = 2x - 1, avoiding the closed-form
    path used by `triangle_poly`.
    """
    if n < 0 or k < 0 or k > n:
        return ZERO
    fx = classical_jacobi_shifted(n - k, 2 * k + b + c + 1, a)
    fy = lift_univariate(classical_jacobi_shifted(k, c, b), Y, ONE_MINUS_X, k)
    return fx * fy


def classical_jacobi_shifted(m: int, big_a: Fraction, big_b: Fraction) -> MPoly:
    """Classical Jacobi polynomial by three-term recurrence, mapped to (0,1)."""
    big_a = Fraction(big_a)
    big_b = Fraction(big_b)
    t = X.scale(2) - 1
    prev = ONE
    if m == 0:
        return prev
    cur = t.scale(Fraction(big_a + big_b + 2, 2)) + Fraction(big_a - big_b, 2)
    for j in range(1, m):
        s = 2 * j + big_a + big_b
        a1 = 2 * (j + 1) * (j + big_a + big_b + 1) * s
        a2 = (s + 1) * (big_a**2 - big_b**2)
        a3 = s * (s + 1) * (s + 2)
        a4 = 2 * (j + big_a) * (j + big_b) * (s + 2)
        nxt = (t.scale(a3) + a2) * cur - prev.scale(a4)
        prev, cur = cur, nxt.scale(Fraction(1, a1))
    return cur


def verify_d0_reduction(idx, abc) -> VerificationReport:
    """d = 0 member equals the classical construction, exactly."""
    n, k = _index2(idx)
    a, b, c = (Fraction(v) for v in abc)
    lhs = triangle_poly_raw(n, k, a, b, c, Fraction(0))
    rhs = classical_triangle_poly_raw(n, k, a, b, c)
    return report_equality("reduction.d0", (n, k), (a, b, c), lhs, rhs)


# ---------------------------------------------------------------------------
# The twenty-four M operators.  Rational-function coefficients are stored
# as polynomial numerators over the single common denominator `denom`.
# ---------------------------------------------------------------------------

M_IDS = (
    "M01", "M02", "M03", "M04", "M05", "M06",
    "M01p", "M02p", "M03p", "M04p", "M05p", "M06p",
    "M10", "M20", "M30", "M40", "M50", "M60",
    "M10p", "M20p", "M30p", "M40p", "M50p", "M60p",
)

_Y1XY = Y * ONE_MINUS_XY
_X1X = X * ONE_MINUS_X
_XY = X * Y


def m_operator(op: str, idx, p) -> DiffOperator:
    n, k = _index2(idx)
    a, b, c, d = _params4(p)
    cst = MPoly.const
    if op == "M01":
        return DiffOperator(c0=ZERO, cy=ONE)
    if op == "M02":
        return DiffOperator(c0=cst(k + b + c + 1), cy=Y)
    if op == "M03":
        return DiffOperator(c0=cst(k + b + c + 1), cy=-ONE_MINUS_XY)
    if op == "M04":
        return DiffOperator(c0=Y.scale(c) - ONE_MINUS_XY.scale(b + k + 1), cy=-_Y1XY)
    if op == "M05":
        return DiffOperator(c0=Y.scale(c + k + 1) - ONE_MINUS_XY.scale(b), cy=-_Y1XY)
    if op == "M06":
        return DiffOperator(c0=cst(b), cy=Y)
    if op == "M01p":
        return DiffOperator(c0=Y.scale(c) - ONE_MINUS_XY.scale(b), cy=-_Y1XY)
    if op == "M02p":
        return DiffOperator(
            c0=ONE_MINUS_X.scale(c + k) - Y.scale(k), cy=-_Y1XY, denom=ONE_MINUS_X
        )
    if op == "M03p":
        return DiffOperator(
            c0=ONE_MINUS_X.scale(b) + Y.scale(k), cy=_Y1XY, denom=ONE_MINUS_X
        )
    if op == "M04p":
        return DiffOperator(c0=cst(-k), cy=Y, denom=ONE_MINUS_X)
    if op == "M05p":
        return DiffOperator(c0=cst(k), cy=ONE_MINUS_XY, denom=ONE_MINUS_X)
    if op == "M06p":
        return DiffOperator(c0=cst(c), cy=-ONE_MINUS_XY)
    if op == "M10":
        return DiffOperator(c0=cst(k), cx=ONE_MINUS_X, cy=-Y, denom=ONE_MINUS_X)
    if op == "M10p":
        return DiffOperator(
            c0=X.scale(k + a + b + c + d + 1) - cst(a), cx=-_X1X, cy=_XY
        )
    if op == "M20":
        return DiffOperator(
            c0=ONE_MINUS_X.scale(n + k + a + b + c + d + 2) + X.scale(k),
            cx=_X1X,
            cy=-_XY,
            denom=ONE_MINUS_X,
        )
    if op == "M20p":
        return DiffOperator(
            c0=cst(n + k + b + c + d + 1) - X.scale(n), cx=-_X1X, cy=_XY
        )
    if op == "M30":
        return DiffOperator(c0=cst(n + a + b + c + d + 2), cx=-ONE_MINUS_X, cy=Y)
    if op == "M30p":
        return DiffOperator(c0=cst(a) + X.scale(n), cx=_X1X, cy=-_XY)
    if op == "M40":
        return DiffOperator(
            c0=X.scale(n + a + b + c + d + 2) - cst(a + n - k + 1), cx=-_X1X, cy=_XY
        )
    if op == "M40p":
        return DiffOperator(
            c0=cst(k) - ONE_MINUS_X.scale(n), cx=_X1X, cy=-_XY, denom=ONE_MINUS_X
        )
    if op == "M50":
        return DiffOperator(
            c0=X.scale(n + a + b + c + d + 2) - cst(a), cx=-_X1X, cy=_XY
        )
    if op == "M50p":
        return DiffOperator(c0=cst(n), cx=ONE_MINUS_X, cy=-Y)
    if op == "M60":
        return DiffOperator(
            c0=ONE_MINUS_X.scale(a) + X.scale(k), cx=_X1X, cy=-_XY, denom=ONE_MINUS_X
        )
    if op == "M60p":
        return DiffOperator(c0=cst(k + b + c + d + 1), cx=-ONE_MINUS_X, cy=Y)
    raise KeyError(f"unknown M operator {op!r}")


def _rel(op, dn, dk, da, db, dc, dd, scale):
    return SparseRelation(op, (dn, dk), (da, db, dc, dd), scale)


SPARSE_2D = {
    "M01": _rel("M01", -1, -1, 0, +1, +1, 0, lambda n, k, a, b, c, d: k + b + c + 1),
    "M01p": _rel("M01p", +1, +1, 0, -1, -1, 0, lambda n, k, a, b, c, d: k + 1),
    "M02": _rel("M02", 0, 0, 0, 0, +1, -1, lambda n, k, a, b, c, d: k + b + c + 1),
    "M02p": _rel("M02p", 0, 0, 0, 0, -1, +1, lambda n, k, a, b, c, d: k + c),
    "M03": _rel("M03", 0, 0, 0, +1, 0, -1, lambda n, k, a, b, c, d: k + b + c + 1),
    "M03p": _rel("M03p", 0, 0, 0, -1, 0, +1, lambda n, k, a, b, c, d: k + b),
    "M04": _rel("M04", +1, +1, 0, 0, -1, -1, lambda n, k, a, b, c, d: k + 1),
    "M04p": _rel("M04p", -1, -1, 0, 0, +1, +1, lambda n, k, a, b, c, d: k + b),
    "M05": _rel("M05", +1, +1, 0, -1, 0, -1, lambda n, k, a, b, c, d: k + 1),
    "M05p": _rel("M05p", -1, -1, 0, +1, 0, +1, lambda n, k, a, b, c, d: k + c),
    "M06": _rel("M06", 0, 0, 0, -1, +1, 0, lambda n, k, a, b, c, d: k + b),
    "M06p": _rel("M06p", 0, 0, 0, +1, -1, 0, lambda n, k, a, b, c, d: k + c),
    "M10": _rel("M10", -1, 0, +1, 0, 0, +1, lambda n, k, a, b, c, d: n + k + a + b + c + d + 2),
    "M10p": _rel("M10p", +1, 0, -1, 0, 0, -1, lambda n, k, a, b, c, d: n - k + 1),
    "M20": _rel("M20", 0, 0, 0, 0, 0, +1, lambda n, k, a, b, c, d: n + k + a + b + c + d + 2),
    "M20p": _rel("M20p", 0, 0, 0, 0, 0, -1, lambda n, k, a, b, c, d: n + k + b + c + d + 1),
    "M30": _rel("M30", 0, 0, +1, 0, 0, 0, lambda n, k, a, b, c, d: n + k + a + b + c + d + 2),
    "M30p": _rel("M30p", 0, 0, -1, 0, 0, 0, lambda n, k, a, b, c, d: n - k + a),
    "M40": _rel("M40", +1, 0, 0, 0, 0, -1, lambda n, k, a, b, c, d: n - k + 1),
    "M40p": _rel("M40p", -1, 0, 0, 0, 0, +1, lambda n, k, a, b, c, d: n - k + a),
    "M50": _rel("M50", +1, 0, -1, 0, 0, 0, lambda n, k, a, b, c, d: n - k + 1),
    "M50p": _rel("M50p", -1, 0, +1, 0, 0, 0, lambda n, k, a, b, c, d: n + k + b + c + d + 1),
    "M60": _rel("M60", 0, 0, -1, 0, 0, +1, lambda n, k, a, b, c, d: n - k + a),
    "M60p": _rel("M60p", 0, 0, +1, 0, 0, -1, lambda n, k, a, b, c, d: n + k + b + c + d + 1),
}


def _valid2(n, k):
    return 0 <= k <= n


def verify_m_relation(op: str, idx, p) -> VerificationReport:
    n, k = _index2(idx)
    params = _params4(p)
    rel = SPARSE_2D[op]
    u = triangle_poly_raw(n, k, *params)
    lhs = m_operator(op, (n, k), params).apply(u)
    (n2, k2), params2 = rel.shifted((n, k), params)
    if not _valid2(n2, k2):
        return report_equality(op, (n, k), params, lhs, ZERO, applicable=False)
    rhs = triangle_poly_raw(n2, k2, *params2).scale(rel.scale(n, k, *params))
    return report_equality(op, (n, k), params, lhs, rhs)


@dataclass(frozen=True)
class SecondOrder2D:
    outer: str
    inner: str
    dn: int
    dk: int
    dparams: Tuple[int, int, int, int]
    eig: "callable"


def _so(outer, inner, dn, dk, dparams, eig):
    return SecondOrder2D(outer, inner, dn, dk, dparams, eig)


SECOND_ORDER_2D = {
    "M01p.M01": _so("M01p", "M01", 0, 0, (0, -1, -1, 0), lambda n, k, a, b, c, d: k * (k + b + c - 1)),
    "M01.M01p": _so("M01", "M01p", 0, 0, (0, 0, 0, 0), lambda n, k, a, b, c, d: (k + 1) * (k + b + c)),
    "M02p.M02": _so("M02p", "M02", 0, 0, (0, +1, -1, 0), lambda n, k, a, b, c, d: (k + c) * (k + b + c + 1)),
    "M02.M02p": _so("M02", "M02p", 0, 0, (0, +1, 0, 0), lambda n, k, a, b, c, d: (k + c) * (k + b + c + 1)),
    "M03p.M03": _so("M03p", "M03", 0, 0, (0, -1, +1, 0), lambda n, k, a, b, c, d: (k + b) * (k + b + c + 1)),
    "M03.M03p": _so("M03", "M03p", 0, 0, (0, 0, +1, 0), lambda n, k, a, b, c, d: (k + b) * (k + b + c + 1)),
    "M04p.M04": _so("M04p", "M04", 0, -1, (0, +1, 0, 0), lambda n, k, a, b, c, d: k * (k + b + 1)),
    "M04.M04p": _so("M04", "M04p", 0, 0, (0, +1, -1, 0), lambda n, k, a, b, c, d: k * (k + b + 1)),
    "M05p.M05": _so("M05p", "M05", 0, -1, (0, 0, +1, 0), lambda n, k, a, b, c, d: k * (k + c + 1)),
    "M05.M05p": _so("M05", "M05p", 0, 0, (0, -1, +1, 0), lambda n, k, a, b, c, d: k * (k + c + 1)),
    "M06p.M06": _so("M06p", "M06", 0, 0, (0, 0, -1, 0), lambda n, k, a, b, c, d: (k + b) * (k + c)),
    "M06.M06p": _so("M06", "M06p", 0, 0, (0, -1, 0, 0), lambda n, k, a, b, c, d: (k + b) * (k + c)),
    "M10p.M10": _so("M10p", "M10", 0, 0, (-1, 0, 0, -1), lambda n, k, a, b, c, d: (n - k) * (n + k + a + b + c + d)),
    "M10.M10p": _so("M10", "M10p", 0, 0, (0, 0, 0, 0), lambda n, k, a, b, c, d: (n - k + 1) * (n + k + a + b + c + d + 1)),
    "M20p.M20": _so("M20p", "M20", 0, 0, (+1, 0, 0, -1), lambda n, k, a, b, c, d: (n + k + a + b + c + d + 2) * (n + k + b + c + d + 1)),
    "M20.M20p": _so("M20", "M20p", 0, 0, (+1, -1, 0, +1), lambda n, k, a, b, c, d: (n + k + a + b + c + d + 2) * (n + k + b + c + d + 1)),
    "M30p.M30": _so("M30p", "M30", 0, 0, (-1, +1, 0, 0), lambda n, k, a, b, c, d: (n + k + a + b + c + d + 2) * (n - k + a)),
    "M30.M30p": _so("M30", "M30p", 0, 0, (0, +1, 0, 0), lambda n, k, a, b, c, d: (n + k + a + b + c + d + 2) * (n - k + a)),
    "M40p.M40": _so("M40p", "M40", -1, 0, (+1, 0, 0, 0), lambda n, k, a, b, c, d: (n - k) * (n - k + a + 1)),
    "M40.M40p": _so("M40", "M40p", 0, 0, (+1, -1, 0, 0), lambda n, k, a, b, c, d: (n - k) * (n - k + a + 1)),
    "M50p.M50": _so("M50p", "M50", -1, 0, (0, +1, 0, 0), lambda n, k, a, b, c, d: (n - k) * (n + k + b + c + d + 2)),
    "M50.M50p": _so("M50", "M50p", 0, 0, (-1, +1, 0, 0), lambda n, k, a, b, c, d: (n - k) * (n + k + b + c + d + 2)),
    "M60p.M60": _so("M60p", "M60", 0, 0, (0, 0, 0, -1), lambda n, k, a, b, c, d: (n - k + a) * (n + k + b + c + d + 1)),
    "M60.M60p": _so("M60", "M60p", 0, 0, (-1, 0, 0, 0), lambda n, k, a, b, c, d: (n - k + a) * (n + k + b + c + d + 1)),
}


def verify_second_order_m(entry_id: str, idx, p) -> VerificationReport:
    """Chain two sparse M relations and check the eigenvalue identity."""
    n, k = _index2(idx)
    params = _params4(p)
    ent = SECOND_ORDER_2D[entry_id]
    n0, k0 = n + ent.dn, k + ent.dk
    params0 = tuple(v + dv for v, dv in zip(params, ent.dparams))
    if not _valid2(n0, k0):
        return VerificationReport(entry_id, (n, k), params, NOT_APPLICABLE)
    eig = ent.eig(n, k, *params)
    u = triangle_poly_raw(n0, k0, *params0)
    inner_rel = SPARSE_2D[ent.inner]
    v = m_operator(ent.inner, (n0, k0), params0).apply(u)
    (n1, k1), params1 = inner_rel.shifted((n0, k0), params0)
    lhs = m_operator(ent.outer, (n1, k1), params1).apply(v)
    detail = None
    if _valid2(n1, k1):
        product = inner_rel.scale(n0, k0, *params0) * SPARSE_2D[ent.outer].scale(
            n1, k1, *params1
        )
        if product != eig:
            detail = f"scale product {product} != tabulated eigenvalue {eig}"
    return report_equality(entry_id, (n, k), params, lhs, u.scale(eig), detail=detail)


# ---------------------------------------------------------------------------
# Second-order differential equations.  Each builder returns the equation
# as (derivative order -> polynomial coefficient) with all rational terms
# cleared by the stated denominator power, so the residual on a family
# member is an exact zero polynomial.
# ---------------------------------------------------------------------------

_DERIVS_2D = ("xx", "xy", "yy", "x", "y", "")


def _pde_coeffs_y_direction(n, k, a, b, c, d):
    # y(1-x-y) u_yy + ((b+1)(1-x) - (b+c+2) y) u_y + k(k+b+c+1) u, cleared by 1.
    return {
        "yy": Y * ONE_MINUS_XY,
        "y": ONE_MINUS_X.scale(b + 1) - Y.scale(b + c + 2),
        "": MPoly.const(k * (k + b + c + 1)),
    }


def _pde_coeffs_full(n, k, a, b, c, d):
    # The full second-order equation; 1/(1-x) terms cleared by (1-x).
    s = a + b + c + d + 3
    lam = n * (n + a + b + c + d + 2)
    return {
        "xx": X * ONE_MINUS_X * ONE_MINUS_X,
        "xy": (X * Y).scale(-2) * ONE_MINUS_X,
        "yy": Y * (ONE - Y) * ONE_MINUS_X,
        "x": (MPoly.const(a + 1) - X.scale(s)) * ONE_MINUS_X,
        "y": (MPoly.const(b + 1) - Y.scale(s)) * ONE_MINUS_X + Y.scale(d),
        "": ONE_MINUS_X.scale(lam) - MPoly.const(k * d),
    }


def _pde_coeffs_x_direction(n, k, a, b, c, d):
    # The difference of the two equations above; 1/(1-x) cleared by (1-x).
    s = a + b + c + d + 3
    lam = n * (n + a + b + c + d + 2)
    return {
        "xx": X * ONE_MINUS_X * ONE_MINUS_X,
        "xy": (X * Y).scale(-2) * ONE_MINUS_X,
        "yy": X * Y * Y,
        "x": (MPoly.const(a + 1) - X.scale(s)) * ONE_MINUS_X,
        "y": -Y * (MPoly.const(a + 1) - X.scale(s)),
        "": ONE_MINUS_X.scale(lam) - MPoly.const(k * (k + b + c + d + 1)),
    }


PDE_2D = {
    "L1": _pde_coeffs_y_direction,
    "L2": _pde_coeffs_full,
    "B1": _pde_coeffs_x_direction,
}


def apply_pde(coeffs: dict, u: MPoly) -> MPoly:
    out = ZERO
    for key, coeff in coeffs.items():
        v = u
        for var in key:
            v = v.diff(var)
        out = out + coeff * v
    return out


def pde_residual(which: str, idx, p, u: MPoly = None) -> MPoly:
    """Cleared residual of one differential equation on a family member."""
    n, k = _index2(idx)
    params = _params4(p)
    if u is None:
        u = triangle_poly_raw(n, k, *params)
    return apply_pde(PDE_2D[which](n, k, *params), u)


def monic_triangle(idx, p) -> MPoly:
    """Monic polynomial solution of the x-direction equation at (n, k).

    The closed form (n-k)! / (a+b+c+d+n+k+2)_(n-k) * y^k * P(n-k) already
    has unit leading coefficient; the result is normalized by its
    x^(n-k) y^k coefficient regardless, so the monic contract survives any
    erratum in the prefactor.
    """
    n, k = _index2(idx)
    a, b, c, d = _params4(p)
    e4 = a + b + c + d
    prefactor = factorial(n - k) * gamma_ratio(e4 + 2 * n + 2, -(n - k))
    poly = (Y**k * shifted_jacobi_raw(n - k, b + c + d + 2 * k + 1, a)).scale(prefactor)
    lead = poly.coeff(n - k, k, 0)
    if lead == 0:
        raise ArithmeticError("vanishing leading coefficient")
    return poly.scale(1 / lead)
