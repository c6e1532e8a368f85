"""Six-parameter orthogonal family on the unit tetrahedron.

P(n1, n2, n3; alpha, beta, gamma, delta, a, b) is a product of three
shifted Jacobi factors: degree n1 in x, degree n2 in y/(1-x) carrying
(1-x)^n2, and degree n3 in z/(1-x-y) carrying (1-x-y)^n3.  The family is
orthogonal on {x, y, z > 0, x+y+z < 1} against

    x^alpha y^beta z^gamma (1-x-y-z)^delta (1-x)^a (1-x-y)^b.

This module carries the thirty-six ladder operators acting along the
three collapsed directions, their sparse recurrence and second-order
composition tables, the four second-order differential equations, the
monic solution, two connection expansions, the three-term recurrence in
x, and the derivative / weighted-derivative / multiplication identities
for the classical (a = b = 0) subfamily.

Throughout, e abbreviates alpha+beta+gamma+delta+a+b and n = n1+n2+n3;
both are recomputed from the shifted values on every parameter step, never
incremented independently.
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
from .ratpoly import (
    MPoly,
    ONE,
    ONE_MINUS_X,
    ONE_MINUS_XY,
    ONE_MINUS_XYZ,
    X,
    Y,
    Z,
    ZERO,
)
from .special import PoleHit, factorial, gamma_ratio, hyper3f2_unit, pochhammer
from .jacobi1d import h_absolute, h_ratio, shifted_jacobi_raw
from .triangle2d import classical_jacobi_shifted, lift_univariate


@dataclass(frozen=True)
class SimplexParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "a", "b"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if min(self.as_tuple()) <= -1:
            raise ValueError("parameters must exceed -1")

    @property
    def e(self) -> Fraction:
        return self.alpha + self.beta + self.gamma + self.delta + self.a + self.b

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma, self.delta, self.a, self.b)


@dataclass(frozen=True)
class Index3:
    n1: int
    n2: int
    n3: int

    def __post_init__(self):
        if min(self.as_tuple()) < 0:
            raise ValueError("index entries must be nonnegative")

    @property
    def n(self) -> int:
        return self.n1 + self.n2 + self.n3

    def as_tuple(self):
        return (self.n1, self.n2, self.n3)


def _params6(p) -> Tuple[Fraction, ...]:
    if isinstance(p, SimplexParams):
        return p.as_tuple()
    return tuple(Fraction(v) for v in p)


def _index3(idx) -> Tuple[int, int, int]:
    if isinstance(idx, Index3):
        return idx.as_tuple()
    n1, n2, n3 = idx
    return (int(n1), int(n2), int(n3))


def _esum(params) -> Fraction:
    return sum(params, Fraction(0))


def _valid3(idx) -> bool:
    return min(idx) >= 0


@lru_cache(maxsize=None)
def _y_factor(n2: int, big_a: Fraction, beta: Fraction) -> MPoly:
    return lift_univariate(shifted_jacobi_raw(n2, big_a, beta), Y, ONE_MINUS_X, n2)


@lru_cache(maxsize=None)
def _z_factor(n3: int, delta: Fraction, gamma: Fraction) -> MPoly:
    return lift_univariate(shifted_jacobi_raw(n3, delta, gamma), Z, ONE_MINUS_XY, n3)


@lru_cache(maxsize=None)
def simplex_poly_raw(n1, n2, n3, alpha, beta, gamma, delta, a, b) -> MPoly:
    if min(n1, n2, n3) < 0:
        return ZERO
    fx = shifted_jacobi_raw(n1, beta + gamma + delta + a + b + 2 * n2 + 2 * n3 + 2, alpha)
    fy = _y_factor(n2, gamma + delta + 2 * n3 + b + 1, beta)
    fz = _z_factor(n3, delta, gamma)
    return fx * fy * fz


def simplex_poly(idx, p) -> MPoly:
    return simplex_poly_raw(*_index3(idx), *_params6(p))


def simplex_norm(idx, p) -> Tuple[Fraction, float]:
    """(exact ratio against the (0,0,0) member, absolute float norm)."""
    n1, n2, n3 = _index3(idx)
    alpha, beta, gamma, delta, a, b = _params6(p)
    a1 = beta + gamma + delta + a + b + 2 * n2 + 2 * n3 + 2
    a2 = gamma + delta + 2 * n3 + b + 1
    ratio = (
        h_ratio(n1, a1, alpha, beta + gamma + delta + a + b + 2)
        * h_ratio(n2, a2, beta, gamma + delta + b + 1)
        * h_ratio(n3, delta, gamma, delta)
    )
    absolute = (
        h_absolute(n1, float(a1), float(alpha))
        * h_absolute(n2, float(a2), float(beta))
        * h_absolute(n3, float(delta), float(gamma))
    )
    return ratio, absolute


@lru_cache(maxsize=None)
def classical_simplex_poly_raw(n1, n2, n3, alpha, beta, gamma, delta) -> MPoly:
    """Independent construction of the four-parameter (a = b = 0) family.

    Uses the classical three-term recurrence for every univariate factor,
    exercising none of the hypergeometric code paths.
    """
    if min(n1, n2, n3) < 0:
        return ZERO
    fx = classical_jacobi_shifted(n1, beta + gamma + delta + 2 * n2 + 2 * n3 + 2, alpha)
    fy = lift_univariate(
        classical_jacobi_shifted(n2, gamma + delta + 2 * n3 + 1, beta), Y, ONE_MINUS_X, n2
    )
    fz = lift_univariate(classical_jacobi_shifted(n3, delta, gamma), Z, ONE_MINUS_XY, n3)
    return fx * fy * fz


def classical_simplex_poly(idx, fourparams) -> MPoly:
    n1, n2, n3 = _index3(idx)
    alpha, beta, gamma, delta = (Fraction(v) for v in fourparams)
    return classical_simplex_poly_raw(n1, n2, n3, alpha, beta, gamma, delta)


# ---------------------------------------------------------------------------
# The thirty-six ladder operators: twelve along y, twelve along x, twelve
# along z.  Coefficients are numerators over the common denominator.
# ---------------------------------------------------------------------------

N0_IDS = ("N01", "N02", "N03", "N04", "N05", "N06",
          "N01p", "N02p", "N03p", "N04p", "N05p", "N06p")
N_IDS = ("N10", "N20", "N30", "N40", "N50", "N60",
         "N10p", "N20p", "N30p", "N40p", "N50p", "N60p")
O_IDS = ("O10", "O20", "O30", "O40", "O50", "O60",
         "O10p", "O20p", "O30p", "O40p", "O50p", "O60p")
OPERATOR_IDS_3D = N0_IDS + N_IDS + O_IDS

_W = ONE_MINUS_XYZ
_Y1XY = Y * ONE_MINUS_XY
_X1X = X * ONE_MINUS_X
_XY = X * Y
_XZ = X * Z
_YZ = Y * Z
_ZW = Z * _W


def n_operator(op: str, idx, p) -> DiffOperator:
    """Operator descriptor for one of the N ladder ids."""
    n1, n2, n3 = _index3(idx)
    alpha, beta, gamma, delta, a, b = _params6(p)
    n = n1 + n2 + n3
    e = alpha + beta + gamma + delta + a + b
    cst = MPoly.const
    if op == "N01":
        return DiffOperator(c0=cst(n3), cy=ONE_MINUS_XY, cz=-Z, denom=ONE_MINUS_XY)
    if op == "N01p":
        return DiffOperator(
            c0=Y.scale(gamma + delta + n3 + b + 1) - ONE_MINUS_XY.scale(beta),
            cy=-_Y1XY, cz=_YZ,
        )
    if op == "N02":
        return DiffOperator(
            c0=ONE_MINUS_XY.scale(n2 + 2 * n3 + beta + gamma + delta + b + 2) + Y.scale(n3),
            cy=_Y1XY, cz=-_YZ, denom=ONE_MINUS_XY,
        )
    if op == "N02p":
        return DiffOperator(
            c0=ONE_MINUS_X.scale(n2 + 2 * n3 + gamma + delta + b + 1) - Y.scale(n2 + n3),
            cy=-_Y1XY, cz=_YZ, denom=ONE_MINUS_X,
        )
    if op == "N03":
        return DiffOperator(
            c0=cst(n2 + n3 + beta + gamma + delta + b + 2), cy=-ONE_MINUS_XY, cz=Z,
        )
    if op == "N03p":
        return DiffOperator(
            c0=ONE_MINUS_X.scale(beta) + Y.scale(n2 + n3),
            cy=_Y1XY, cz=-_YZ, denom=ONE_MINUS_X,
        )
    if op == "N04":
        return DiffOperator(
            c0=Y.scale(n3 + gamma + delta + b + 1) - ONE_MINUS_XY.scale(beta + n2 + 1),
            cy=-_Y1XY, cz=_YZ,
        )
    if op == "N04p":
        return DiffOperator(
            c0=ONE_MINUS_XY.scale(-n2) + Y.scale(n3),
            cy=_Y1XY, cz=-_YZ, denom=ONE_MINUS_X * ONE_MINUS_XY,
        )
    if op == "N05":
        return DiffOperator(
            c0=Y.scale(n2 + n3 + gamma + delta + b + 2) - ONE_MINUS_XY.scale(beta),
            cy=-_Y1XY, cz=_YZ,
        )
    if op == "N05p":
        return DiffOperator(
            c0=cst(n2 + n3), cy=ONE_MINUS_XY, cz=-Z, denom=ONE_MINUS_X,
        )
    if op == "N06":
        return DiffOperator(
            c0=ONE_MINUS_XY.scale(beta) + Y.scale(n3),
            cy=_Y1XY, cz=-_YZ, denom=ONE_MINUS_XY,
        )
    if op == "N06p":
        return DiffOperator(
            c0=cst(gamma + delta + n3 + b + 1), cy=-ONE_MINUS_XY, cz=Z,
        )
    if op == "N10":
        return DiffOperator(
            c0=cst(n2 + n3), cx=ONE_MINUS_X, cy=-Y, cz=-Z, denom=ONE_MINUS_X,
        )
    if op == "N10p":
        return DiffOperator(
            c0=X.scale(n2 + n3 + e + 2) - cst(alpha), cx=-_X1X, cy=_XY, cz=_XZ,
        )
    if op == "N20":
        return DiffOperator(
            c0=ONE_MINUS_X.scale(n + n2 + n3 + e + 3) + X.scale(n2 + n3),
            cx=_X1X, cy=-_XY, cz=-_XZ, denom=ONE_MINUS_X,
        )
    if op == "N20p":
        return DiffOperator(
            c0=cst(n + n2 + n3 + e - alpha + 2) - X.scale(n),
            cx=-_X1X, cy=_XY, cz=_XZ,
        )
    if op == "N30":
        return DiffOperator(c0=cst(n + e + 3), cx=-ONE_MINUS_X, cy=Y, cz=Z)
    if op == "N30p":
        return DiffOperator(c0=cst(alpha) + X.scale(n), cx=_X1X, cy=-_XY, cz=-_XZ)
    if op == "N40":
        return DiffOperator(
            c0=X.scale(n + e + 3) - cst(alpha + n1 + 1), cx=-_X1X, cy=_XY, cz=_XZ,
        )
    if op == "N40p":
        return DiffOperator(
            c0=ONE_MINUS_X.scale(-n) + cst(n2 + n3),
            cx=_X1X, cy=-_XY, cz=-_XZ, denom=ONE_MINUS_X,
        )
    if op == "N50":
        return DiffOperator(
            c0=X.scale(n + e + 3) - cst(alpha), cx=-_X1X, cy=_XY, cz=_XZ,
        )
    if op == "N50p":
        return DiffOperator(c0=cst(n), cx=ONE_MINUS_X, cy=-Y, cz=-Z)
    if op == "N60":
        return DiffOperator(
            c0=ONE_MINUS_X.scale(alpha) + X.scale(n2 + n3),
            cx=_X1X, cy=-_XY, cz=-_XZ, denom=ONE_MINUS_X,
        )
    if op == "N60p":
        return DiffOperator(
            c0=cst(n2 + n3 + e - alpha + 2), cx=-ONE_MINUS_X, cy=Y, cz=Z,
        )
    raise KeyError(f"unknown N operator {op!r}")


def o_operator(op: str, idx, p) -> DiffOperator:
    """Operator descriptor for one of the O ladder ids (z direction)."""
    n1, n2, n3 = _index3(idx)
    alpha, beta, gamma, delta, a, b = _params6(p)
    cst = MPoly.const
    if op == "O10":
        return DiffOperator(c0=ZERO, cz=ONE)
    if op == "O10p":
        return DiffOperator(c0=Z.scale(delta) - _W.scale(gamma), cz=-_ZW)
    if op == "O20":
        return DiffOperator(c0=cst(delta + gamma + n3 + 1), cz=Z)
    if op == "O20p":
        return DiffOperator(
            c0=ONE_MINUS_XY.scale(delta) + _W.scale(n3), cz=-_ZW, denom=ONE_MINUS_XY,
        )
    if op == "O30":
        return DiffOperator(c0=cst(delta + gamma + n3 + 1), cz=-_W)
    if op == "O30p":
        return DiffOperator(
            c0=ONE_MINUS_XY.scale(gamma) + Z.scale(n3), cz=_ZW, denom=ONE_MINUS_XY,
        )
    if op == "O40":
        return DiffOperator(c0=Z.scale(delta) - _W.scale(gamma + n3 + 1), cz=-_ZW)
    if op == "O40p":
        return DiffOperator(c0=cst(-n3), cz=Z, denom=ONE_MINUS_XY)
    if op == "O50":
        return DiffOperator(c0=Z.scale(delta + n3 + 1) - _W.scale(gamma), cz=-_ZW)
    if op == "O50p":
        return DiffOperator(c0=cst(n3), cz=_W, denom=ONE_MINUS_XY)
    if op == "O60":
        return DiffOperator(c0=cst(gamma), cz=Z)
    if op == "O60p":
        return DiffOperator(c0=cst(delta), cz=-_W)
    raise KeyError(f"unknown O operator {op!r}")


def operator_3d(op: str, idx, p) -> DiffOperator:
    return (o_operator if op.startswith("O") else n_operator)(op, idx, p)


def _r3(op, dn, dparams, scale):
    return SparseRelation(op, dn, dparams, scale)


# Scale callables take (n1, n2, n3, alpha, beta, gamma, delta, a, b); the
# helper names keep the table lines close to the source layout.
def _e(al, be, ga, de, a, b):
    return al + be + ga + de + a + b


THEOREM1 = {
    "N01": _r3("N01", (0, -1, 0), (0, +1, 0, 0, 0, +1),
               lambda n1, n2, n3, al, be, ga, de, a, b: n2 + 2 * n3 + be + ga + de + b + 2),
    "N01p": _r3("N01p", (0, +1, 0), (0, -1, 0, 0, 0, -1),
                lambda n1, n2, n3, al, be, ga, de, a, b: n2 + 1),
    "N02": _r3("N02", (0, 0, 0), (0, 0, 0, 0, -1, +1),
               lambda n1, n2, n3, al, be, ga, de, a, b: n2 + 2 * n3 + be + ga + de + b + 2),
    "N02p": _r3("N02p", (0, 0, 0), (0, 0, 0, 0, +1, -1),
                lambda n1, n2, n3, al, be, ga, de, a, b: n2 + 2 * n3 + ga + de + b + 1),
    "N03": _r3("N03", (0, 0, 0), (0, +1, 0, 0, -1, 0),
               lambda n1, n2, n3, al, be, ga, de, a, b: n2 + 2 * n3 + be + ga + de + b + 2),
    "N03p": _r3("N03p", (0, 0, 0), (0, -1, 0, 0, +1, 0),
                lambda n1, n2, n3, al, be, ga, de, a, b: n2 + be),
    "N04": _r3("N04", (0, +1, 0), (0, 0, 0, 0, -1, -1),
               lambda n1, n2, n3, al, be, ga, de, a, b: n2 + 1),
    "N04p": _r3("N04p", (0, -1, 0), (0, 0, 0, 0, +1, +1),
                lambda n1, n2, n3, al, be, ga, de, a, b: n2 + be),
    "N05": _r3("N05", (0, +1, 0), (0, -1, 0, 0, -1, 0),
               lambda n1, n2, n3, al, be, ga, de, a, b: n2 + 1),
    "N05p": _r3("N05p", (0, -1, 0), (0, +1, 0, 0, +1, 0),
                lambda n1, n2, n3, al, be, ga, de, a, b: n2 + 2 * n3 + ga + de + b + 1),
    "N06": _r3("N06", (0, 0, 0), (0, -1, 0, 0, 0, +1),
               lambda n1, n2, n3, al, be, ga, de, a, b: n2 + be),
    "N06p": _r3("N06p", (0, 0, 0), (0, +1, 0, 0, 0, -1),
                lambda n1, n2, n3, al, be, ga, de, a, b: n2 + 2 * n3 + ga + de + b + 1),
    "N10": _r3("N10", (-1, 0, 0), (+1, 0, 0, 0, +1, 0),
               lambda n1, n2, n3, al, be, ga, de, a, b:
               (n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) + 3),
    "N10p": _r3("N10p", (+1, 0, 0), (-1, 0, 0, 0, -1, 0),
                lambda n1, n2, n3, al, be, ga, de, a, b: n1 + 1),
    "N20": _r3("N20", (0, 0, 0), (0, 0, 0, 0, +1, 0),
               lambda n1, n2, n3, al, be, ga, de, a, b:
               (n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) + 3),
    "N20p": _r3("N20p", (0, 0, 0), (0, 0, 0, 0, -1, 0),
                lambda n1, n2, n3, al, be, ga, de, a, b:
                (n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) - al + 2),
    "N30": _r3("N30", (0, 0, 0), (+1, 0, 0, 0, 0, 0),
               lambda n1, n2, n3, al, be, ga, de, a, b:
               (n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) + 3),
    "N30p": _r3("N30p", (0, 0, 0), (-1, 0, 0, 0, 0, 0),
                lambda n1, n2, n3, al, be, ga, de, a, b: n1 + al),
    "N40": _r3("N40", (+1, 0, 0), (0, 0, 0, 0, -1, 0),
               lambda n1, n2, n3, al, be, ga, de, a, b: n1 + 1),
    "N40p": _r3("N40p", (-1, 0, 0), (0, 0, 0, 0, +1, 0),
                lambda n1, n2, n3, al, be, ga, de, a, b: n1 + al),
    "N50": _r3("N50", (+1, 0, 0), (-1, 0, 0, 0, 0, 0),
               lambda n1, n2, n3, al, be, ga, de, a, b: n1 + 1),
    "N50p": _r3("N50p", (-1, 0, 0), (+1, 0, 0, 0, 0, 0),
                lambda n1, n2, n3, al, be, ga, de, a, b:
                (n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) - al + 2),
    "N60": _r3("N60", (0, 0, 0), (-1, 0, 0, 0, +1, 0),
               lambda n1, n2, n3, al, be, ga, de, a, b: n1 + al),
    "N60p": _r3("N60p", (0, 0, 0), (+1, 0, 0, 0, -1, 0),
                lambda n1, n2, n3, al, be, ga, de, a, b:
                (n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) - al + 2),
    "O10": _r3("O10", (0, 0, -1), (0, 0, +1, +1, 0, 0),
               lambda n1, n2, n3, al, be, ga, de, a, b: n3 + de + ga + 1),
    "O10p": _r3("O10p", (0, 0, +1), (0, 0, -1, -1, 0, 0),
                lambda n1, n2, n3, al, be, ga, de, a, b: n3 + 1),
    "O20": _r3("O20", (0, 0, 0), (0, 0, 0, +1, 0, -1),
               lambda n1, n2, n3, al, be, ga, de, a, b: n3 + de + ga + 1),
    "O20p": _r3("O20p", (0, 0, 0), (0, 0, 0, -1, 0, +1),
                lambda n1, n2, n3, al, be, ga, de, a, b: n3 + de),
    "O30": _r3("O30", (0, 0, 0), (0, 0, +1, 0, 0, -1),
               lambda n1, n2, n3, al, be, ga, de, a, b: n3 + de + ga + 1),
    "O30p": _r3("O30p", (0, 0, 0), (0, 0, -1, 0, 0, +1),
                lambda n1, n2, n3, al, be, ga, de, a, b: n3 + ga),
    "O40": _r3("O40", (0, 0, +1), (0, 0, 0, -1, 0, -1),
               lambda n1, n2, n3, al, be, ga, de, a, b: n3 + 1),
    "O40p": _r3("O40p", (0, 0, -1), (0, 0, 0, +1, 0, +1),
                lambda n1, n2, n3, al, be, ga, de, a, b: n3 + ga),
    "O50": _r3("O50", (0, 0, +1), (0, 0, -1, 0, 0, -1),
               lambda n1, n2, n3, al, be, ga, de, a, b: n3 + 1),
    "O50p": _r3("O50p", (0, 0, -1), (0, 0, +1, 0, 0, +1),
                lambda n1, n2, n3, al, be, ga, de, a, b: n3 + de),
    "O60": _r3("O60", (0, 0, 0), (0, 0, -1, +1, 0, 0),
               lambda n1, n2, n3, al, be, ga, de, a, b: n3 + ga),
    "O60p": _r3("O60p", (0, 0, 0), (0, 0, +1, -1, 0, 0),
                lambda n1, n2, n3, al, be, ga, de, a, b: n3 + de),
}


def verify_theorem1(op: str, idx, p) -> VerificationReport:
    """One sparse recurrence line as an exact polynomial identity."""
    idx = _index3(idx)
    params = _params6(p)
    rel = THEOREM1[op]
    u = simplex_poly_raw(*idx, *params)
    lhs = operator_3d(op, idx, params).apply(u)
    idx2, params2 = rel.shifted(idx, params)
    if not _valid3(idx2):
        return report_equality(op, idx, params, lhs, ZERO, applicable=False)
    rhs = simplex_poly_raw(*idx2, *params2).scale(rel.scale(*idx, *params))
    return report_equality(op, idx, params, lhs, rhs)


@dataclass(frozen=True)
class SecondOrder3D:
    outer: str
    inner: str
    didx: Tuple[int, int, int]
    dparams: Tuple[int, int, int, int, int, int]
    eig: "callable"


def _so3(outer, inner, didx, dparams, eig):
    return SecondOrder3D(outer, inner, didx, dparams, eig)


SECOND_ORDER_3D = {
    # y-direction pairs
    "N01p.N01": _so3("N01p", "N01", (0, 0, 0), (0, -1, 0, 0, 0, -1),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     n2 * (n2 + 2 * n3 + be + ga + de + b)),
    "N01.N01p": _so3("N01", "N01p", (0, 0, 0), (0, 0, 0, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n2 + 1) * (n2 + 2 * n3 + be + ga + de + b + 1)),
    "N02p.N02": _so3("N02p", "N02", (0, 0, 0), (0, +1, 0, 0, 0, -1),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n2 + 2 * n3 + be + ga + de + b + 2) * (n2 + 2 * n3 + ga + de + b + 1)),
    "N02.N02p": _so3("N02", "N02p", (0, 0, 0), (0, +1, 0, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n2 + 2 * n3 + be + ga + de + b + 2) * (n2 + 2 * n3 + ga + de + b + 1)),
    "N03p.N03": _so3("N03p", "N03", (0, 0, 0), (0, -1, 0, 0, 0, +1),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n2 + be) * (n2 + 2 * n3 + be + ga + de + b + 2)),
    "N03.N03p": _so3("N03", "N03p", (0, 0, 0), (0, 0, 0, 0, 0, +1),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n2 + be) * (n2 + 2 * n3 + be + ga + de + b + 2)),
    "N04p.N04": _so3("N04p", "N04", (0, -1, 0), (0, +1, 0, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b: n2 * (n2 + be + 1)),
    "N04.N04p": _so3("N04", "N04p", (0, 0, 0), (0, +1, 0, 0, 0, -1),
                     lambda n1, n2, n3, al, be, ga, de, a, b: n2 * (n2 + be + 1)),
    "N05p.N05": _so3("N05p", "N05", (0, -1, 0), (0, 0, 0, 0, 0, +1),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     n2 * (n2 + 2 * n3 + ga + de + b + 2)),
    "N05.N05p": _so3("N05", "N05p", (0, 0, 0), (0, -1, 0, 0, 0, +1),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     n2 * (n2 + 2 * n3 + ga + de + b + 2)),
    "N06p.N06": _so3("N06p", "N06", (0, 0, 0), (0, 0, 0, 0, 0, -1),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n2 + be) * (n2 + 2 * n3 + ga + de + b + 1)),
    "N06.N06p": _so3("N06", "N06p", (0, 0, 0), (0, -1, 0, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n2 + be) * (n2 + 2 * n3 + ga + de + b + 1)),
    # x-direction pairs
    "N10p.N10": _so3("N10p", "N10", (0, 0, 0), (-1, 0, 0, 0, 0, -1),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     n1 * ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) + 1)),
    "N10.N10p": _so3("N10", "N10p", (0, 0, 0), (0, 0, 0, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n1 + 1) * ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) + 2)),
    "N20p.N20": _so3("N20p", "N20", (0, 0, 0), (+1, 0, 0, 0, 0, -1),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) + 3)
                     * ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) - al + 2)),
    "N20.N20p": _so3("N20", "N20p", (0, 0, 0), (+1, 0, 0, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) + 3)
                     * ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) - al + 2)),
    "N30p.N30": _so3("N30p", "N30", (0, 0, 0), (-1, 0, 0, 0, +1, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n1 + al) * ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) + 3)),
    "N30.N30p": _so3("N30", "N30p", (0, 0, 0), (0, 0, 0, 0, +1, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n1 + al) * ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) + 3)),
    "N40p.N40": _so3("N40p", "N40", (-1, 0, 0), (+1, 0, 0, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b: n1 * (n1 + al + 1)),
    "N40.N40p": _so3("N40", "N40p", (0, 0, 0), (+1, 0, 0, 0, 0, -1),
                     lambda n1, n2, n3, al, be, ga, de, a, b: n1 * (n1 + al + 1)),
    "N50p.N50": _so3("N50p", "N50", (-1, 0, 0), (0, 0, 0, 0, +1, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     n1 * ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) - al + 3)),
    "N50.N50p": _so3("N50", "N50p", (0, 0, 0), (-1, 0, 0, 0, +1, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     n1 * ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) - al + 3)),
    "N60p.N60": _so3("N60p", "N60", (0, 0, 0), (0, 0, 0, 0, 0, -1),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n1 + al) * ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) - al + 2)),
    "N60.N60p": _so3("N60", "N60p", (0, 0, 0), (-1, 0, 0, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n1 + al) * ((n1 + n2 + n3) + n2 + n3 + _e(al, be, ga, de, a, b) - al + 2)),
    # z-direction pairs
    "O10p.O10": _so3("O10p", "O10", (0, 0, 0), (0, 0, -1, -1, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b: n3 * (n3 + ga + de - 1)),
    "O10.O10p": _so3("O10", "O10p", (0, 0, 0), (0, 0, 0, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b: (n3 + 1) * (n3 + ga + de)),
    "O20p.O20": _so3("O20p", "O20", (0, 0, 0), (0, 0, +1, -1, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n3 + de) * (n3 + ga + de + 1)),
    "O20.O20p": _so3("O20", "O20p", (0, 0, 0), (0, 0, +1, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n3 + de) * (n3 + ga + de + 1)),
    "O30p.O30": _so3("O30p", "O30", (0, 0, 0), (0, 0, -1, +1, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n3 + ga) * (n3 + ga + de + 1)),
    "O30.O30p": _so3("O30", "O30p", (0, 0, 0), (0, 0, 0, +1, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b:
                     (n3 + ga) * (n3 + ga + de + 1)),
    "O40p.O40": _so3("O40p", "O40", (0, 0, -1), (0, 0, +1, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b: n3 * (n3 + ga + 1)),
    "O40.O40p": _so3("O40", "O40p", (0, 0, 0), (0, 0, +1, -1, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b: n3 * (n3 + ga + 1)),
    "O50p.O50": _so3("O50p", "O50", (0, 0, -1), (0, 0, 0, +1, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b: n3 * (n3 + de + 1)),
    "O50.O50p": _so3("O50", "O50p", (0, 0, 0), (0, 0, -1, +1, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b: n3 * (n3 + de + 1)),
    "O60p.O60": _so3("O60p", "O60", (0, 0, 0), (0, 0, 0, -1, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b: (n3 + ga) * (n3 + de)),
    "O60.O60p": _so3("O60", "O60p", (0, 0, 0), (0, 0, -1, 0, 0, 0),
                     lambda n1, n2, n3, al, be, ga, de, a, b: (n3 + ga) * (n3 + de)),
}


def verify_second_order_3d(entry_id: str, idx, p) -> VerificationReport:
    """Chain two sparse relations and check the eigenvalue identity."""
    idx = _index3(idx)
    params = _params6(p)
    ent = SECOND_ORDER_3D[entry_id]
    idx0 = tuple(i + d for i, d in zip(idx, ent.didx))
    params0 = tuple(v + d for v, d in zip(params, ent.dparams))
    if not _valid3(idx0):
        return VerificationReport(entry_id, idx, params, NOT_APPLICABLE)
    eig = ent.eig(*idx, *params)
    u = simplex_poly_raw(*idx0, *params0)
    inner_rel = THEOREM1[ent.inner]
    v = operator_3d(ent.inner, idx0, params0).apply(u)
    idx1, params1 = inner_rel.shifted(idx0, params0)
    lhs = operator_3d(ent.outer, idx1, params1).apply(v)
    detail = None
    if _valid3(idx1):
        product = inner_rel.scale(*idx0, *params0) * THEOREM1[ent.outer].scale(
            *idx1, *params1
        )
        if product != eig:
            detail = f"scale product {product} != tabulated eigenvalue {eig}"
    return report_equality(entry_id, idx, params, lhs, u.scale(eig), detail=detail)


# ---------------------------------------------------------------------------
# Second-order differential equations T1..T4 (coefficients cleared by the
# stated denominators) and the classical a = b = 0 comparison form.
# ---------------------------------------------------------------------------

def _t1_coeffs(n1, n2, n3, al, be, ga, de, a, b):
    # Cleared by (1-x)(1-x-y).
    n = n1 + n2 + n3
    e = _e(al, be, ga, de, a, b)
    s4 = al + be + ga + de + 4
    d12 = ONE_MINUS_X * ONE_MINUS_XY
    return {
        "xx": X * ONE_MINUS_X * d12,
        "yy": Y * (ONE - Y) * d12,
        "zz": Z * (ONE - Z) * d12,
        "xz": (X * Z).scale(-2) * d12,
        "yz": (Y * Z).scale(-2) * d12,
        "xy": (X * Y).scale(-2) * d12,
        "x": (MPoly.const(al + 1) - X.scale(e + 4)) * d12,
        "y": ((MPoly.const(be + 1) - Y.scale(s4)) * ONE_MINUS_X
              + (X * Y).scale(a + b) - Y.scale(b)) * ONE_MINUS_XY,
        "z": ((MPoly.const(ga + 1) - Z.scale(s4)) * d12
              + (X * Z).scale(a + b) * ONE_MINUS_XY + (Y * Z).scale(b)),
        "": (d12.scale(n * (n + e + 3))
             - ONE_MINUS_XY.scale(a * (n2 + n3))
             - ONE_MINUS_X.scale(n3 * b)),
    }


def _t2_coeffs(n1, n2, n3, al, be, ga, de, a, b):
    # Cleared by (1-x-y).
    lam = (be + 1) * n3 + n2 * (n2 + 2 * n3 + be + ga + de + b + 2)
    return {
        "yy": Y * ONE_MINUS_XY * ONE_MINUS_XY,
        "yz": (Y * Z).scale(-2) * ONE_MINUS_XY,
        "zz": Y * Z * Z,
        "y": (ONE_MINUS_XY.scale(be + 1) - Y.scale(ga + de + b + 2)) * ONE_MINUS_XY,
        "z": (Y * Z).scale(ga + de + b + 2) - Z.scale(be + 1) * ONE_MINUS_XY,
        "": ONE_MINUS_XY.scale(lam) - Y.scale(n3 * (ga + de + b + n3 + 1)),
    }


def _t3_coeffs(n1, n2, n3, al, be, ga, de, a, b):
    return {
        "zz": Z * ONE_MINUS_XYZ,
        "z": ONE_MINUS_XYZ.scale(ga + 1) - Z.scale(de + 1),
        "": MPoly.const(n3 * (n3 + ga + de + 1)),
    }


def _t4_coeffs(n1, n2, n3, al, be, ga, de, a, b):
    # Cleared by (1-x).
    n = n1 + n2 + n3
    e = _e(al, be, ga, de, a, b)
    drift = MPoly.const(al + 1) - X.scale(e + 4)
    return {
        "xx": X * ONE_MINUS_X * ONE_MINUS_X,
        "yy": X * Y * Y,
        "zz": X * Z * Z,
        "xy": (X * Y).scale(-2) * ONE_MINUS_X,
        "xz": (X * Z).scale(-2) * ONE_MINUS_X,
        "yz": (X * Y * Z).scale(2),
        "x": drift * ONE_MINUS_X,
        "y": -Y * drift,
        "z": -Z * drift,
        "": (ONE_MINUS_X.scale(n * (n + e + 3))
             - MPoly.const((n2 + n3) * (n2 + n3 + be + ga + de + a + b + 2))),
    }


PDE_3D = {"T1": _t1_coeffs, "T2": _t2_coeffs, "T3": _t3_coeffs, "T4": _t4_coeffs}


def classical_t1_coeffs(n1, n2, n3, al, be, ga, de):
    """The a = b = 0 form of the first equation, cleared by nothing."""
    n = n1 + n2 + n3
    s = al + be + ga + de
    return {
        "xx": X * ONE_MINUS_X,
        "yy": Y * (ONE - Y),
        "zz": Z * (ONE - Z),
        "xz": (X * Z).scale(-2),
        "yz": (Y * Z).scale(-2),
        "xy": (X * Y).scale(-2),
        "x": MPoly.const(al + 1) - X.scale(s + 4),
        "y": MPoly.const(be + 1) - Y.scale(s + 4),
        "z": MPoly.const(ga + 1) - Z.scale(s + 4),
        "": MPoly.const(n * (n + s + 3)),
    }


def apply_pde(coeffs: dict, u: MPoly) -> MPoly:
    out = ZERO
    for key, coeff in coeffs.items():
        v = u
        for var in key:
            v = v.diff(var)
        out = out + coeff * v
    return out


def pde_residual_3d(which: str, idx, p, u: MPoly = None) -> MPoly:
    idx = _index3(idx)
    params = _params6(p)
    if u is None:
        u = simplex_poly_raw(*idx, *params)
    return apply_pde(PDE_3D[which](*idx, *params), u)


def verify_reduction_ab0(idx, fourparams) -> VerificationReport:
    """a = b = 0 members equal the independent classical construction, and
    the first equation collapses coefficient-by-coefficient to its
    classical form."""
    idx = _index3(idx)
    al, be, ga, de = (Fraction(v) for v in fourparams)
    params = (al, be, ga, de, Fraction(0), Fraction(0))
    lhs = simplex_poly_raw(*idx, *params)
    rhs = classical_simplex_poly_raw(*idx, al, be, ga, de)
    rep = report_equality("reduction.ab0", idx, (al, be, ga, de), lhs, rhs)
    if rep.status != "pass":
        return rep
    # Coefficient comparison: T1 at a = b = 0 against the classical display
    # times the same clearing factor (1-x)(1-x-y).
    cleared = _t1_coeffs(*idx, *params)
    classical = classical_t1_coeffs(*idx, al, be, ga, de)
    d12 = ONE_MINUS_X * ONE_MINUS_XY
    for key, coeff in cleared.items():
        if coeff != classical[key] * d12:
            return VerificationReport(
                "reduction.ab0", idx, (al, be, ga, de), "fail",
                lhs=coeff.to_text(), rhs=(classical[key] * d12).to_text(),
                detail=f"first-equation coefficient mismatch on u_{key or '0'}",
            )
    return rep


def monic_simplex(idx, p) -> MPoly:
    """Monic solution of the fourth equation at the given index.

    n1! / (e+n+n2+n3+3)_(n1) * y^n2 z^n3 * P(n1) is monic by construction;
    normalization by the x^n1 y^n2 z^n3 coefficient is kept as a guard.
    """
    n1, n2, n3 = _index3(idx)
    params = _params6(p)
    e = _esum(params)
    n = n1 + n2 + n3
    al, be, ga, de, a, b = params
    prefactor = factorial(n1) * gamma_ratio(e + 2 * n + 3, -n1)
    fx = shifted_jacobi_raw(n1, be + ga + de + a + b + 2 * n2 + 2 * n3 + 2, al)
    poly = (Y**n2 * Z**n3 * fx).scale(prefactor)
    lead = poly.coeff(n1, n2, n3)
    if lead == 0:
        raise ArithmeticError("vanishing leading coefficient")
    return poly.scale(1 / lead)


# ---------------------------------------------------------------------------
# Connection expansions.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConnectionTerm:
    index: Tuple[int, int, int]
    coeff: Fraction
    # Extra monomial factor (1-x)^p (1-x-y)^q attached to the target member.
    pow_1x: int = 0
    pow_1xy: int = 0


@dataclass(frozen=True)
class ConnectionExpansion:
    source_index: Tuple[int, int, int]
    source_params: Tuple[Fraction, ...]
    target_params: Tuple[Fraction, ...]
    terms: Tuple[ConnectionTerm, ...]

    def reassemble(self) -> MPoly:
        total = ZERO
        for t in self.terms:
            member = simplex_poly_raw(*t.index, *self.target_params)
            factor = ONE_MINUS_X**t.pow_1x * ONE_MINUS_XY**t.pow_1xy
            total = total + (member * factor).scale(t.coeff)
        return total

    def verify(self) -> bool:
        return self.reassemble() == simplex_poly_raw(
            *self.source_index, *self.source_params
        )


def connect_alpha(idx, p, xi) -> ConnectionExpansion:
    """Expand the member over the family with first parameter xi.

    The sum runs over m = 0..n1, lowering n1 by m; all other parameters are
    untouched.  Each coefficient is a product of three integer-offset gamma
    ratios, a Pochhammer in (alpha - xi), and the telescoping linear factor.
    """
    n1, n2, n3 = _index3(idx)
    params = _params6(p)
    al = params[0]
    xi = Fraction(xi)
    e = _esum(params)
    n = n1 + n2 + n3
    terms = []
    for m in range(n1 + 1):
        poch = pochhammer(al - xi, m)
        if poch == 0 and m > 0:
            continue
        coeff = (
            Fraction((-1) ** m)
            * (2 * n - 2 * m + e - al + xi + 3)
            * pochhammer(n + n2 + n3 - m + e - al + 3, m)
            * gamma_ratio(n + n2 + n3 + e + 3, n1 - m)
            * gamma_ratio(2 * n - m + e - al + xi + 4, -(n1 + 1))
            * poch
            / factorial(m)
        )
        if coeff != 0:
            terms.append(ConnectionTerm((n1 - m, n2, n3), coeff))
    target_params = (xi,) + params[1:]
    return ConnectionExpansion((n1, n2, n3), params, target_params, tuple(terms))


def _conn1d_coeff(n, k, pa, pb, qa, qb) -> Fraction:
    """Coefficient of the degree-k target in the expansion of a degree-n
    Jacobi factor with parameters (pa, pb) over the family (qa, qb)."""
    lead = (
        pochhammer(k + pa + 1, n - k)
        * pochhammer(n + pa + pb + 1, k)
        / (factorial(n - k) * pochhammer(k + qa + qb + 1, k))
    )
    f32 = hyper3f2_unit(
        n - k,
        n + k + pa + pb + 1,
        k + qa + 1,
        2 * k + qa + qb + 2,
        k + pa + 1,
    )
    return lead * f32


def connect_general(idx, p, target) -> ConnectionExpansion:
    """Expand the member over a family with all four leading parameters
    replaced by (phi, theta, eta, xi); the auxiliary (a, b) are shared.

    The triple sum runs over componentwise-lower indices, and targets carry
    the compensating (1-x)^(n2-k2) (1-x-y)^(n3-k3) monomial factors.
    """
    n1, n2, n3 = _index3(idx)
    params = _params6(p)
    al, be, ga, de, a, b = params
    phi, theta, eta, xi = (Fraction(v) for v in target)
    terms = []
    for k3 in range(n3 + 1):
        c3 = _conn1d_coeff(n3, k3, de, ga, xi, eta)
        if c3 == 0:
            continue
        for k2 in range(n2 + 1):
            c2 = _conn1d_coeff(
                n2, k2,
                ga + de + 2 * n3 + b + 1, be,
                xi + eta + 2 * k3 + b + 1, theta,
            )
            if c2 == 0:
                continue
            for k1 in range(n1 + 1):
                c1 = _conn1d_coeff(
                    n1, k1,
                    be + ga + de + a + b + 2 * n2 + 2 * n3 + 2, al,
                    theta + eta + xi + a + b + 2 * k2 + 2 * k3 + 2, phi,
                )
                coeff = c1 * c2 * c3
                if coeff != 0:
                    terms.append(
                        ConnectionTerm((k1, k2, k3), coeff, n2 - k2, n3 - k3)
                    )
    target_params = (phi, theta, eta, xi, a, b)
    return ConnectionExpansion((n1, n2, n3), params, target_params, tuple(terms))


# ---------------------------------------------------------------------------
# Three-term recurrence in x.
# ---------------------------------------------------------------------------

def three_term_x(idx, p) -> Tuple[Fraction, Fraction, Fraction]:
    """(A, B, C) with x*P(n1) = A*P(n1+1) + B*P(n1) + C*P(n1-1).

    The C coefficient multiplies the zero polynomial when n1 = 0.  Raises
    PoleHit if a structural denominator e+2n+2..e+2n+4 vanishes (possible
    for parameter sums <= -2 even inside the orthogonality regime).
    """
    n1, n2, n3 = _index3(idx)
    params = _params6(p)
    al = params[0]
    e = _esum(params)
    n = n1 + n2 + n3
    for v in (e + 2 * n + 2, e + 2 * n + 3, e + 2 * n + 4):
        if v == 0:
            raise PoleHit(f"three-term denominator vanishes: e+2n in {{-2,-3,-4}} at e={e}, n={n}")
    coeff_up = Fraction((n1 + 1) * (e + n + n2 + n3 + 3)) / ((e + 2 * n + 3) * (e + 2 * n + 4))
    coeff_mid = ((al + 2 * n1 + 1) * (e + 2 * n + 2) - 2 * n1 * (al + n1)) / (
        (e + 2 * n + 2) * (e + 2 * n + 4)
    )
    coeff_down = ((n + n2 + n3 + e - al + 2) * (al + n1)) / (
        (e + 2 * n + 2) * (e + 2 * n + 3)
    )
    return coeff_up, coeff_mid, coeff_down


def verify_three_term(idx, p) -> VerificationReport:
    idx = _index3(idx)
    params = _params6(p)
    n1, n2, n3 = idx
    try:
        ca, cb, cc = three_term_x(idx, params)
    except PoleHit as exc:
        return VerificationReport("three-term.x", idx, params, NOT_APPLICABLE, detail=str(exc))
    u = simplex_poly_raw(*idx, *params)
    rhs = (
        simplex_poly_raw(n1 + 1, n2, n3, *params).scale(ca)
        + u.scale(cb)
        + simplex_poly_raw(n1 - 1, n2, n3, *params).scale(cc)
    )
    return report_equality("three-term.x", idx, params, X * u, rhs)


# ---------------------------------------------------------------------------
# Identities for the classical (a = b = 0) subfamily: derivatives,
# weighted derivatives, and multiplication by x, y, z, w.
# ---------------------------------------------------------------------------

def _cp(idx, fourparams) -> MPoly:
    n1, n2, n3 = idx
    if min(idx) < 0:
        return ZERO
    al, be, ga, de = fourparams
    return simplex_poly_raw(n1, n2, n3, al, be, ga, de, Fraction(0), Fraction(0))


DERIVATIVE_IDS = ("dx-dy", "dz-dy", "dz", "dz.dx-dy")


def verify_corollary_derivatives(which: str, idx, fourparams) -> VerificationReport:
    """Derivative combinations lower one or two indices and raise the
    matching parameters by one."""
    idx = _index3(idx)
    n1, n2, n3 = idx
    q = tuple(Fraction(v) for v in fourparams)
    al, be, ga, de = q
    n = n1 + n2 + n3
    u = _cp(idx, q)
    s = al + be + ga + de
    if which == "dx-dy":
        lhs = (u.diff("x") - u.diff("y")).scale(2 * n2 + 2 * n3 + be + ga + de + 2)
        up = (al + 1, be + 1, ga, de)
        rhs = _cp((n1 - 1, n2, n3), up).scale(
            (n2 + 2 * n3 + be + ga + de + 2) * (n + n2 + n3 + s + 3)
        ) - _cp((n1, n2 - 1, n3), up).scale(
            (n1 + 2 * n2 + 2 * n3 + be + ga + de + 2) * (n2 + 2 * n3 + ga + de + 1)
        )
    elif which == "dz-dy":
        lhs = (u.diff("z") - u.diff("y")).scale(2 * n3 + ga + de + 1)
        up = (al, be + 1, ga + 1, de)
        rhs = _cp((n1, n2, n3 - 1), up).scale(
            (n3 + de) * (n2 + 2 * n3 + ga + de + 1)
        ) - _cp((n1, n2 - 1, n3), up).scale(
            (n2 + 2 * n3 + be + ga + de + 2) * (n3 + ga + de + 1)
        )
    elif which == "dz":
        lhs = u.diff("z")
        rhs = _cp((n1, n2, n3 - 1), (al, be, ga + 1, de + 1)).scale(
            n3 + ga + de + 1
        )
    elif which == "dz.dx-dy":
        lhs = (u.diff("x") - u.diff("y")).diff("z").scale(
            2 * n2 + 2 * n3 + be + ga + de + 2
        )
        up = (al + 1, be + 1, ga + 1, de + 1)
        rhs = _cp((n1 - 1, n2, n3 - 1), up).scale(
            (n2 + 2 * n3 + be + ga + de + 2)
            * (n + n2 + n3 + s + 3)
            * (n3 + ga + de + 1)
        ) - _cp((n1, n2 - 1, n3 - 1), up).scale(
            (n1 + 2 * n2 + 2 * n3 + be + ga + de + 2)
            * (n2 + 2 * n3 + ga + de + 1)
            * (n3 + ga + de + 1)
        )
    else:
        raise KeyError(f"unknown derivative identity {which!r}")
    return report_equality(f"corollary.deriv.{which}", idx, q, lhs, rhs)


def verify_corollary_weighted(which: str, idx, fourparams) -> VerificationReport:
    """Derivatives of the fully weighted member, verified in weight-cleared
    polynomial form.

    Pulling x^alpha y^beta z^gamma w^delta through the derivative leaves a
    rational operator; multiplying both sides by the minimal monomial in
    {x, y, z, w} clears every fractional term exactly.
    """
    idx = _index3(idx)
    n1, n2, n3 = idx
    q = tuple(Fraction(v) for v in fourparams)
    al, be, ga, de = q
    u = _cp(idx, q)
    w = ONE_MINUS_XYZ
    s23 = 2 * n2 + 2 * n3 + be + ga + de + 2
    # x*y*(d/dx - d/dy)(x^al y^be w^de u) / (x^(al-1) y^(be-1) w^de)
    v_xy = (X * Y) * (u.diff("x") - u.diff("y")) + (Y.scale(al) - X.scale(be)) * u
    # z*w*d/dz(z^ga w^de u) / (z^(ga-1) w^(de-1))
    def zw_dz(g, d, f):
        return (Z * w) * f.diff("z") + (w.scale(g) - Z.scale(d)) * f

    if which == "dx-dy":
        lhs = v_xy.scale(s23)
        down = (al - 1, be - 1, ga, de)
        rhs = _cp((n1, n2 + 1, n3), down).scale((n1 + al) * (n2 + 1)) - _cp(
            (n1 + 1, n2, n3), down
        ).scale((n1 + 1) * (n2 + be))
    elif which == "dz-dy":
        v_yz = (Y * Z) * (u.diff("z") - u.diff("y")) + (Y.scale(ga) - Z.scale(be)) * u
        lhs = v_yz.scale(2 * n3 + ga + de + 1)
        down = (al, be - 1, ga - 1, de)
        rhs = -_cp((n1, n2, n3 + 1), down).scale((n2 + be) * (n3 + 1)) + _cp(
            (n1, n2 + 1, n3), down
        ).scale((n2 + 1) * (n3 + ga))
    elif which == "dz":
        lhs = zw_dz(ga, de, u)
        rhs = -_cp((n1, n2, n3 + 1), (al, be, ga - 1, de - 1)).scale(n3 + 1)
    elif which == "dz.dx-dy":
        lhs = zw_dz(ga, de, v_xy).scale(s23)
        down = (al - 1, be - 1, ga - 1, de - 1)
        rhs = -(
            _cp((n1, n2 + 1, n3 + 1), down).scale((n1 + al) * (n2 + 1) * (n3 + 1))
            - _cp((n1 + 1, n2, n3 + 1), down).scale((n1 + 1) * (n2 + be) * (n3 + 1))
        )
    else:
        raise KeyError(f"unknown weighted identity {which!r}")
    return report_equality(f"corollary.weighted.{which}", idx, q, lhs, rhs)


def verify_corollary_multiplication(which: str, idx, fourparams) -> VerificationReport:
    """x*P, y*P, z*P and w*P as combinations with one lowered parameter."""
    idx = _index3(idx)
    n1, n2, n3 = idx
    q = tuple(Fraction(v) for v in fourparams)
    al, be, ga, de = q
    n = n1 + n2 + n3
    u = _cp(idx, q)
    s = al + be + ga + de
    f1 = 2 * n + s + 3
    f2 = 2 * n2 + 2 * n3 + be + ga + de + 2
    f3 = ga + de + 2 * n3 + 1
    if which == "x":
        lhs = (X * u).scale(f1)
        down = (al - 1, be, ga, de)
        rhs = _cp((n1, n2, n3), down).scale(n1 + al) + _cp(
            (n1 + 1, n2, n3), down
        ).scale(n1 + 1)
    elif which == "y":
        lhs = (Y * u).scale(f1 * f2)
        down = (al, be - 1, ga, de)
        rhs = (
            _cp((n1, n2, n3), down).scale((n + n2 + n3 + be + ga + de + 2) * (n2 + be))
            + _cp((n1, n2 + 1, n3), down).scale((n + n2 + n3 + s + 3) * (n2 + 1))
            - _cp((n1 + 1, n2, n3), down).scale((n1 + 1) * (n2 + be))
            - _cp((n1 - 1, n2 + 1, n3), down).scale((n1 + al) * (n2 + 1))
        )
    elif which == "z":
        lhs = (Z * u).scale(f1 * f2 * f3)
        down = (al, be, ga - 1, de)
        g1 = n + n2 + n3 + be + ga + de + 2
        g2 = n + n2 + n3 + s + 3
        h1 = n2 + 2 * n3 + ga + de + 1
        h2 = n2 + 2 * n3 + be + ga + de + 2
        rhs = (
            _cp((n1, n2, n3), down).scale(g1 * h1 * (n3 + ga))
            - _cp((n1 + 1, n2, n3), down).scale((n1 + 1) * h1 * (n3 + ga))
            - _cp((n1, n2 + 1, n3), down).scale(g2 * (n2 + 1) * (n3 + ga))
            + _cp((n1 - 1, n2 + 1, n3), down).scale((n1 + al) * (n2 + 1) * (n3 + ga))
            + _cp((n1, n2, n3 + 1), down).scale(g2 * h2 * (n3 + 1))
            - _cp((n1 - 1, n2, n3 + 1), down).scale((n1 + al) * h2 * (n3 + 1))
            - _cp((n1, n2 - 1, n3 + 1), down).scale(g1 * (n2 + be) * (n3 + 1))
            + _cp((n1 + 1, n2 - 1, n3 + 1), down).scale((n1 + 1) * (n2 + be) * (n3 + 1))
        )
    elif which == "w":
        lhs = (ONE_MINUS_XYZ * u).scale(f1 * f2 * f3)
        down = (al, be, ga, de - 1)
        g1 = n + n2 + n3 + be + ga + de + 2
        g2 = n + n2 + n3 + s + 3
        h1 = n2 + 2 * n3 + ga + de + 1
        h2 = n2 + 2 * n3 + be + ga + de + 2
        rhs = (
            -_cp((n1, n2, n3 + 1), down).scale(g2 * h2 * (n3 + 1))
            + _cp((n1 - 1, n2, n3 + 1), down).scale((n1 + al) * h2 * (n3 + 1))
            + _cp((n1, n2 - 1, n3 + 1), down).scale(g1 * (n2 + be) * (n3 + 1))
            - _cp((n1 + 1, n2 - 1, n3 + 1), down).scale((n1 + 1) * (n2 + be) * (n3 + 1))
            + _cp((n1, n2, n3), down).scale(g1 * h1 * (n3 + de))
            - _cp((n1 + 1, n2, n3), down).scale((n1 + 1) * h1 * (n3 + de))
            - _cp((n1, n2 + 1, n3), down).scale(g2 * (n2 + 1) * (n3 + de))
            + _cp((n1 - 1, n2 + 1, n3), down).scale((n1 + al) * (n2 + 1) * (n3 + de))
        )
    else:
        raise KeyError(f"unknown multiplication identity {which!r}")
    return report_equality(f"corollary.mult.{which}", idx, q, lhs, rhs)


WEIGHTED_IDS = DERIVATIVE_IDS
MULTIPLICATION_IDS = ("x", "y", "z", "w")
