"""Shifted Jacobi polynomials on (0, 1) and their ladder relations.

P(n; a, b) here denotes the degree-n Jacobi polynomial mapped to (0, 1),
orthogonal against the weight (1-x)^a * x^b for a, b > -1.  The module
provides exact construction, the norm ratio h_n/h_0, the twelve
first-order ladder operators with their sparse recurrence table, and the
twenty-four second-order composition identities.

Ladder relations step the parameters by +-1, so verification sweeps reach
members whose parameters sit outside the orthogonality regime (down to
a = -2).  Construction therefore falls back to a pole-free binomial sum
whenever the hypergeometric closed form hits a removable singularity at
a+1 in {0, -1, -2, ...}.
"""

from __future__ import annotations

import math
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
from .ratpoly import MPoly, ONE, ONE_MINUS_X, X, ZERO
from .special import factorial, gamma_ratio, hyper2f1_terminating, pochhammer


@dataclass(frozen=True)
class JacobiParams:
    """Parameter pair (a, b) of the weight (1-x)^a x^b; both must be > -1."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a <= -1 or self.b <= -1:
            raise ValueError(f"parameters must exceed -1, got ({self.a}, {self.b})")

    def as_tuple(self) -> Tuple[Fraction, Fraction]:
        return (self.a, self.b)


def _params2(p) -> Tuple[Fraction, Fraction]:
    if isinstance(p, JacobiParams):
        return p.as_tuple()
    a, b = p
    return (Fraction(a), Fraction(b))


@lru_cache(maxsize=None)
def shifted_jacobi_raw(n: int, a: Fraction, b: Fraction) -> MPoly:
    """Degree-n member for arbitrary rational parameters (exact MPoly in x)."""
    if n < 0:
        return ZERO
    if (a + 1).denominator == 1 and a + 1 <= 0:
        # Removable singularity of the hypergeometric form; use the
        # equivalent binomial sum, which is pole-free for all parameters.
        out = ZERO
        for s in range(n + 1):
            coeff = (
                _binom(n + a, n - s)
                * _binom(n + b, s)
                * (-1) ** s
            )
            if coeff != 0:
                out = out + (ONE_MINUS_X**s * X ** (n - s)).scale(coeff)
        return out
    lead = pochhammer(a + 1, n) / factorial(n)
    series = hyper2f1_terminating(n, n + a + b + 1, a + 1, ONE_MINUS_X)
    return series.scale(lead)


def _binom(top: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= (top - i) / (k - i)
    return out


def shifted_jacobi(n: int, p) -> MPoly:
    """Public constructor; `p` is a JacobiParams or an (a, b) pair."""
    a, b = _params2(p)
    return shifted_jacobi_raw(n, a, b)


def norm_ratio(n: int, p) -> Fraction:
    """h_n / h_0 for the weight (1-x)^a x^b.

    Equal to (a+1)_n (b+1)_n (a+b+1) / (n! (a+b+2n+1) (a+b+1)_n); the
    cancellable (a+b+1) pair is removed so the value stays finite when
    a+b+1 = 0.
    """
    a, b = _params2(p)
    if n == 0:
        return Fraction(1)
    num = pochhammer(a + 1, n) * pochhammer(b + 1, n)
    den = factorial(n) * (a + b + 2 * n + 1) * pochhammer(a + b + 2, n - 1)
    return num / den


def h_ratio(n: int, big_a: Fraction, big_b: Fraction, base_a: Fraction) -> Fraction:
    """h_n^{(A,B)} / h_0^{(A0,B)} where A - A0 is a nonnegative integer.

    This is the building block of the triangle/tetrahedron norm ratios,
    whose leading parameters grow with the inner degrees.
    """
    delta = big_a - base_a + n
    if delta.denominator != 1 or delta < 0:
        raise ValueError("parameter offset must be a nonnegative integer")
    delta = int(delta)
    if delta == 0:
        return Fraction(1)
    num = gamma_ratio(base_a + 1, delta) * pochhammer(big_b + 1, n)
    den = (
        factorial(n)
        * (big_a + big_b + 2 * n + 1)
        * pochhammer(base_a + big_b + 2, delta - 1)
    )
    return num / den


def h_absolute(n: int, a: float, b: float) -> float:
    """Float value of the squared norm h_n (used by quadrature checks)."""
    if n == 0:
        return math.exp(
            math.lgamma(a + 1) + math.lgamma(b + 1) - math.lgamma(a + b + 2)
        )
    # (a+b+2n+1) Gamma(a+b+n+1) rewritten through Gamma(a+b+n+2): every
    # lgamma argument is then positive for a, b > -1 and n >= 1.
    log_h = (
        math.lgamma(a + n + 1)
        + math.lgamma(b + n + 1)
        - math.lgamma(n + 1)
        - math.lgamma(a + b + n + 2)
    )
    return math.exp(log_h) * (a + b + n + 1) / (a + b + 2 * n + 1)


# ---------------------------------------------------------------------------
# The twelve first-order operators.
# ---------------------------------------------------------------------------

LADDER_IDS = (
    "L1", "L2", "L3", "L4", "L5", "L6",
    "L1p", "L2p", "L3p", "L4p", "L5p", "L6p",
)

_X1X = X * ONE_MINUS_X


def ladder_operator(op: str, n: int, p) -> DiffOperator:
    """Operator descriptor for one ladder id at degree n, parameters (a, b)."""
    a, b = _params2(p)
    c = MPoly.const
    if op == "L1":
        return DiffOperator(c0=ZERO, cx=ONE)
    if op == "L2":
        return DiffOperator(c0=c(a + b + n + 1), cx=X)
    if op == "L3":
        return DiffOperator(c0=c(a + b + n + 1), cx=-ONE_MINUS_X)
    if op == "L4":
        return DiffOperator(c0=X.scale(a) - ONE_MINUS_X.scale(b + n + 1), cx=-_X1X)
    if op == "L5":
        return DiffOperator(c0=X.scale(a + n + 1) - ONE_MINUS_X.scale(b), cx=-_X1X)
    if op == "L6":
        return DiffOperator(c0=c(b), cx=X)
    if op == "L1p":
        return DiffOperator(c0=X.scale(a) - ONE_MINUS_X.scale(b), cx=-_X1X)
    if op == "L2p":
        return DiffOperator(c0=c(a) + ONE_MINUS_X.scale(n), cx=-_X1X)
    if op == "L3p":
        return DiffOperator(c0=c(b) + X.scale(n), cx=_X1X)
    if op == "L4p":
        return DiffOperator(c0=c(-n), cx=X)
    if op == "L5p":
        return DiffOperator(c0=c(n), cx=ONE_MINUS_X)
    if op == "L6p":
        return DiffOperator(c0=c(a), cx=-ONE_MINUS_X)
    raise KeyError(f"unknown ladder operator {op!r}")


SPARSE_1D = {
    "L1": SparseRelation("L1", (-1,), (+1, +1), lambda n, a, b: n + a + b + 1),
    "L2": SparseRelation("L2", (0,), (+1, 0), lambda n, a, b: n + a + b + 1),
    "L3": SparseRelation("L3", (0,), (0, +1), lambda n, a, b: n + a + b + 1),
    "L4": SparseRelation("L4", (+1,), (-1, 0), lambda n, a, b: n + 1),
    "L5": SparseRelation("L5", (+1,), (0, -1), lambda n, a, b: n + 1),
    "L6": SparseRelation("L6", (0,), (+1, -1), lambda n, a, b: n + b),
    "L1p": SparseRelation("L1p", (+1,), (-1, -1), lambda n, a, b: n + 1),
    "L2p": SparseRelation("L2p", (0,), (-1, 0), lambda n, a, b: n + a),
    "L3p": SparseRelation("L3p", (0,), (0, -1), lambda n, a, b: n + b),
    "L4p": SparseRelation("L4p", (-1,), (+1, 0), lambda n, a, b: n + b),
    "L5p": SparseRelation("L5p", (-1,), (0, +1), lambda n, a, b: n + a),
    "L6p": SparseRelation("L6p", (0,), (-1, +1), lambda n, a, b: n + a),
}


def verify_ladder(op: str, n: int, p) -> VerificationReport:
    """Check one sparse relation as an exact polynomial identity.

    A target of negative degree is the zero polynomial; the check then
    asserts that the operator annihilates the member and the report is
    marked not_applicable.
    """
    a, b = _params2(p)
    rel = SPARSE_1D[op]
    u = shifted_jacobi_raw(n, a, b)
    lhs = ladder_operator(op, n, (a, b)).apply(u)
    (n2,), (a2, b2) = rel.shifted((n,), (a, b))
    if n2 < 0:
        return report_equality(op, (n,), (a, b), lhs, ZERO, applicable=False)
    rhs = shifted_jacobi_raw(n2, a2, b2).scale(rel.scale(n, a, b))
    return report_equality(op, (n,), (a, b), lhs, rhs)


# ---------------------------------------------------------------------------
# Second-order compositions.
#
# Each entry states: apply `inner` then `outer` to the member at the
# shifted operand (n+dn, a+da, b+db); the result is eig(n, a, b) times that
# member.  The ".rel" entries are the raising/lowering pairings on shifted
# operands; the ".eig" entries are the same compositions arranged as
# eigenvalue equations for the unshifted member.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SecondOrder1D:
    outer: str
    inner: str
    dn: int
    da: int
    db: int
    eig: "callable"


SECOND_ORDER_1D = {
    "L1p.L1.rel": SecondOrder1D("L1p", "L1", 0, -1, -1, lambda n, a, b: n * (n + a + b - 1)),
    "L1.L1p.rel": SecondOrder1D("L1", "L1p", 0, 0, 0, lambda n, a, b: (n + 1) * (a + b + n)),
    "L2p.L2.rel": SecondOrder1D("L2p", "L2", 0, -1, +1, lambda n, a, b: (n + a) * (n + a + b + 1)),
    "L2.L2p.rel": SecondOrder1D("L2", "L2p", 0, 0, +1, lambda n, a, b: (n + a) * (n + a + b + 1)),
    "L3p.L3.rel": SecondOrder1D("L3p", "L3", 0, +1, -1, lambda n, a, b: (n + b) * (n + a + b + 1)),
    "L3.L3p.rel": SecondOrder1D("L3", "L3p", 0, +1, 0, lambda n, a, b: (n + b) * (n + a + b + 1)),
    "L4p.L4.rel": SecondOrder1D("L4p", "L4", -1, 0, +1, lambda n, a, b: n * (n + b + 1)),
    "L4.L4p.rel": SecondOrder1D("L4", "L4p", 0, -1, +1, lambda n, a, b: n * (n + b + 1)),
    "L5p.L5.rel": SecondOrder1D("L5p", "L5", -1, +1, 0, lambda n, a, b: n * (n + a + 1)),
    "L5.L5p.rel": SecondOrder1D("L5", "L5p", 0, +1, -1, lambda n, a, b: n * (n + a + 1)),
    "L6p.L6.rel": SecondOrder1D("L6p", "L6", 0, -1, 0, lambda n, a, b: (n + a) * (n + b)),
    "L6.L6p.rel": SecondOrder1D("L6", "L6p", 0, 0, -1, lambda n, a, b: (n + a) * (n + b)),
    "L1p.L1.eig": SecondOrder1D("L1p", "L1", 0, 0, 0, lambda n, a, b: n * (n + a + b + 1)),
    "L1.L1p.eig": SecondOrder1D("L1", "L1p", 0, 0, 0, lambda n, a, b: (n + 1) * (a + b + n)),
    "L2p.L2.eig": SecondOrder1D("L2p", "L2", 0, 0, 0, lambda n, a, b: (n + a + 1) * (n + a + b + 1)),
    "L2.L2p.eig": SecondOrder1D("L2", "L2p", 0, 0, 0, lambda n, a, b: (n + a) * (n + a + b)),
    "L3p.L3.eig": SecondOrder1D("L3p", "L3", 0, 0, 0, lambda n, a, b: (n + b + 1) * (n + a + b + 1)),
    "L3.L3p.eig": SecondOrder1D("L3", "L3p", 0, 0, 0, lambda n, a, b: (n + b) * (n + a + b)),
    "L4p.L4.eig": SecondOrder1D("L4p", "L4", 0, 0, 0, lambda n, a, b: (n + 1) * (n + b + 1)),
    "L4.L4p.eig": SecondOrder1D("L4", "L4p", 0, 0, 0, lambda n, a, b: n * (n + b)),
    "L5p.L5.eig": SecondOrder1D("L5p", "L5", 0, 0, 0, lambda n, a, b: (n + 1) * (n + a + 1)),
    "L5.L5p.eig": SecondOrder1D("L5", "L5p", 0, 0, 0, lambda n, a, b: n * (n + a)),
    "L6p.L6.eig": SecondOrder1D("L6p", "L6", 0, 0, 0, lambda n, a, b: (n + a + 1) * (n + b)),
    "L6.L6p.eig": SecondOrder1D("L6", "L6p", 0, 0, 0, lambda n, a, b: (n + a) * (n + b + 1)),
}


def verify_second_order_1d(entry_id: str, n: int, p) -> VerificationReport:
    """Check one second-order composition as an exact eigenvalue identity.

    The two steps chain the sparse table: the inner operator is built at
    the operand, the outer at the inner relation's target.  The product of
    the two sparse scales must reproduce the tabulated eigenvalue, which is
    asserted alongside the polynomial identity.
    """
    a, b = _params2(p)
    ent = SECOND_ORDER_1D[entry_id]
    n0, a0, b0 = n + ent.dn, a + ent.da, b + ent.db
    eig = ent.eig(n, a, b)
    if n0 < 0:
        return VerificationReport(entry_id, (n,), (a, b), NOT_APPLICABLE)
    u = shifted_jacobi_raw(n0, a0, b0)
    inner_rel = SPARSE_1D[ent.inner]
    v = ladder_operator(ent.inner, n0, (a0, b0)).apply(u)
    (n1,), (a1, b1) = inner_rel.shifted((n0,), (a0, b0))
    lhs = ladder_operator(ent.outer, n1, (a1, b1)).apply(v)
    detail = None
    if n1 >= 0:
        product = inner_rel.scale(n0, a0, b0) * SPARSE_1D[ent.outer].scale(n1, a1, b1)
        if product != eig:
            detail = f"scale product {product} != tabulated eigenvalue {eig}"
    return report_equality(
        entry_id, (n,), (a, b), lhs, u.scale(eig), detail=detail,
        applicable=not u.is_zero,
    )
