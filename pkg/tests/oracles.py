"""Independent oracles used by the test-suite.

Everything here deliberately re-derives values through routes the package
does not use: classical three-term recurrences instead of hypergeometric
closed forms, explicit factorial series instead of running products, and
direct monomial integration instead of norm formulas.  Oracle results are
exact Fractions throughout.
"""

from __future__ import annotations

import math
from fractions import Fraction

from simplexpoly.ratpoly import MPoly, ONE, X


def rising(lam: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= Fraction(lam) + i
    return out


def jacobi_shifted_by_recurrence(n: int, a, b) -> MPoly:
    """Degree-n shifted Jacobi polynomial from the classical three-term
    recurrence, written against the variable t = 2x - 1."""
    a = Fraction(a)
    b = Fraction(b)
    t = X.scale(2) - 1
    if n == 0:
        return ONE
    prev = ONE
    cur = t.scale(Fraction(a + b + 2, 2)) + Fraction(a - b, 2)
    for m in range(1, n):
        c1 = 2 * (m + 1) * (m + a + b + 1) * (2 * m + a + b)
        c2 = (2 * m + a + b + 1) * (a * a - b * b)
        c3 = (2 * m + a + b) * (2 * m + a + b + 1) * (2 * m + a + b + 2)
        c4 = 2 * (m + a) * (m + b) * (2 * m + a + b + 2)
        nxt = (t.scale(c3) + c2) * cur - prev.scale(c4)
        prev, cur = cur, nxt.scale(Fraction(1, c1))
    return cur


def hyper2f1_series(n: int, b, c, x_val: Fraction) -> Fraction:
    """Terminating 2F1(-n, b; c; x) from the explicit factorial series."""
    total = Fraction(0)
    for m in range(n + 1):
        denom = rising(Fraction(c), m) * math.factorial(m)
        total += rising(Fraction(-n), m) * rising(Fraction(b), m) / denom * x_val**m
    return total


def hyper3f2_series(n: int, a2, a3, b1, b2) -> Fraction:
    total = Fraction(0)
    for m in range(n + 1):
        denom = rising(Fraction(b1), m) * rising(Fraction(b2), m) * math.factorial(m)
        total += (
            rising(Fraction(-n), m) * rising(Fraction(a2), m) * rising(Fraction(a3), m)
        ) / denom
    return total


# ---------------------------------------------------------------------------
# Exact integration.
# ---------------------------------------------------------------------------

def integrate_interval(p: MPoly) -> Fraction:
    """Integral of a univariate polynomial in x over (0, 1)."""
    total = Fraction(0)
    for (i, j, k), coef in p.terms():
        assert j == 0 and k == 0
        total += coef / (i + 1)
    return total


def integrate_triangle(p: MPoly) -> Fraction:
    """Integral over {x, y > 0, x + y < 1} by the factorial formula."""
    total = Fraction(0)
    for (i, j, k), coef in p.terms():
        assert k == 0
        total += coef * Fraction(
            math.factorial(i) * math.factorial(j), math.factorial(i + j + 2)
        )
    return total


def integrate_tetra(p: MPoly) -> Fraction:
    """Integral over the open unit tetrahedron."""
    total = Fraction(0)
    for (i, j, k), coef in p.terms():
        total += coef * Fraction(
            math.factorial(i) * math.factorial(j) * math.factorial(k),
            math.factorial(i + j + k + 3),
        )
    return total


def interval_weighted_mean(p: MPoly, a, b) -> Fraction:
    """Integral of p against (1-x)^a x^b over (0, 1), divided by the
    weight's mass; exact for arbitrary rational exponents since each
    monomial contributes (b+1)_i / (a+b+2)_i."""
    a = Fraction(a)
    b = Fraction(b)
    total = Fraction(0)
    for (i, j, k), coef in p.terms():
        assert j == 0 and k == 0
        total += coef * rising(b + 1, i) / rising(a + b + 2, i)
    return total


def triangle_weighted_mean(p: MPoly, params) -> Fraction:
    """Mean of p against x^a y^b (1-x-y)^c (1-x)^d, via collapsed moments."""
    a, b, c, d = (Fraction(v) for v in params)
    total = Fraction(0)
    for (i, j, k), coef in p.terms():
        assert k == 0
        mu = (
            rising(a + 1, i) * rising(b + c + d + 2, j) / rising(a + b + c + d + 3, i + j)
        ) * (rising(b + 1, j) / rising(b + c + 2, j))
        total += coef * mu
    return total


def tetra_weighted_mean(p: MPoly, params) -> Fraction:
    """Mean of p against the six-parameter tetrahedron weight."""
    al, be, ga, de, a, b = (Fraction(v) for v in params)
    big = be + ga + de + a + b + 3
    total = Fraction(0)
    for (i, j, k), coef in p.terms():
        mu = (
            rising(al + 1, i) * rising(big, j + k) / rising(al + big + 1, i + j + k)
        ) * (
            rising(be + 1, j)
            * rising(ga + de + b + 2, k)
            / rising(be + ga + de + b + 3, j + k)
        ) * (rising(ga + 1, k) / rising(ga + de + 2, k))
        total += coef * mu
    return total
