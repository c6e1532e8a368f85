"""First-order differential operators and verification reports.

Every ladder operator used by the interval, triangle and tetrahedron
families fits one shape: polynomial numerator coefficients for u and its
partials, over a structured denominator that is a product of factors from
{1, 1-x, 1-x-y, 1-x-y-z}.  Applying such an operator to a family member
always produces a polynomial, so `apply` divides exactly and a nonzero
remainder is itself a reportable failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .ratpoly import MPoly, ONE

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class DiffOperator:
    """u -> (c0*u + cx*u_x + cy*u_y + cz*u_z) / denom, exactly."""

    c0: MPoly
    cx: MPoly = MPoly.zero()
    cy: MPoly = MPoly.zero()
    cz: MPoly = MPoly.zero()
    denom: MPoly = ONE

    def apply(self, u: MPoly) -> MPoly:
        num = self.c0 * u
        if not self.cx.is_zero:
            num = num + self.cx * u.diff("x")
        if not self.cy.is_zero:
            num = num + self.cy * u.diff("y")
        if not self.cz.is_zero:
            num = num + self.cz * u.diff("z")
        if self.denom == ONE:
            return num
        return num.div_exact(self.denom)


@dataclass(frozen=True)
class SparseRelation:
    """One line of a ladder-relation table.

    Applying operator `op` to the family member at (idx, params) yields
    scale(idx, params) times the member at (idx + dn, params + dparams);
    shifts that leave the index domain target the zero polynomial.
    """

    op: str
    dn: Tuple[int, ...]
    dparams: Tuple[int, ...]
    scale: "callable"

    def shifted(self, idx: Sequence[int], params: Sequence[Fraction]):
        new_idx = tuple(i + d for i, d in zip(idx, self.dn))
        new_params = tuple(p + d for p, d in zip(params, self.dparams))
        return new_idx, new_params


@dataclass
class VerificationReport:
    """Outcome of one identity check, serializable to a JSON dict."""

    relation: str
    index: Tuple[int, ...]
    params: Tuple[Fraction, ...]
    status: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    detail: Optional[str] = None
    suite: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        out = {
            "relation": self.relation,
            "index": list(self.index),
            "params": [str(p) for p in self.params],
            "status": self.status,
        }
        if self.suite is not None:
            out["suite"] = self.suite
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        if self.detail is not None:
            out["detail"] = self.detail
        return out

    def sort_key(self):
        return (
            self.suite or "",
            self.relation,
            self.index,
            tuple(str(p) for p in self.params),
        )


def report_equality(
    relation: str,
    index: Tuple[int, ...],
    params: Tuple[Fraction, ...],
    lhs: MPoly,
    rhs: MPoly,
    *,
    applicable: bool = True,
    detail: str = None,
) -> VerificationReport:
    """Compare two exact polynomials and wrap the outcome in a report."""
    if lhs == rhs:
        status = PASS if applicable else NOT_APPLICABLE
        return VerificationReport(relation, tuple(index), tuple(params), status, detail=detail)
    return VerificationReport(
        relation,
        tuple(index),
        tuple(params),
        FAIL,
        lhs=lhs.to_text(),
        rhs=rhs.to_text(),
        detail=detail,
    )


def summarize(reports) -> dict:
    """Aggregate counts per relation and flag erratum candidates.

    A relation is an erratum candidate when it failed on every applicable
    (index, params) sample: a transcription typo breaks an identity
    everywhere, whereas an implementation bug usually leaves some trace of
    partial success.
    """
    per_relation: dict = {}
    for r in reports:
        slot = per_relation.setdefault(r.relation, {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0})
        slot[r.status] += 1
    erratum = sorted(
        rel
        for rel, c in per_relation.items()
        if c[FAIL] > 0 and c[PASS] == 0
    )
    totals = {
        "pass": sum(c[PASS] for c in per_relation.values()),
        "fail": sum(c[FAIL] for c in per_relation.values()),
        "not_applicable": sum(c[NOT_APPLICABLE] for c in per_relation.values()),
    }
    return {
        "totals": totals,
        "per_relation": per_relation,
        "erratum_candidates": erratum,
    }
