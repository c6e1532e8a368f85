"""Verification sweeps: task generation, execution, and report merging.

A sweep expands a suite section of the JSON config into a flat list of
picklable tasks (relation id, index, parameters), runs them serially or
across a process pool, and merges the reports deterministically by sorted
key.  Parallel execution chunks tasks by parameter tuple so each worker
keeps warm construction caches.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import jacobi1d, simplex3d, triangle2d
from .operators import VerificationReport, report_equality, summarize
from .ratpoly import ZERO

SUITES = (
    "ladder1d",
    "m2d",
    "theorem1",
    "second-order",
    "pde",
    "corollaries",
    "connections",
    "three-term",
)


def parse_fraction(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise ValueError(f"refusing float parameter {text!r}; pass 'num/den' strings")
    return Fraction(str(text))


def parse_grid(rows: Sequence[Sequence], arity: int) -> List[Tuple[Fraction, ...]]:
    grid = []
    for row in rows:
        vals = tuple(parse_fraction(v) for v in row)
        if len(vals) != arity:
            raise ValueError(f"grid row {row!r} does not have {arity} entries")
        grid.append(vals)
    return grid


@dataclass(frozen=True)
class SweepSection:
    """Parsed form of one suite section: degree bound, parameter grid,
    and an optional relation-id selection."""

    degree: int
    params: Tuple[Tuple[Fraction, ...], ...]
    relations: object = "all"

    @staticmethod
    def parse(section: dict, arity: int) -> "SweepSection":
        return SweepSection(
            degree=int(section["degree"]),
            params=tuple(parse_grid(section["params"], arity)),
            relations=section.get("relations", "all"),
        )


def indices_2d(max_degree: int) -> List[Tuple[int, int]]:
    return [(n, k) for n in range(max_degree + 1) for k in range(n + 1)]


def indices_3d(max_degree: int) -> List[Tuple[int, int, int]]:
    out = []
    for n in range(max_degree + 1):
        for n1 in range(n + 1):
            for n2 in range(n - n1 + 1):
                out.append((n1, n2, n - n1 - n2))
    return out


# ---------------------------------------------------------------------------
# Task executors.  Every task is (kind, relation-or-None, index, params,
# extra) with hashable exact contents, so the list pickles cleanly.
# ---------------------------------------------------------------------------

def _residual_report(relation, index, params, residual) -> VerificationReport:
    return report_equality(relation, index, params, residual, ZERO)


def _run_monic_triangle(idx, params) -> VerificationReport:
    poly = triangle2d.monic_triangle(idx, params)
    n, k = idx
    if poly.coeff(n - k, k, 0) != 1:
        return VerificationReport(
            "monic.triangle", idx, params, "fail",
            lhs=poly.to_text(), rhs="unit leading coefficient",
        )
    return _residual_report(
        "monic.triangle", idx, params, triangle2d.pde_residual("B1", idx, params, poly)
    )


def _run_monic_simplex(idx, params) -> VerificationReport:
    poly = simplex3d.monic_simplex(idx, params)
    if poly.coeff(*idx) != 1:
        return VerificationReport(
            "monic.simplex", idx, params, "fail",
            lhs=poly.to_text(), rhs="unit leading coefficient",
        )
    return _residual_report(
        "monic.simplex", idx, params, simplex3d.pde_residual_3d("T4", idx, params, poly)
    )


def _run_connect_alpha(idx, params, xi) -> VerificationReport:
    expansion = simplex3d.connect_alpha(idx, params, xi)
    lhs = expansion.reassemble()
    rhs = simplex3d.simplex_poly_raw(*idx, *params)
    return report_equality(
        "connect.alpha", idx, params + (xi,), lhs, rhs, detail=f"xi={xi}"
    )


def _run_connect_general(idx, params, target) -> VerificationReport:
    expansion = simplex3d.connect_general(idx, params, target)
    lhs = expansion.reassemble()
    rhs = simplex3d.simplex_poly_raw(*idx, *params)
    return report_equality(
        "connect.general", idx, params + tuple(target), lhs, rhs,
        detail="target=" + ",".join(str(v) for v in target),
    )


_EXECUTORS = {
    "ladder1d": lambda rel, idx, params, extra: jacobi1d.verify_ladder(rel, idx[0], params),
    "so1d": lambda rel, idx, params, extra: jacobi1d.verify_second_order_1d(rel, idx[0], params),
    "m2d": lambda rel, idx, params, extra: triangle2d.verify_m_relation(rel, idx, params),
    "so2d": lambda rel, idx, params, extra: triangle2d.verify_second_order_m(rel, idx, params),
    "d0": lambda rel, idx, params, extra: triangle2d.verify_d0_reduction(idx, params),
    "pde2d": lambda rel, idx, params, extra: _residual_report(
        f"pde.{rel}", idx, params, triangle2d.pde_residual(rel, idx, params)
    ),
    "monic2d": lambda rel, idx, params, extra: _run_monic_triangle(idx, params),
    "theorem1": lambda rel, idx, params, extra: simplex3d.verify_theorem1(rel, idx, params),
    "so3d": lambda rel, idx, params, extra: simplex3d.verify_second_order_3d(rel, idx, params),
    "ab0": lambda rel, idx, params, extra: simplex3d.verify_reduction_ab0(idx, params),
    "pde3d": lambda rel, idx, params, extra: _residual_report(
        f"pde.{rel}", idx, params, simplex3d.pde_residual_3d(rel, idx, params)
    ),
    "monic3d": lambda rel, idx, params, extra: _run_monic_simplex(idx, params),
    "three_term": lambda rel, idx, params, extra: simplex3d.verify_three_term(idx, params),
    "conn_alpha": lambda rel, idx, params, extra: _run_connect_alpha(idx, params, extra),
    "conn_general": lambda rel, idx, params, extra: _run_connect_general(idx, params, extra),
    "cor_deriv": lambda rel, idx, params, extra: simplex3d.verify_corollary_derivatives(rel, idx, params),
    "cor_weight": lambda rel, idx, params, extra: simplex3d.verify_corollary_weighted(rel, idx, params),
    "cor_mult": lambda rel, idx, params, extra: simplex3d.verify_corollary_multiplication(rel, idx, params),
}

Task = Tuple[str, Optional[str], tuple, tuple, object]


def run_task(task: Task) -> VerificationReport:
    kind, rel, idx, params, extra = task
    return _EXECUTORS[kind](rel, idx, params, extra)


def _run_chunk(tasks: List[Task]) -> List[VerificationReport]:
    return [run_task(t) for t in tasks]


def run_tasks(tasks: List[Task], jobs: int = 1) -> List[VerificationReport]:
    """Execute tasks, optionally across processes, and sort the reports."""
    if jobs > 1 and len(tasks) > 1:
        # Group by parameter tuple for cache locality inside each worker.
        tasks = sorted(tasks, key=lambda t: (str(t[3]), t[0], str(t[1]), t[2]))
        chunks = max(1, min(len(tasks), jobs * 4))
        size = (len(tasks) + chunks - 1) // chunks
        split = [tasks[i : i + size] for i in range(0, len(tasks), size)]
        reports: List[VerificationReport] = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_chunk, split):
                reports.extend(part)
    else:
        reports = [run_task(t) for t in tasks]
    return sorted(reports, key=lambda r: r.sort_key())


def _filter(relations, selection):
    if not selection or selection == "all":
        return list(relations)
    unknown = set(selection) - set(relations)
    if unknown:
        raise ValueError(f"unknown relation ids: {sorted(unknown)}")
    return [r for r in relations if r in selection]


# ---------------------------------------------------------------------------
# Suite task builders.
# ---------------------------------------------------------------------------

def _section(cfg: dict, *path):
    cur = cfg
    for key in path:
        if key not in cur:
            raise KeyError(f"config is missing section {'.'.join(path)!r}")
        cur = cur[key]
    return cur


def tasks_ladder1d(section) -> List[Task]:
    sec = SweepSection.parse(section, 2)
    ops = _filter(jacobi1d.LADDER_IDS, sec.relations)
    return [
        ("ladder1d", op, (n,), params, None)
        for params in sec.params
        for n in range(sec.degree + 1)
        for op in ops
    ]


def tasks_m2d(section) -> List[Task]:
    sec = SweepSection.parse(section, 4)
    ops = _filter(triangle2d.M_IDS, sec.relations)
    tasks: List[Task] = [
        ("m2d", op, idx, params, None)
        for params in sec.params
        for idx in indices_2d(sec.degree)
        for op in ops
    ]
    tasks += [
        ("d0", None, idx, params[:3], None)
        for params in sec.params
        for idx in indices_2d(sec.degree)
    ]
    return tasks


def tasks_theorem1(section) -> List[Task]:
    sec = SweepSection.parse(section, 6)
    ops = _filter(simplex3d.OPERATOR_IDS_3D, sec.relations)
    tasks: List[Task] = [
        ("theorem1", op, idx, params, None)
        for params in sec.params
        for idx in indices_3d(sec.degree)
        for op in ops
    ]
    tasks += [
        ("ab0", None, idx, params[:4], None)
        for params in sec.params
        for idx in indices_3d(sec.degree)
    ]
    return tasks


def tasks_second_order(section) -> List[Task]:
    tasks: List[Task] = []
    one = SweepSection.parse(_section(section, "oned"), 2)
    keys1 = _filter(tuple(jacobi1d.SECOND_ORDER_1D), one.relations)
    tasks += [
        ("so1d", key, (n,), params, None)
        for params in one.params
        for n in range(one.degree + 1)
        for key in keys1
    ]
    two = SweepSection.parse(_section(section, "twod"), 4)
    keys2 = _filter(tuple(triangle2d.SECOND_ORDER_2D), two.relations)
    tasks += [
        ("so2d", key, idx, params, None)
        for params in two.params
        for idx in indices_2d(two.degree)
        for key in keys2
    ]
    three = SweepSection.parse(_section(section, "threed"), 6)
    keys3 = _filter(tuple(simplex3d.SECOND_ORDER_3D), three.relations)
    tasks += [
        ("so3d", key, idx, params, None)
        for params in three.params
        for idx in indices_3d(three.degree)
        for key in keys3
    ]
    return tasks


def tasks_pde(section) -> List[Task]:
    tasks: List[Task] = []
    two = SweepSection.parse(_section(section, "twod"), 4)
    for params in two.params:
        for idx in indices_2d(two.degree):
            for which in ("L1", "L2", "B1"):
                tasks.append(("pde2d", which, idx, params, None))
    three = SweepSection.parse(_section(section, "threed"), 6)
    for params in three.params:
        for idx in indices_3d(three.degree):
            for which in ("T1", "T2", "T3", "T4"):
                tasks.append(("pde3d", which, idx, params, None))
    monic_degree = int(section.get("monic_degree", 5))
    for params in two.params:
        for idx in indices_2d(monic_degree):
            tasks.append(("monic2d", None, idx, params, None))
    for params in three.params:
        for idx in indices_3d(monic_degree):
            tasks.append(("monic3d", None, idx, params, None))
    return tasks


def tasks_corollaries(section) -> List[Task]:
    sec = SweepSection.parse(section, 4)
    tasks: List[Task] = []
    for params in sec.params:
        for idx in indices_3d(sec.degree):
            for which in simplex3d.DERIVATIVE_IDS:
                tasks.append(("cor_deriv", which, idx, params, None))
            for which in simplex3d.WEIGHTED_IDS:
                tasks.append(("cor_weight", which, idx, params, None))
            for which in simplex3d.MULTIPLICATION_IDS:
                tasks.append(("cor_mult", which, idx, params, None))
    return tasks


def tasks_connections(section) -> List[Task]:
    tasks: List[Task] = []
    alpha = SweepSection.parse(_section(section, "alpha"), 6)
    xis = [parse_fraction(v) for v in _section(section, "alpha")["xi"]]
    for params in alpha.params:
        for idx in indices_3d(alpha.degree):
            for xi in xis + [params[0]]:
                tasks.append(("conn_alpha", None, idx, params, xi))
    general = SweepSection.parse(_section(section, "general"), 6)
    targets = parse_grid(_section(section, "general")["targets"], 4)
    for params in general.params:
        for idx in indices_3d(general.degree):
            for target in targets + [params[:4]]:
                tasks.append(("conn_general", None, idx, params, target))
    return tasks


def tasks_three_term(section) -> List[Task]:
    sec = SweepSection.parse(section, 6)
    return [
        ("three_term", None, idx, params, None)
        for params in sec.params
        for idx in indices_3d(sec.degree)
    ]


_TASK_BUILDERS = {
    "ladder1d": tasks_ladder1d,
    "m2d": tasks_m2d,
    "theorem1": tasks_theorem1,
    "second-order": tasks_second_order,
    "pde": tasks_pde,
    "corollaries": tasks_corollaries,
    "connections": tasks_connections,
    "three-term": tasks_three_term,
}


def run_suite(name: str, config: dict, jobs: int = 1) -> List[VerificationReport]:
    """Run one named suite from a parsed config; returns sorted reports."""
    if name not in _TASK_BUILDERS:
        raise KeyError(f"unknown suite {name!r}; expected one of {SUITES}")
    section = _section(config, "suites", name)
    tasks = _TASK_BUILDERS[name](section)
    reports = run_tasks(tasks, jobs=jobs)
    for r in reports:
        r.suite = name
    return reports


def load_config(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def default_config_path() -> str:
    """The shipped default sweep configuration (mirrors the test suite)."""
    here = os.path.dirname(os.path.abspath(__file__))
    path = os.path.join(here, "data", "default_sweep.json")
    if not os.path.exists(path):
        raise FileNotFoundError("default_sweep.json not found")
    return path


def report_payload(reports, summary) -> dict:
    return {
        "summary": summary,
        "reports": [r.to_json() for r in reports],
    }


def write_report(path: str, reports, summary) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report_payload(reports, summary), fh, indent=1, sort_keys=True)
        fh.write("\n")


__all__ = [
    "SUITES",
    "load_config",
    "default_config_path",
    "parse_fraction",
    "run_suite",
    "run_tasks",
    "summarize",
    "write_report",
]
