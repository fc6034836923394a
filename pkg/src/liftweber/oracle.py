"""Brute-force verification of solver output.

``oracle_solve`` enumerates a finite lattice that always contains a global
minimizer:

* on a horizontal line through demand ordinate ``c`` the objective is convex
  piecewise-linear in ``x1`` with kinks only at the on-line abscissae and at
  0, so some lattice point on that line is optimal for the line;
* off every such line the objective is ``sum(w_i * (|x1| + |x2 - a2_i| +
  |a1_i|))``. Its infimum is approached at ``x1 = 0`` with ``x2`` near a
  weighted median of the ordinates, and the on-line value at ``(0, ordinate)``
  is never larger than that limit.

Hence ``({a1_i} | {0}) x {distinct a2}`` suffices. ``grid_sanity`` is a second,
cruder check: a dense sample that must never beat a claimed optimum.

Lattice evaluation is a plain Python loop over :func:`lift_distance`; it does
not share code with the vectorized objective used by the solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .discrete import tie_break_key
from .metric import Point, ProblemInstance, lift_distance, objective_values

GRID_ATOL = 1e-9


@dataclass(frozen=True)
class OracleResult:
    optimum: Point
    optimum_value: float
    lattice_size: int


@dataclass(frozen=True)
class GridCheck:
    passed: bool
    best_sample: Point
    best_sample_value: float
    witness: Point | None = None  # set only on failure


def lattice_candidates(inst: ProblemInstance) -> list[Point]:
    xs = sorted(set(p.location.x1 for p in inst.points) | {0.0})
    ys = sorted(set(p.location.x2 for p in inst.points))
    return [Point(x, y) for y in ys for x in xs]


def _brute_objective(x: Point, inst: ProblemInstance) -> float:
    return math.fsum(p.weight * lift_distance(p.location, x) for p in inst.points)


def oracle_solve(inst: ProblemInstance) -> OracleResult:
    lattice = lattice_candidates(inst)
    values = [_brute_objective(p, inst) for p in lattice]
    best = min(values)
    k = min(
        (k for k, v in enumerate(values) if v == best),
        key=lambda k: tie_break_key(lattice[k], k),
    )
    return OracleResult(lattice[k], best, len(lattice))


def _span(lo: float, hi: float) -> tuple[float, float]:
    if hi - lo <= 0:
        mid = (lo + hi) / 2
        return mid - 0.5, mid + 0.5
    return lo, hi


def grid_axes(inst: ProblemInstance, resolution: int) -> tuple[np.ndarray, np.ndarray]:
    """Sample axes over the demand bounding box, widened to include x1 = 0."""
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution}")
    x_lo, x_hi = _span(min(inst.abscissae.min(), 0.0), max(inst.abscissae.max(), 0.0))
    y_lo, y_hi = _span(inst.ordinates.min(), inst.ordinates.max())
    return np.linspace(x_lo, x_hi, resolution), np.linspace(y_lo, y_hi, resolution)


def grid_sanity(inst: ProblemInstance, resolution: int, claimed_value: float) -> GridCheck:
    """Fail if any grid sample is strictly below ``claimed_value - 1e-9``."""
    gx, gy = grid_axes(inst, resolution)
    X, Y = np.meshgrid(gx, gy)
    vals = objective_values(X.ravel(), Y.ravel(), inst)
    k = int(np.argmin(vals))
    best = Point(X.flat[k], Y.flat[k])
    best_val = float(vals[k])
    if best_val < claimed_value - GRID_ATOL:
        return GridCheck(False, best, best_val, witness=best)
    return GridCheck(True, best, best_val)
