"""Continuous single-facility Weber problem under the lift metric.

The optimum either lies on a horizontal line through some demand point, or
off all of them. The two situations are handled separately and produce a
short list of candidates, which are then ranked by the true objective.

On the line ``x2 = c`` (one per distinct demand ordinate ``c``), demand points
with ordinate ``c`` are reached directly and all others via the y-axis, so the
objective is, up to a constant, ``sum(w_i * |x1 - b_i|)`` where ``b_i`` is the
point's abscissa if it lies on the line and ``0`` otherwise. Its weighted
median gives the line's candidate.

Off every line, the objective separates into ``|x1|`` (minimized at 0) and a
1-D weighted median over the ordinates that must avoid every ordinate. That
only succeeds when the half-total lands exactly on a partial sum, leaving an
open gap between two ordinates; the candidate is the gap midpoint on the
y-axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np

from . import median
from .discrete import discrete_min
from .metric import Point, ProblemInstance

PROCEDURE1 = "procedure1"
PROCEDURE2 = "procedure2"


@dataclass(frozen=True)
class OrdinateClass:
    value: float
    member_indices: tuple[int, ...]


@dataclass(frozen=True)
class Candidate:
    point: Point
    source: Literal["procedure1", "procedure2"]
    class_value: float | None = None
    interval: tuple[float, float] | None = None
    objective: float | None = None

    @property
    def tag(self) -> str:
        if self.source == PROCEDURE1:
            return f"{PROCEDURE1}:{_fmt(self.class_value)}"
        return PROCEDURE2


def _fmt(v: float) -> str:
    return str(int(v)) if float(v).is_integer() and abs(v) < 2**53 else repr(v)


@dataclass(frozen=True)
class SolveReport:
    candidates: tuple[Candidate, ...]
    optimum: Point
    optimum_value: float
    ties: tuple[int, ...]
    m: int
    d: int
    total_weight: float
    procedure2: median.MedianOutcome

    @property
    def best(self) -> Candidate:
        return next(c for c in self.candidates if c.point == self.optimum)


def ordinate_classes(inst: ProblemInstance) -> list[OrdinateClass]:
    """Group demand indices by exact ordinate, in order of first appearance."""
    groups: dict[float, list[int]] = {}
    for i, p in enumerate(inst.points):
        groups.setdefault(p.location.x2, []).append(i)
    return [OrdinateClass(v, tuple(idx)) for v, idx in groups.items()]


def substituted_abscissae(inst: ProblemInstance, cls: OrdinateClass) -> list[float]:
    """Per-point breakpoints on the line ``x2 = cls.value``: own abscissa if on
    the line, else 0 (the spine crossing)."""
    members = set(cls.member_indices)
    return [p.location.x1 if i in members else 0.0 for i, p in enumerate(inst.points)]


def procedure1_candidate(
    inst: ProblemInstance, cls: OrdinateClass, total_weight: float | None = None
) -> Candidate | None:
    # Off-line points all sit at breakpoint 0, so they enter as one merged
    # entry; after coalescing this is the same table as the full list.
    if total_weight is None:
        total_weight = inst.total_weight
    a1, w = inst.abscissae, inst.weights
    idx = list(cls.member_indices)
    values = [float(a1[i]) for i in idx]
    weights = [float(w[i]) for i in idx]
    off_line = total_weight - math.fsum(weights)
    if len(idx) < inst.m and off_line > 0:
        values.append(0.0)
        weights.append(off_line)
    out = median.weighted_median(values, weights, median.STANDARD)
    if isinstance(out, median.UniquePoint):
        return Candidate(Point(out.value, cls.value), PROCEDURE1, cls.value)
    if isinstance(out, median.IntervalSolution):
        return Candidate(
            Point(out.midpoint, cls.value), PROCEDURE1, cls.value, (out.lo, out.hi)
        )
    return None


def procedure2_outcome(inst: ProblemInstance) -> median.MedianOutcome:
    return median.weighted_median(inst.ordinates, inst.weights, median.STRICT_INTERIOR)


def procedure2_candidate(inst: ProblemInstance) -> Candidate | None:
    out = procedure2_outcome(inst)
    if isinstance(out, median.IntervalSolution):
        return Candidate(Point(0.0, out.midpoint), PROCEDURE2, None, (out.lo, out.hi))
    return None


def generate_candidates(inst: ProblemInstance) -> tuple[list[Candidate], median.MedianOutcome]:
    total = inst.total_weight
    cands = []
    for cls in ordinate_classes(inst):
        c = procedure1_candidate(inst, cls, total)
        if c is not None:
            cands.append(c)
    p2 = procedure2_outcome(inst)
    if isinstance(p2, median.IntervalSolution):
        cands.append(Candidate(Point(0.0, p2.midpoint), PROCEDURE2, None, (p2.lo, p2.hi)))
    return cands, p2


def solve(inst: ProblemInstance) -> SolveReport:
    """Find a global minimizer of the weighted lift-distance sum."""
    cands, p2 = generate_candidates(inst)
    result = discrete_min(inst, [c.point for c in cands])
    cands = tuple(replace(c, objective=v) for c, v in zip(cands, result.weighted_sums))
    best = cands[result.best_index]
    d = len(np.unique(inst.ordinates))
    return SolveReport(
        candidates=cands,
        optimum=best.point,
        optimum_value=best.objective,
        ties=result.ties,
        m=inst.m,
        d=d,
        total_weight=inst.total_weight,
        procedure2=p2,
    )
