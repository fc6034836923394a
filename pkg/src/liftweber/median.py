"""One-dimensional weighted median by half-total crossing of partial sums.

Duplicates are always coalesced before the case analysis, so the table has
strictly increasing values and an equality crossing always lands between two
distinct values.

Two modes share the same crossing detection:

``standard``
    a strict crossing inside ``(S[k-1], S[k])`` gives the unique minimizer
    ``v[k]``; an exact hit ``S[k] == S[q]/2`` gives the interval
    ``[v[k], v[k+1]]``.
``strict_interior``
    the sought coordinate must avoid every input value, so a strict crossing
    yields :class:`Excluded` instead of a point. Exact hits still give an
    interval (its open interior is admissible).

Indices ``k`` are 1-based positions in the coalesced table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence, Union

STANDARD = "standard"
STRICT_INTERIOR = "strict_interior"
Mode = Literal["standard", "strict_interior"]

# relative tolerance for the half-total equality test on non-integer weights
HALF_TOTAL_RTOL = 1e-12


@dataclass(frozen=True)
class PartialSumTable:
    sorted_values: tuple[float, ...]
    coalesced_weights: tuple[float, ...]
    cumulative: tuple[float, ...]  # S[0] = 0, S[k] = S[k-1] + weight k

    @property
    def q(self) -> int:
        return len(self.sorted_values)

    @property
    def total(self) -> float:
        return self.cumulative[-1]


@dataclass(frozen=True)
class UniquePoint:
    value: float
    index: int


@dataclass(frozen=True)
class IntervalSolution:
    lo: float
    hi: float
    midpoint: float
    index: int


@dataclass(frozen=True)
class Excluded:
    index: int


MedianOutcome = Union[UniquePoint, IntervalSolution, Excluded]


def coalesce(values: Sequence[float], weights: Sequence[float]) -> PartialSumTable:
    """Merge equal values (summing their weights), sort, and accumulate."""
    if len(values) != len(weights):
        raise ValueError(f"{len(values)} values but {len(weights)} weights")
    if len(values) == 0:
        raise ValueError("empty value list")
    merged: dict[float, float] = {}
    for v, w in zip(values, weights):
        v, w = float(v), float(w)
        if not math.isfinite(v):
            raise ValueError(f"non-finite value {v!r}")
        if not (w > 0 and math.isfinite(w)):
            raise ValueError(f"weights must be positive and finite, got {w!r}")
        v += 0.0
        merged[v] = merged.get(v, 0.0) + w
    keys = sorted(merged)
    ws = tuple(merged[k] for k in keys)
    cum = [0.0]
    for w in ws:
        cum.append(cum[-1] + w)
    return PartialSumTable(tuple(keys), ws, tuple(cum))


def classify(table: PartialSumTable, mode: Mode = STANDARD) -> MedianOutcome:
    """Run the half-total case analysis on an already coalesced table."""
    if mode not in (STANDARD, STRICT_INTERIOR):
        raise ValueError(f"unknown mode {mode!r}")
    S = table.cumulative
    q = table.q
    total = S[q]
    half = total / 2
    exact = all(float(w).is_integer() for w in table.coalesced_weights)
    tol = 0.0 if exact else HALF_TOTAL_RTOL * total

    for k in range(1, q + 1):
        # k < q here: S[q] - half = total/2 > tol
        if abs(S[k] - half) <= tol:
            lo, hi = table.sorted_values[k - 1], table.sorted_values[k]
            return IntervalSolution(lo, hi, (lo + hi) / 2, k)
        if S[k - 1] < half < S[k]:
            if mode == STRICT_INTERIOR:
                return Excluded(k)
            return UniquePoint(table.sorted_values[k - 1], k)
    raise AssertionError(f"no half-total crossing found in {S!r}")


def weighted_median(
    values: Sequence[float], weights: Sequence[float], mode: Mode = STANDARD
) -> MedianOutcome:
    """Minimize ``sum(w * |x - v|)`` over ``x`` (see module docstring for modes)."""
    return classify(coalesce(values, weights), mode)
