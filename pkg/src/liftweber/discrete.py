"""Discrete min-sum location: choose the best of a fixed list of sites."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .metric import Point, ProblemInstance, objective_values


@dataclass(frozen=True)
class DiscreteResult:
    best_index: int
    weighted_sums: tuple[float, ...]
    ties: tuple[int, ...]

    @property
    def best_value(self) -> float:
        return self.weighted_sums[self.best_index]


def tie_break_key(point: Point, index: int) -> tuple[float, float, int]:
    """Order among equal objectives: smallest x1, then x2, then list position."""
    return (point.x1, point.x2, index)


def pick_minimum(locations: Sequence[Point], values: Sequence[float]) -> tuple[int, tuple[int, ...]]:
    best = min(values)
    ties = tuple(k for k, v in enumerate(values) if v == best)
    winner = min(ties, key=lambda k: tie_break_key(locations[k], k))
    return winner, ties


def discrete_min(inst: ProblemInstance, locations: Sequence[Point]) -> DiscreteResult:
    locations = list(locations)
    if not locations:
        raise ValueError("no permissible locations")
    xs = np.array([p.x1 for p in locations])
    ys = np.array([p.x2 for p in locations])
    sums = tuple(float(v) for v in objective_values(xs, ys, inst))
    best, ties = pick_minimum(locations, sums)
    return DiscreteResult(best, sums, ties)
