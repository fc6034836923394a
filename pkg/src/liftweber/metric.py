"""Lift-metric geometry and objective evaluation.

The lift (raspberry picker) metric joins two points on the same horizontal
line directly; every other trip runs horizontally to the y-axis, along it,
and back out::

    L(A, B) = |xa - xb|                   if ya == yb
            = |xa| + |ya - yb| + |xb|     otherwise

The ``ya == yb`` test is exact. Near-equal ordinates are merged once, when an
instance is built (see :meth:`ProblemInstance.merged`), never per call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class InstanceError(ValueError):
    """Invalid problem data (non-finite coordinate, bad weight, empty input)."""


def _finite(value, what: str) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise InstanceError(f"{what} is not a number: {value!r}") from None
    if not math.isfinite(v):
        raise InstanceError(f"{what} is not finite: {value!r}")
    # + 0.0 folds -0.0 into 0.0
    return v + 0.0


@dataclass(frozen=True)
class Point:
    x1: float
    x2: float

    def __post_init__(self):
        object.__setattr__(self, "x1", _finite(self.x1, "x1"))
        object.__setattr__(self, "x2", _finite(self.x2, "x2"))

    def as_tuple(self) -> tuple[float, float]:
        return (self.x1, self.x2)


@dataclass(frozen=True)
class DemandPoint:
    location: Point
    weight: float

    def __post_init__(self):
        w = _finite(self.weight, "weight")
        if w <= 0:
            raise InstanceError(f"non-positive weight {self.weight!r}")
        object.__setattr__(self, "weight", w)


@dataclass(frozen=True)
class ProblemInstance:
    """An ordered, immutable list of weighted demand points.

    Column views (``abscissae``, ``ordinates``, ``weights``) are read-only
    numpy arrays built once at construction.
    """

    points: tuple[DemandPoint, ...]
    name: str | None = None
    description: str | None = None
    abscissae: np.ndarray = field(init=False, repr=False, compare=False)
    ordinates: np.ndarray = field(init=False, repr=False, compare=False)
    weights: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = tuple(self.points)
        if not pts:
            raise InstanceError("empty instance")
        for i, p in enumerate(pts):
            if not isinstance(p, DemandPoint):
                raise InstanceError(f"point {i} is not a DemandPoint")
        object.__setattr__(self, "points", pts)
        for attr, col in (
            ("abscissae", [p.location.x1 for p in pts]),
            ("ordinates", [p.location.x2 for p in pts]),
            ("weights", [p.weight for p in pts]),
        ):
            arr = np.array(col, dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, attr, arr)

    @classmethod
    def from_lists(
        cls,
        lp: Iterable[Sequence[float]],
        lt: Iterable[float],
        *,
        merge_tol: float = 0.0,
        name: str | None = None,
    ) -> "ProblemInstance":
        """Build from a list of ``(x1, x2)`` pairs and a parallel weight list."""
        lp, lt = list(lp), list(lt)
        if len(lp) != len(lt):
            raise InstanceError(f"{len(lp)} points but {len(lt)} weights")
        pts = []
        for i, (xy, w) in enumerate(zip(lp, lt)):
            x1, x2 = xy
            if _finite(w, f"weight at point {i}") <= 0:
                raise InstanceError(f"non-positive weight at point {i}")
            pts.append(DemandPoint(Point(x1, x2), w))
        inst = cls(tuple(pts), name=name)
        return inst.merged(merge_tol) if merge_tol > 0 else inst

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def total_weight(self) -> float:
        return math.fsum(p.weight for p in self.points)

    def distinct_ordinates(self) -> list[float]:
        seen = dict.fromkeys(p.location.x2 for p in self.points)
        return list(seen)

    def merged(self, eps: float) -> "ProblemInstance":
        """Snap coordinates closer than ``eps`` onto a shared value.

        Each axis is sorted and split wherever consecutive values differ by
        more than ``eps``; every value in a run is replaced by the run's
        smallest member. ``eps == 0`` returns the instance unchanged.
        """
        if eps < 0 or not math.isfinite(eps):
            raise InstanceError(f"merge tolerance must be finite and >= 0, got {eps!r}")
        if eps == 0:
            return self
        xs = _snap([p.location.x1 for p in self.points], eps)
        ys = _snap([p.location.x2 for p in self.points], eps)
        pts = tuple(
            DemandPoint(Point(x, y), p.weight) for x, y, p in zip(xs, ys, self.points)
        )
        return ProblemInstance(pts, name=self.name, description=self.description)


def _snap(values: list[float], eps: float) -> list[float]:
    order = sorted(range(len(values)), key=values.__getitem__)
    out = list(values)
    rep = prev = None
    for i in order:
        v = values[i]
        if prev is None or v - prev > eps:
            rep = v
        out[i] = rep
        prev = v
    return out


def lift_distance(a: Point, b: Point) -> float:
    if a.x2 == b.x2:
        return abs(a.x1 - b.x1)
    return abs(a.x1) + abs(a.x2 - b.x2) + abs(b.x1)


def l1_distance(a: Point, b: Point) -> float:
    return abs(a.x1 - b.x1) + abs(a.x2 - b.x2)


def objective_values(xs: np.ndarray, ys: np.ndarray, inst: ProblemInstance) -> np.ndarray:
    """Weighted lift-distance sums at many locations at once.

    ``xs`` and ``ys`` are equal-length 1-D arrays of location coordinates.
    Locations are processed in blocks so memory stays bounded for large
    instances.
    """
    xs = np.asarray(xs, dtype=float).ravel()
    ys = np.asarray(ys, dtype=float).ravel()
    if xs.shape != ys.shape:
        raise ValueError("xs and ys must have the same length")
    a1, a2, w = inst.abscissae, inst.ordinates, inst.weights
    abs_a1 = np.abs(a1)
    out = np.empty(xs.shape[0], dtype=float)
    block = max(1, 2_000_000 // inst.m)
    for start in range(0, xs.shape[0], block):
        bx = xs[start:start + block, None]
        by = ys[start:start + block, None]
        same = a2[None, :] == by
        via_spine = np.abs(bx) + np.abs(by - a2[None, :]) + abs_a1[None, :]
        direct = np.abs(bx - a1[None, :])
        out[start:start + block] = np.where(same, direct, via_spine) @ w
    return out


def objective_value(x: Point, inst: ProblemInstance) -> float:
    """Total weighted lift distance from every demand point to ``x``."""
    return float(objective_values(np.array([x.x1]), np.array([x.x2]), inst)[0])
