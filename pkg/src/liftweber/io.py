"""Instance files, report serialization and random instances.

Instance JSON::

    {"name": "...", "description": "...",
     "points": [{"x": 4, "y": 4, "w": 4}, ...]}

Instance CSV: one ``x,y,w`` row per demand point, optional header row.
Location files (for the discrete solver) use ``{"locations": [{"x":..,"y":..}]}``
or ``x,y`` CSV rows.

Numbers are written as the shortest decimal that round-trips; integral
values are written without a fractional part.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
from pathlib import Path
from typing import IO, Any, Iterable

from . import median
from .continuous import SolveReport
from .discrete import DiscreteResult
from .metric import DemandPoint, InstanceError, Point, ProblemInstance
from .oracle import GridCheck, OracleResult


class ParseError(InstanceError):
    """Malformed input file."""


def num(v: float) -> int | float:
    v = float(v) + 0.0
    if v.is_integer() and abs(v) < 2**53:
        return int(v)
    return v


def _read_text(source: str | Path | IO[str]) -> tuple[str, str | None]:
    if hasattr(source, "read"):
        return source.read(), getattr(source, "name", None)
    path = Path(source)
    return path.read_text(), path.name


def _sniff(text: str, name: str | None, fmt: str | None) -> str:
    if fmt:
        if fmt not in ("json", "csv"):
            raise ParseError(f"unknown format {fmt!r}")
        return fmt
    if name and name.lower().endswith(".csv"):
        return "csv"
    if name and name.lower().endswith(".json"):
        return "json"
    return "json" if text.lstrip().startswith("{") else "csv"


def _number(raw: Any, where: str) -> float:
    if isinstance(raw, bool):
        raise ParseError(f"{where}: expected a number, got {raw!r}")
    try:
        v = float(raw)
    except (TypeError, ValueError):
        raise ParseError(f"{where}: not a number: {raw!r}") from None
    if not math.isfinite(v):
        raise ParseError(f"{where}: not finite: {raw!r}")
    return v


def _is_number(s: str) -> bool:
    try:
        float(s)
    except ValueError:
        return False
    return True


def _csv_rows(text: str, fields: tuple[str, ...]) -> list[tuple[int, list[float]]]:
    rows = [(n, r) for n, r in enumerate(csv.reader(io.StringIO(text)), start=1)
            if r and any(c.strip() for c in r)]
    if not rows:
        return []
    order = list(range(len(fields)))
    first = [c.strip() for c in rows[0][1]]
    if not any(_is_number(c) for c in first):
        header = [c.lower() for c in first]
        if set(fields) <= set(header):
            order = [header.index(f) for f in fields]
        rows = rows[1:]
    out = []
    for n, r in rows:
        if len(r) <= max(order):
            raise ParseError(f"line {n}: expected {len(fields)} fields, got {len(r)}")
        out.append((n, [_number(r[j].strip(), f"line {n}, field {f!r}")
                        for f, j in zip(fields, order)]))
    return out


def _build(records: Iterable[tuple[float, float, float]], merge_tol: float, **meta) -> ProblemInstance:
    pts = []
    for i, (x, y, w) in enumerate(records):
        if w <= 0:
            raise InstanceError(f"non-positive weight at point {i}")
        pts.append(DemandPoint(Point(x, y), w))
    if not pts:
        raise InstanceError("empty instance")
    inst = ProblemInstance(tuple(pts), **meta)
    return inst.merged(merge_tol) if merge_tol else inst


def parse_instance(source, fmt: str | None = None, merge_tol: float = 0.0) -> ProblemInstance:
    """Read and validate an instance from a path or an open text stream."""
    text, name = _read_text(source)
    fmt = _sniff(text, name, fmt)
    if fmt == "csv":
        rows = _csv_rows(text, ("x", "y", "w"))
        return _build((tuple(vals) for _, vals in rows), merge_tol)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}: {e.msg}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("points"), list):
        raise ParseError("JSON instance must be an object with a 'points' list")
    records = []
    for i, rec in enumerate(doc["points"]):
        if not isinstance(rec, dict):
            raise ParseError(f"point {i}: expected an object")
        records.append(tuple(
            _number(rec.get(k), f"point {i}, field {k!r}") for k in ("x", "y", "w")
        ))
    return _build(records, merge_tol, name=doc.get("name"), description=doc.get("description"))


def parse_locations(source, fmt: str | None = None) -> list[Point]:
    text, name = _read_text(source)
    fmt = _sniff(text, name, fmt)
    if fmt == "csv":
        locs = [Point(*vals) for _, vals in _csv_rows(text, ("x", "y"))]
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON at line {e.lineno}: {e.msg}") from None
        items = doc.get("locations") if isinstance(doc, dict) else doc
        if not isinstance(items, list):
            raise ParseError("JSON locations must be a list or an object with a 'locations' list")
        locs = []
        for i, rec in enumerate(items):
            if isinstance(rec, dict):
                x, y = rec.get("x"), rec.get("y")
            elif isinstance(rec, (list, tuple)) and len(rec) == 2:
                x, y = rec
            else:
                raise ParseError(f"location {i}: expected {{x, y}} or [x, y]")
            locs.append(Point(_number(x, f"location {i}, field 'x'"),
                              _number(y, f"location {i}, field 'y'")))
    if not locs:
        raise InstanceError("no permissible locations")
    return locs


def instance_to_dict(inst: ProblemInstance) -> dict:
    doc: dict[str, Any] = {}
    if inst.name is not None:
        doc["name"] = inst.name
    if inst.description is not None:
        doc["description"] = inst.description
    doc["points"] = [
        {"x": num(p.location.x1), "y": num(p.location.x2), "w": num(p.weight)}
        for p in inst.points
    ]
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _point(p: Point) -> list:
    return [num(p.x1), num(p.x2)]


def _median_outcome(out: median.MedianOutcome) -> dict:
    if isinstance(out, median.UniquePoint):
        return {"case": "unique", "value": num(out.value), "k": out.index}
    if isinstance(out, median.IntervalSolution):
        return {"case": "interval", "lo": num(out.lo), "hi": num(out.hi),
                "midpoint": num(out.midpoint), "k": out.index}
    return {"case": "excluded", "k": out.index}


def report_to_dict(
    report: SolveReport,
    *,
    all_candidates: bool = True,
    oracle: OracleResult | None = None,
    grid: GridCheck | None = None,
    match: bool | None = None,
) -> dict:
    doc: dict[str, Any] = {
        "instance": {"m": report.m, "d": report.d, "total_weight": num(report.total_weight)},
        "optimum": _point(report.optimum),
        "optimum_value": num(report.optimum_value),
        "ties": list(report.ties),
        "procedure2": _median_outcome(report.procedure2),
    }
    if all_candidates:
        doc["candidates"] = [
            {
                "point": _point(c.point),
                "source": c.tag,
                "interval": None if c.interval is None else [num(v) for v in c.interval],
                "objective": num(c.objective),
            }
            for c in report.candidates
        ]
    if oracle is not None:
        section: dict[str, Any] = {
            "optimum": _point(oracle.optimum),
            "optimum_value": num(oracle.optimum_value),
            "lattice_size": oracle.lattice_size,
            "match": bool(match),
        }
        if grid is not None:
            section["grid"] = {
                "passed": grid.passed,
                "best_sample": _point(grid.best_sample),
                "best_sample_value": num(grid.best_sample_value),
                "witness": None if grid.witness is None else _point(grid.witness),
            }
        doc["oracle"] = section
    return doc


def discrete_to_dict(result: DiscreteResult, locations: list[Point]) -> dict:
    return {
        "best_index": result.best_index,
        "best_location": _point(locations[result.best_index]),
        "best_value": num(result.best_value),
        "weighted_sums": [num(v) for v in result.weighted_sums],
        "ties": list(result.ties),
    }


def generate_instance(
    m: int,
    coord_range: tuple[int, int] = (-5, 5),
    weight_range: tuple[int, int] = (1, 5),
    seed: int = 0,
) -> ProblemInstance:
    """Random instance with integer coordinates and weights, reproducible by seed."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    (c_lo, c_hi), (w_lo, w_hi) = coord_range, weight_range
    if c_lo > c_hi:
        raise ValueError(f"empty coordinate range {coord_range}")
    if w_lo > w_hi or w_lo < 1:
        raise ValueError(f"weight range must be nonempty and >= 1, got {weight_range}")
    rng = random.Random(seed)
    pts = tuple(
        DemandPoint(
            Point(rng.randint(c_lo, c_hi), rng.randint(c_lo, c_hi)),
            rng.randint(w_lo, w_hi),
        )
        for _ in range(m)
    )
    return ProblemInstance(pts, name=f"random-m{m}-seed{seed}")
