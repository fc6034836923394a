"""Single-facility min-sum Weber location under the lift metric."""

from .continuous import (
    Candidate,
    OrdinateClass,
    SolveReport,
    ordinate_classes,
    procedure1_candidate,
    procedure2_candidate,
    solve,
)
from .discrete import DiscreteResult, discrete_min
from .median import (
    Excluded,
    IntervalSolution,
    PartialSumTable,
    UniquePoint,
    coalesce,
    weighted_median,
)
from .metric import (
    DemandPoint,
    InstanceError,
    Point,
    ProblemInstance,
    l1_distance,
    lift_distance,
    objective_value,
)
from .oracle import OracleResult, grid_sanity, lattice_candidates, oracle_solve

__all__ = [
    "Candidate", "DemandPoint", "DiscreteResult", "Excluded", "InstanceError",
    "IntervalSolution", "OracleResult", "OrdinateClass", "PartialSumTable", "Point",
    "ProblemInstance", "SolveReport", "UniquePoint", "coalesce", "discrete_min",
    "grid_sanity", "l1_distance", "lattice_candidates", "lift_distance",
    "objective_value", "oracle_solve", "ordinate_classes", "procedure1_candidate",
    "procedure2_candidate", "solve", "weighted_median",
]
