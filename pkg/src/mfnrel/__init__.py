"""Exact reliability evaluation for multistate flow networks under joint
time and budget limits, plus the benchmarking lab around it."""

__version__ = "0.1.0"

from .errors import (
    BenchmarkMismatchError,
    EmptyCatalogError,
    GenerationError,
    InvariantError,
    ParseError,
    ResourceLimitError,
    ZeroCapacityError,
)
from .model import (
    INFEASIBLE,
    Arc,
    Comparison,
    MinimalPath,
    Network,
    Query,
    StateVector,
    arc_transmit,
    best_time,
    compare,
    path_capacity,
    path_cost,
    path_stats,
    path_time,
)
from .paths import CatalogReport, MpCatalog, enumerate_mps, validate_catalog
from .solver import SolutionSet, is_real_dtb, min_feasible_capacity, solve_a1, solve_a2
from .reliability import (
    TailTable,
    brute_force_reliability,
    reliability,
    union_prob_ie,
    upset_prob,
)
from .bench import (
    BenchRecord,
    Fig3Fixture,
    GenConfig,
    GeneratedInstance,
    ProfileData,
    capacity_distribution,
    demand_grid,
    derive_query,
    fig3_fixture,
    generate_instance,
    pan_european_fixture,
    performance_profile,
    run_benchmark,
    times_by_instance,
)
from .instance_io import ParsedInstance, parse, parse_file, write, write_file

__all__ = [
    "__version__",
    "INFEASIBLE",
    "Arc",
    "BenchRecord",
    "BenchmarkMismatchError",
    "CatalogReport",
    "Comparison",
    "EmptyCatalogError",
    "Fig3Fixture",
    "GenConfig",
    "GeneratedInstance",
    "GenerationError",
    "InvariantError",
    "MinimalPath",
    "MpCatalog",
    "Network",
    "ParseError",
    "ParsedInstance",
    "ProfileData",
    "Query",
    "ResourceLimitError",
    "SolutionSet",
    "StateVector",
    "TailTable",
    "ZeroCapacityError",
    "arc_transmit",
    "best_time",
    "brute_force_reliability",
    "capacity_distribution",
    "compare",
    "demand_grid",
    "derive_query",
    "enumerate_mps",
    "fig3_fixture",
    "generate_instance",
    "is_real_dtb",
    "min_feasible_capacity",
    "pan_european_fixture",
    "parse",
    "parse_file",
    "path_capacity",
    "path_cost",
    "path_stats",
    "path_time",
    "performance_profile",
    "reliability",
    "run_benchmark",
    "solve_a1",
    "solve_a2",
    "times_by_instance",
    "union_prob_ie",
    "upset_prob",
    "validate_catalog",
    "write",
    "write_file",
]
