"""Great-deluge hyper-heuristic for uncapacitated exam timetabling."""

from ._core import (
    BatchCell,
    BatchReport,
    BatchRow,
    FeasibilityReport,
    FileError,
    GeneratorParams,
    HeuristicId,
    InstanceStats,
    ParseError,
    ProblemInstance,
    ProximityCost,
    RunConfig,
    RunResult,
    SlotsExhausted,
    Timetable,
    UtilityTable,
    Variant,
    check_feasibility,
    construct_initial_le,
    evaluate_cost,
    generate_instance,
    instance_stats,
    invariant_violations,
    load_toronto,
    make_instance,
    parse_toronto,
    parse_variant,
    proximity_weight,
    run_batch,
    run_hh,
    update_utility,
)

__version__ = "0.1.0"
