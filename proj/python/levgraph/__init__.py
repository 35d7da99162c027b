"""Strictly increasing path existence via leveled-graph compilation."""

from ._core import (
    BaselineResult,
    BenchRow,
    BenchTable,
    CypherBundle,
    Diagnostic,
    EdgeRecord,
    InvalidGraphError,
    Level,
    LeveledGraph,
    LevgraphError,
    OracleResult,
    ParseError,
    PathStep,
    PropertyGraph,
    ProvenanceMismatchError,
    QueryAnswer,
    SizeStats,
    UnknownNodeError,
    __version__,
    baseline_trail_search,
    build_leveled,
    compute_levels,
    compute_speedup,
    export_bundle,
    generate_graph,
    increasing_path_exists,
    increasing_path_witness,
    oracle_exists,
    parse_graph,
    run_benchmark,
    serialize_graph,
    size_report,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
