"""couplaw: class-coupling graph extraction and power-law analysis."""

from .graphs import (
    RELATIONSHIPS,
    CouplingGraphs,
    DegreeSeries,
    all_degree_series,
    build_graphs,
    degree_series,
    member_counts,
)
from .ingest import (
    ClassSummary,
    Corpus,
    load_summaries,
    parse_source,
    save_summaries,
    scan_tree,
)
from .robustness import RemovalExperiment, reachable_fraction, run_experiment
from .stats import (
    BucketedHistogram,
    CorrelationMatrix,
    FitResult,
    bucket,
    correlation_matrix,
    fit,
    fit_series,
)
from .synth import SynthParams, generate, sample_power_law

__version__ = "0.1.0"

__all__ = [
    "RELATIONSHIPS",
    "ClassSummary",
    "Corpus",
    "CouplingGraphs",
    "DegreeSeries",
    "BucketedHistogram",
    "CorrelationMatrix",
    "FitResult",
    "RemovalExperiment",
    "SynthParams",
    "all_degree_series",
    "bucket",
    "build_graphs",
    "correlation_matrix",
    "degree_series",
    "fit",
    "fit_series",
    "generate",
    "load_summaries",
    "member_counts",
    "parse_source",
    "reachable_fraction",
    "run_experiment",
    "sample_power_law",
    "save_summaries",
    "scan_tree",
]
