"""Temporal motif counting: exact enumeration and window-sampling estimates."""
from .bounds import (
    ApproximationGoal,
    bennett_sample_size_a,
    bennett_sample_size_e,
    bennett_tail,
    hoeffding_sample_size_a,
    variance_bound_factor,
)
from .errors import PrestoError
from .evaluation import MapeReport, RunRecord, evaluate, mape_report
from .exact import (
    EdgeSlice,
    brute_force_count,
    count_instances,
    enumerate_instances,
    is_delta_instance,
)
from .ingest import parse_motif, parse_network, write_motif, write_network
from .model import (
    DeltaInstance,
    NetworkStats,
    TemporalEdge,
    TemporalMotif,
    TemporalNetwork,
    compute_stats,
    edge_start_support,
    sampling_interval,
    validate_motif,
)
from .motifs import connected_motifs, named_motif
from .synthetic import uniform_network
from .sampler import (
    DEFAULT_SEED,
    EstimateResult,
    EstimatorConfig,
    exhaustive_expectation_a,
    exhaustive_expectation_e,
    run_estimate,
    weight_a,
    weight_e,
)

__version__ = "0.1.0"
