"""Hardy-nonlocality and CHSH analysis toolkit for two-qubit states."""

from .qstate import (
    DomainError,
    EntanglementClass,
    ExperimentConfig,
    MeasurementSetting,
    SchmidtState,
    config_from_file,
    config_from_text,
    entanglement_class,
    make_state,
)
from .correlations import (
    CorrelationSet,
    JointDistribution,
    PerfectCorrelation,
    batch_correlation,
    batch_probabilities,
    correlation,
    correlation_set,
    is_perfectly_correlated,
    joint_distribution,
)
from .hardy import (
    DegenerateBeta0,
    HardyCheck,
    HardySolution,
    HardyVariant,
    NotPartiallyEntangled,
    check_hardy,
    hardy_inequality_lhs_rhs,
    maximal_entanglement_forcing,
    solve_hardy,
    solve_vanishing_condition,
)
from .chsh import (
    DELTA_MAX,
    GOLDEN_MEAN,
    ChshResult,
    ScanGrid,
    delta_closed_form,
    delta_from_correlations,
    delta_from_probabilities,
    evaluate,
    maximal_free_angle_delta,
    optimize_delta,
    scan_surface,
)
from .lhv import (
    ALL_ASSIGNMENTS,
    DeterministicAssignment,
    MixtureStrategy,
    StochasticStrategy,
    TrialTally,
    is_locally_realizable,
    lhv_joint_probability,
    local_realism_forcing,
    simulate,
    strategy_from_text,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "DomainError",
    "EntanglementClass",
    "ExperimentConfig",
    "MeasurementSetting",
    "SchmidtState",
    "config_from_file",
    "config_from_text",
    "entanglement_class",
    "make_state",
    "CorrelationSet",
    "JointDistribution",
    "PerfectCorrelation",
    "batch_correlation",
    "batch_probabilities",
    "correlation",
    "correlation_set",
    "is_perfectly_correlated",
    "joint_distribution",
    "DegenerateBeta0",
    "HardyCheck",
    "HardySolution",
    "HardyVariant",
    "NotPartiallyEntangled",
    "check_hardy",
    "hardy_inequality_lhs_rhs",
    "maximal_entanglement_forcing",
    "solve_hardy",
    "solve_vanishing_condition",
    "DELTA_MAX",
    "GOLDEN_MEAN",
    "ChshResult",
    "ScanGrid",
    "delta_closed_form",
    "delta_from_correlations",
    "delta_from_probabilities",
    "evaluate",
    "maximal_free_angle_delta",
    "optimize_delta",
    "scan_surface",
    "ALL_ASSIGNMENTS",
    "DeterministicAssignment",
    "MixtureStrategy",
    "StochasticStrategy",
    "TrialTally",
    "is_locally_realizable",
    "lhv_joint_probability",
    "local_realism_forcing",
    "simulate",
    "strategy_from_text",
]
