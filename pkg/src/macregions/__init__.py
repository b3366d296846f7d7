"""Two-user Gaussian multiple-access rate regions.

Closed-form rates for superposition coding with successive cancellation,
time division, and frequency division; the regions and Pareto frontiers
they generate under per-user and sum power budgets; a numerical certificate
that the three schemes coincide when only total power is constrained; and
Monte Carlo estimators that check the formulas against sampled channels.
"""

from .core import (
    LN2,
    SCHEMES,
    ChannelConfig,
    PerUser,
    RatePair,
    ResourceSplit,
    SumPower,
    corner_points,
    fd_rate_pair,
    fd_touch_split,
    shannon_rate,
    sic_rate,
    sum_capacity,
    sum_power_rate_pair,
    td_rate_pair,
)
from .montecarlo import (
    MiEstimate,
    RateCheck,
    SampleBatch,
    SampleConfig,
    ValidationReport,
    entropy_knn,
    mi_plugin_gaussian,
    sic_cancel,
    simulate_mac,
    validate_sic_chain,
)
from .regions import (
    DEFAULT_RESOLUTION,
    DEFAULT_TOLERANCE,
    EquivalenceReport,
    Frontier,
    HalfSpace,
    Region,
    SubsetConstraint,
    dominates,
    fd_frontier,
    hausdorff,
    polymatroid_region,
    region_contains,
    superposition_frontier,
    superposition_region,
    td_frontier,
    verify_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "LN2",
    "SCHEMES",
    "ChannelConfig",
    "PerUser",
    "SumPower",
    "RatePair",
    "ResourceSplit",
    "shannon_rate",
    "sum_capacity",
    "sic_rate",
    "corner_points",
    "td_rate_pair",
    "fd_rate_pair",
    "fd_touch_split",
    "sum_power_rate_pair",
    "HalfSpace",
    "Region",
    "Frontier",
    "EquivalenceReport",
    "SubsetConstraint",
    "DEFAULT_RESOLUTION",
    "DEFAULT_TOLERANCE",
    "superposition_region",
    "td_frontier",
    "fd_frontier",
    "superposition_frontier",
    "region_contains",
    "dominates",
    "hausdorff",
    "verify_equivalence",
    "polymatroid_region",
    "SampleConfig",
    "SampleBatch",
    "MiEstimate",
    "RateCheck",
    "ValidationReport",
    "simulate_mac",
    "sic_cancel",
    "mi_plugin_gaussian",
    "entropy_knn",
    "validate_sic_chain",
    "__version__",
]
