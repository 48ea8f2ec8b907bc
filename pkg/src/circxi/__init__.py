"""circxi: cut-free rank correlation for circular data.

The coefficient is built from cyclic ranks only, so it needs no origin
or cut point, is invariant under rotations and reflections of either
circle, and detects multi-winding relationships that first-order
circular correlations miss.
"""

__version__ = "0.1.0"

from circxi.angles import (
    CircularSample,
    CyclicRankProfile,
    TiesPolicy,
    cyclic_rank_profile,
    discrepancy_h,
    normalize_angles,
    resolve_ties,
)
from circxi.coefficient import (
    CoefficientReport,
    max_raw_value,
    xi_circular,
    xi_circular_directed,
    xi_circular_symmetric,
)
from circxi.competitors import CircularMean, circular_mean, fl_correlation, js_correlation
from circxi.linear import (
    CutPair,
    CutScanReport,
    angle_grid,
    cut_scan,
    sample_gap_grid,
    xi_borel_cut,
    xi_linear,
)
from circxi.null import (
    NullMoments,
    NullTestReport,
    edge_moment_oracle,
    enumerate_null,
    null_moments,
    test_normal,
    test_permutation,
)
from circxi.population import (
    MonteCarloResult,
    NoiseModel,
    SeriesResult,
    additive_noise_sampler,
    bessel_ratio,
    cut_distance_identity_check,
    h_cosine_expansion,
    noise_cf,
    xi_population_additive,
    xi_population_mc,
)
from circxi.simulation import (
    ExperimentPlan,
    ExperimentResult,
    ModelSpec,
    emit_curves,
    emit_tables,
    generate,
    run_experiment,
    table_plan,
)

__all__ = [
    "CircularSample",
    "CyclicRankProfile",
    "TiesPolicy",
    "cyclic_rank_profile",
    "discrepancy_h",
    "normalize_angles",
    "resolve_ties",
    "CoefficientReport",
    "max_raw_value",
    "xi_circular",
    "xi_circular_directed",
    "xi_circular_symmetric",
    "CircularMean",
    "circular_mean",
    "js_correlation",
    "fl_correlation",
    "CutPair",
    "CutScanReport",
    "angle_grid",
    "cut_scan",
    "sample_gap_grid",
    "xi_borel_cut",
    "xi_linear",
    "NullMoments",
    "NullTestReport",
    "edge_moment_oracle",
    "enumerate_null",
    "null_moments",
    "test_normal",
    "test_permutation",
    "MonteCarloResult",
    "NoiseModel",
    "SeriesResult",
    "additive_noise_sampler",
    "bessel_ratio",
    "cut_distance_identity_check",
    "h_cosine_expansion",
    "noise_cf",
    "xi_population_additive",
    "xi_population_mc",
    "ExperimentPlan",
    "ExperimentResult",
    "ModelSpec",
    "emit_curves",
    "emit_tables",
    "generate",
    "run_experiment",
    "table_plan",
]
