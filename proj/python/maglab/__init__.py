"""Magnitude of finite metric spaces and compact subsets of the real line."""

from ._maglab import (
    ConvergenceReport,
    CounterexampleReport,
    FiniteMetricSpace,
    MaglabError,
    MagnitudeFunctionSample,
    OnePointCurve,
    PdCertificate,
    Weighting,
    __version__,
    check_positive_definite,
    estimate_interval_magnitude,
    from_distance_matrix,
    from_points,
    grid_net_lp,
    hausdorff_distance,
    hausdorff_real,
    interval_union_magnitude,
    kt_truncation,
    lipschitz_coefficient,
    load_interval_union,
    load_point_cloud,
    magnitude,
    magnitude_function_samples,
    magnitude_via_adjugate,
    matrix_magnitude,
    normalize_intervals,
    one_point_curve,
    halfline_counterexample,
    real_finite_magnitude,
    naturals_counterexample,
    scale,
    similarity_matrix,
    solve_weighting,
    subspace,
    tanh_gap_check,
    thicken,
    thickening_growth_bound,
    uniform_net,
)

__all__ = [
    "ConvergenceReport",
    "CounterexampleReport",
    "FiniteMetricSpace",
    "MaglabError",
    "MagnitudeFunctionSample",
    "OnePointCurve",
    "PdCertificate",
    "Weighting",
    "__version__",
    "check_positive_definite",
    "estimate_interval_magnitude",
    "from_distance_matrix",
    "from_points",
    "grid_net_lp",
    "hausdorff_distance",
    "hausdorff_real",
    "interval_union_magnitude",
    "kt_truncation",
    "lipschitz_coefficient",
    "load_interval_union",
    "load_point_cloud",
    "magnitude",
    "magnitude_function_samples",
    "magnitude_via_adjugate",
    "matrix_magnitude",
    "normalize_intervals",
    "one_point_curve",
    "halfline_counterexample",
    "real_finite_magnitude",
    "naturals_counterexample",
    "scale",
    "similarity_matrix",
    "solve_weighting",
    "subspace",
    "tanh_gap_check",
    "thicken",
    "thickening_growth_bound",
    "uniform_net",
]
