"""K-tier downlink interference simulator: power-normalized association analysis."""

from ._core import (
    ExperimentSummary,
    NetworkConfig,
    expected_interference_conventional,
    expected_interference_proposed,
    interference_prefactor,
    ks_statistic,
    max_power_cdf_direct,
    max_power_cdf_tpnm,
    mean_candidate_count,
    mean_candidate_count_by_integral,
    min_d_cdf,
    min_d_pdf,
    nearest_distance_cdf,
    nearest_distance_pdf,
    normalized_intensity,
    r_opt_cdf,
    r_opt_pdf,
    run_experiment,
    run_trial,
    run_validation,
    scale_factor,
    tier_fraction,
    tier_power_cdf,
    tier_power_pdf,
    victim_distance_cdf,
    victim_distance_pdf,
)

__version__ = "0.1.0"

__all__ = [
    "ExperimentSummary",
    "NetworkConfig",
    "expected_interference_conventional",
    "expected_interference_proposed",
    "interference_prefactor",
    "ks_statistic",
    "max_power_cdf_direct",
    "max_power_cdf_tpnm",
    "mean_candidate_count",
    "mean_candidate_count_by_integral",
    "min_d_cdf",
    "min_d_pdf",
    "nearest_distance_cdf",
    "nearest_distance_pdf",
    "normalized_intensity",
    "r_opt_cdf",
    "r_opt_pdf",
    "run_experiment",
    "run_trial",
    "run_validation",
    "scale_factor",
    "tier_fraction",
    "tier_power_cdf",
    "tier_power_pdf",
    "victim_distance_cdf",
    "victim_distance_pdf",
]
