"""Exact and Monte Carlo laws of the above-mean count of a random sample."""

from ._eulerw import (
    EmpiricalPmf,
    ExactPmf,
    compare_pmf,
    count_above_mean,
    count_below_mean,
    descent_oracle_row,
    eulerian_alternating_sum,
    eulerian_number,
    eulerian_row,
    expected_gain,
    floor_sum_pmf,
    levy_limit_cdf,
    levy_limit_density,
    levy_wn_cdf,
    lp_probability,
    lp_probability_exact,
    lp_probability_mc,
    max_gain_over_subsets,
    normal_case_pmf,
    optimal_approval_set,
    polarized_exact,
    polarized_expected_utility,
    power_sum,
    sample_floor_sum,
    sample_stable,
    sample_wn,
    sorted_gaps,
    stable_wn_cdf_mc,
    verify_report_json,
    w_above_from_gaps,
    w_below_from_gaps,
    wn_cdf,
    wn_cdf_via_lp,
    wn_cdf_via_lp_exact,
    wn_pmf,
)

__all__ = [
    "EmpiricalPmf",
    "ExactPmf",
    "compare_pmf",
    "count_above_mean",
    "count_below_mean",
    "descent_oracle_row",
    "eulerian_alternating_sum",
    "eulerian_number",
    "eulerian_row",
    "expected_gain",
    "floor_sum_pmf",
    "levy_limit_cdf",
    "levy_limit_density",
    "levy_wn_cdf",
    "lp_probability",
    "lp_probability_exact",
    "lp_probability_mc",
    "max_gain_over_subsets",
    "normal_case_pmf",
    "optimal_approval_set",
    "polarized_exact",
    "polarized_expected_utility",
    "power_sum",
    "sample_floor_sum",
    "sample_stable",
    "sample_wn",
    "sorted_gaps",
    "stable_wn_cdf_mc",
    "verify_report_json",
    "w_above_from_gaps",
    "w_below_from_gaps",
    "wn_cdf",
    "wn_cdf_via_lp",
    "wn_cdf_via_lp_exact",
    "wn_pmf",
]
