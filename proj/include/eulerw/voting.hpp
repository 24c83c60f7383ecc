#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eulerw/mc.hpp"

namespace eulerw {

/// Indicator list of the mean-threshold ballot: approve candidate j exactly
/// when U_j strictly exceeds the average utility. Its size always equals
/// count_above_mean(utilities).
std::vector<int> optimal_approval_set(std::span<const double> utilities);

/// Expected utility change from casting the ballot, given a uniformly random
/// swing pair hit with probability p:  p * n * sum_j I_j (U_j - mean).
double expected_gain(std::span<const double> utilities, std::span<const int> indicators,
                     double p);

/// Brute-force maximum of expected_gain over all 2^n ballots (n <= 20).
double max_gain_over_subsets(std::span<const double> utilities, double p);

/// Empirical law of the optimal-ballot size under i.i.d. model utilities.
EmpiricalPmf approved_count_distribution(const UtilityModel& model, int n,
                                         std::uint64_t n_samples, std::uint64_t seed,
                                         unsigned threads = 0);

/// Subset of the three candidates A, B, C.
struct Ballot {
    bool a = false;
    bool b = false;
    bool c = false;

    /// Parses strings like "AB", "a", "" or "none" (case-insensitive).
    static Ballot parse(const std::string& text);
    std::string to_string() const;
};

/// Three-candidate polarized electorate: m voters approve A, m approve B,
/// and every one of the 2m also approves C on an independent fair coin flip.
/// Ties resolve by adding an independent uniform(0,1) jitter vote per
/// candidate. my_utilities are for (A, B, C).
struct PolarizedScenario {
    long m = 1;
    std::array<double, 3> my_utilities{10.0, 6.0, 0.0};
    std::uint64_t seed = 0;
};

/// Monte Carlo estimate of the expected winner utility after adding my
/// ballot. Deterministic in (scenario, ballot, n_samples) for any thread
/// count.
double polarized_scenario_expected_utility(const PolarizedScenario& scenario, Ballot ballot,
                                           std::uint64_t n_samples, unsigned threads = 0);

/// Analytic expected winner utility for the same model, by summing the
/// binomial law of C's approvals with uniform tie-breaking. Reference value
/// for the simulator at any finite m.
double polarized_scenario_exact(long m, const std::array<double, 3>& my_utilities,
                                Ballot ballot);

}  // namespace eulerw
