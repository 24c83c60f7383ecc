#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eulerw/rational.hpp"

namespace eulerw {

struct LpOptions {
    /// Minimum pairwise separation of the a-coefficients accepted by the
    /// float evaluator. The formula divides by products of (a_m - a_i), so
    /// nearly equal a's blow up cancellation; below the threshold we refuse
    /// rather than return digits that may all be noise. Set to 0 to disable.
    double min_separation = 1e-9;
};

/// P( sum a_i xi_i >= sum b_j eta_j ) for independent standard exponentials
/// xi, eta, via the partial-fraction closed form
///   sum_m a_m^(k+l-1) / ( prod_{i != m} (a_m - a_i) * prod_j (a_m + b_j) ).
/// Requires a_i > 0 pairwise distinct, b_j > 0, k + l >= 1.
/// k = 0 gives 0; l = 0 gives 1. Result clamped to [0, 1].
double lp_probability(std::span<const double> a, std::span<const double> b,
                      const LpOptions& options = {});

/// Same formula over exact rationals; no separation threshold needed.
Rational lp_probability_exact(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Monte Carlo estimate of the same event probability, n_samples draws of
/// all k + l exponentials. Deterministic for a fixed seed and any thread
/// count. Used as the stochastic oracle for the closed form.
double lp_probability_mc(std::span<const double> a, std::span<const double> b,
                         std::uint64_t n_samples, std::uint64_t seed, unsigned threads = 0);

/// P(W_n <= k) evaluated through the closed form with a = [1..k],
/// b = [1..n-k-1]; agrees with wn_cdf(n, k).
double wn_cdf_via_lp(int n, int k);
Rational wn_cdf_via_lp_exact(int n, int k);

}  // namespace eulerw
