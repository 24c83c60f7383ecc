#pragma once

#include <cstdint>
#include <vector>

#include "eulerw/rng.hpp"

namespace eulerw {

/// Partial power sum: sum_{j=1}^{k} j^alpha; zero for k = 0.
double power_sum(double alpha, int k);

/// P(W_n <= k) for utilities built from index-1/2 stable gaps:
///   (2/pi) * atan( sum_{j<=k} sqrt(j) / sum_{j<=n-1-k} sqrt(j) ),
/// with value 1 at k = n-1 where the denominator sum is empty.
double levy_wn_cdf(int n, int k);

/// Limit law of W_n/n in the index-1/2 model.
/// F(x) = (2/pi) * atan((x/(1-x))^(3/2)) on [0, 1].
double levy_limit_cdf(double x);

/// Density of the limit law on (0, 1):
/// f(x) = (3/pi) * sqrt(x(1-x)) / (x^3 + (1-x)^3).
double levy_limit_density(double x);

/// One positive strictly stable draw of index alpha in (0, 1).
/// alpha = 1/2 uses the inverse-square-normal representation Z^(-2); other
/// indices use the exact uniform/exponential transformation method. The two
/// paths fix different scale constants; every statistic exposed by this
/// library is invariant under rescaling of the stable law.
double sample_stable(double alpha, Xoshiro256& rng);

/// Monte Carlo estimate of P(W_n <= k) through the two-draw ratio form:
/// the event reduces to D2/D1 <= (s_k / s_{n-1-k})^(1/alpha) for two
/// independent stable draws D1, D2 (s_k the power sum of index alpha).
double stable_wn_cdf_mc(double alpha, int n, int k, std::uint64_t n_samples,
                        std::uint64_t seed, unsigned threads = 0);

struct NormalMass {
    int k = 0;
    double value = 0.0;
    bool proved = true;  // false marks the conjectured identity
};

/// Closed-form masses of W_n for i.i.d. standard normal samples. Known only
/// for n = 4 (all masses proved) and n = 5 (endpoint masses, conjectured;
/// interior masses have no closed form and are left out).
struct NormalCaseConstants {
    int n = 0;
    std::vector<NormalMass> masses;
};

NormalCaseConstants normal_case_pmf(int n);

}  // namespace eulerw
