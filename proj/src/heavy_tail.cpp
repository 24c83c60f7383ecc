#include "eulerw/heavy_tail.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eulerw/mc.hpp"

namespace eulerw {

namespace {
constexpr double kPi = std::numbers::pi;
}

double power_sum(double alpha, int k) {
    if (k < 0) throw std::domain_error("power_sum: k must be >= 0");
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += std::pow(static_cast<double>(j), alpha);
    return s;
}

double levy_wn_cdf(int n, int k) {
    if (n < 2) throw std::domain_error("levy_wn_cdf: n must be >= 2");
    if (k < 0 || k > n - 1) throw std::domain_error("levy_wn_cdf: k must be in [0, n-1]");
    if (k == n - 1) return 1.0;
    const double num = power_sum(0.5, k);
    const double den = power_sum(0.5, n - 1 - k);
    return (2.0 / kPi) * std::atan(num / den);
}

double levy_limit_cdf(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("levy_limit_cdf: x must be in [0, 1]");
    if (x == 1.0) return 1.0;
    return (2.0 / kPi) * std::atan(std::pow(x / (1.0 - x), 1.5));
}

double levy_limit_density(double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("levy_limit_density: x must be in (0, 1)");
    const double y = 1.0 - x;
    return (3.0 / kPi) * std::sqrt(x * y) / (x * x * x + y * y * y);
}

double sample_stable(double alpha, Xoshiro256& rng) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("sample_stable: alpha must lie in (0, 1)");
    if (alpha == 0.5) {
        NormalStream normal(rng);
        double z;
        do { z = normal(); } while (z == 0.0);
        return 1.0 / (z * z);
    }
    const double theta = kPi * rng.uniform01_open();
    const double w = -std::log1p(-rng.uniform01_open());  // Exp(1), positive since u > 0
    const double ratio = std::sin(alpha * theta) / std::pow(std::sin(theta), 1.0 / alpha);
    return ratio * std::pow(std::sin((1.0 - alpha) * theta) / w, (1.0 - alpha) / alpha);
}

double stable_wn_cdf_mc(double alpha, int n, int k, std::uint64_t n_samples, std::uint64_t seed,
                        unsigned threads) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("stable_wn_cdf_mc: alpha must lie in (0, 1)");
    if (n < 2) throw std::domain_error("stable_wn_cdf_mc: n must be >= 2");
    if (k < 0 || k > n - 1) throw std::domain_error("stable_wn_cdf_mc: k must be in [0, n-1]");
    if (n_samples == 0) throw std::domain_error("stable_wn_cdf_mc: need n_samples >= 1");

    const double threshold = std::pow(power_sum(alpha, k) / power_sum(alpha, n - 1 - k), 1.0 / alpha);
    const auto counts = parallel_tally(
        n_samples, 2, seed, threads, [alpha, threshold](std::size_t) {
            return [alpha, threshold](Xoshiro256& rng) -> std::size_t {
                const double d1 = sample_stable(alpha, rng);
                const double d2 = sample_stable(alpha, rng);
                return d2 <= threshold * d1 ? 1u : 0u;
            };
        });
    return static_cast<double>(counts[1]) / static_cast<double>(n_samples);
}

NormalCaseConstants normal_case_pmf(int n) {
    NormalCaseConstants out;
    out.n = n;
    if (n == 4) {
        const double edge = std::acos(23.0 / 27.0) / kPi;
        const double middle = 3.0 - 6.0 * std::acos(1.0 / 3.0) / kPi;
        out.masses = {{1, edge, true}, {2, middle, true}, {3, edge, true}};
    } else if (n == 5) {
        const double edge = std::acos(61.0 / 64.0) / (2.0 * kPi);
        out.masses = {{1, edge, false}, {4, edge, false}};
    } else {
        throw std::domain_error("normal_case_pmf: closed forms known only for n = 4 and n = 5");
    }
    return out;
}

}  // namespace eulerw
