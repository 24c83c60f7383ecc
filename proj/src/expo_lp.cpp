#include "eulerw/expo_lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eulerw/mc.hpp"
#include "eulerw/rng.hpp"

namespace eulerw {

namespace {

void require_positive(std::span<const double> xs, const char* which) {
    for (double x : xs)
        if (!(x > 0.0) || !std::isfinite(x))
            throw std::domain_error(std::string("lp_probability: ") + which +
                                    " coefficients must be positive and finite");
}

long double pow_ld(long double base, int e) {
    long double r = 1.0L;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

double lp_probability(std::span<const double> a, std::span<const double> b,
                      const LpOptions& options) {
    const int k = static_cast<int>(a.size());
    const int l = static_cast<int>(b.size());
    if (k + l < 1) throw std::domain_error("lp_probability: need k + l >= 1");
    require_positive(a, "a");
    require_positive(b, "b");
    for (int m = 0; m < k; ++m)
        for (int i = m + 1; i < k; ++i) {
            const double sep = std::abs(a[m] - a[i]);
            if (sep == 0.0) throw std::domain_error("lp_probability: a coefficients must be distinct");
            if (sep < options.min_separation)
                throw std::domain_error("lp_probability: a separation below configured minimum");
        }
    if (k == 0) return 0.0;

    // Terms alternate in sign and can cancel heavily; evaluate each in long
    // double and add smallest-magnitude first under compensation.
    std::vector<long double> terms(static_cast<std::size_t>(k));
    for (int m = 0; m < k; ++m) {
        long double denom = 1.0L;
        for (int i = 0; i < k; ++i)
            if (i != m) denom *= static_cast<long double>(a[m]) - static_cast<long double>(a[i]);
        for (int j = 0; j < l; ++j)
            denom *= static_cast<long double>(a[m]) + static_cast<long double>(b[j]);
        terms[static_cast<std::size_t>(m)] = pow_ld(a[m], k + l - 1) / denom;
    }
    std::sort(terms.begin(), terms.end(),
              [](long double x, long double y) { return std::abs(x) < std::abs(y); });
    long double sum = 0.0L, comp = 0.0L;
    for (long double t : terms) {
        const long double s = sum + t;
        if (std::abs(sum) >= std::abs(t))
            comp += (sum - s) + t;
        else
            comp += (t - s) + sum;
        sum = s;
    }
    const double value = static_cast<double>(sum + comp);
    return std::clamp(value, 0.0, 1.0);
}

Rational lp_probability_exact(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const int k = static_cast<int>(a.size());
    const int l = static_cast<int>(b.size());
    if (k + l < 1) throw std::domain_error("lp_probability_exact: need k + l >= 1");
    for (const auto& x : a)
        if (x <= 0) throw std::domain_error("lp_probability_exact: a coefficients must be positive");
    for (const auto& x : b)
        if (x <= 0) throw std::domain_error("lp_probability_exact: b coefficients must be positive");
    for (int m = 0; m < k; ++m)
        for (int i = m + 1; i < k; ++i)
            if (a[static_cast<std::size_t>(m)] == a[static_cast<std::size_t>(i)])
                throw std::domain_error("lp_probability_exact: a coefficients must be distinct");
    if (k == 0) return 0;

    Rational total = 0;
    for (int m = 0; m < k; ++m) {
        const Rational& am = a[static_cast<std::size_t>(m)];
        Rational denom = 1;
        for (int i = 0; i < k; ++i)
            if (i != m) denom *= am - a[static_cast<std::size_t>(i)];
        for (int j = 0; j < l; ++j) denom *= am + b[static_cast<std::size_t>(j)];
        total += rpow(am, k + l - 1) / denom;
    }
    return total;
}

double lp_probability_mc(std::span<const double> a, std::span<const double> b,
                         std::uint64_t n_samples, std::uint64_t seed, unsigned threads) {
    const int k = static_cast<int>(a.size());
    const int l = static_cast<int>(b.size());
    if (k + l < 1) throw std::domain_error("lp_probability_mc: need k + l >= 1");
    if (n_samples == 0) throw std::domain_error("lp_probability_mc: need n_samples >= 1");
    require_positive(a, "a");
    require_positive(b, "b");

    std::vector<double> av(a.begin(), a.end()), bv(b.begin(), b.end());
    const auto counts = parallel_tally(
        n_samples, 2, seed, threads, [av, bv](std::size_t) {
            return [av, bv](Xoshiro256& rng) -> std::size_t {
                double x = 0.0;
                for (double ai : av) x += ai * rng.exponential();
                for (double bj : bv) x -= bj * rng.exponential();
                return x >= 0.0 ? 1u : 0u;
            };
        });
    return static_cast<double>(counts[1]) / static_cast<double>(n_samples);
}

double wn_cdf_via_lp(int n, int k) {
    if (n < 2) throw std::domain_error("wn_cdf_via_lp: n must be >= 2");
    if (k < 0 || k > n - 1) throw std::domain_error("wn_cdf_via_lp: k must be in [0, n-1]");
    std::vector<double> a, b;
    for (int i = 1; i <= k; ++i) a.push_back(i);
    for (int j = 1; j <= n - 1 - k; ++j) b.push_back(j);
    if (a.empty()) return 0.0;
    return lp_probability(a, b);
}

Rational wn_cdf_via_lp_exact(int n, int k) {
    if (n < 2) throw std::domain_error("wn_cdf_via_lp_exact: n must be >= 2");
    if (k < 0 || k > n - 1) throw std::domain_error("wn_cdf_via_lp_exact: k must be in [0, n-1]");
    std::vector<Rational> a, b;
    for (int i = 1; i <= k; ++i) a.emplace_back(i);
    for (int j = 1; j <= n - 1 - k; ++j) b.emplace_back(j);
    if (a.empty()) return 0;
    return lp_probability_exact(a, b);
}

}  // namespace eulerw
