#include "eulerw/voting.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "eulerw/gaps.hpp"
#include "eulerw/stats.hpp"

namespace eulerw {

std::vector<int> optimal_approval_set(std::span<const double> utilities) {
    if (utilities.size() < 2)
        throw std::domain_error("optimal_approval_set: need at least 2 candidates");
    const double mean = compensated_sum(utilities) / static_cast<double>(utilities.size());
    std::vector<int> indicators(utilities.size(), 0);
    for (std::size_t j = 0; j < utilities.size(); ++j)
        if (utilities[j] > mean) indicators[j] = 1;
    return indicators;
}

double expected_gain(std::span<const double> utilities, std::span<const int> indicators,
                     double p) {
    if (utilities.size() != indicators.size())
        throw std::domain_error("expected_gain: utilities and indicators differ in length");
    if (!(p >= 0.0)) throw std::domain_error("expected_gain: p must be >= 0");
    const double mean = compensated_sum(utilities) / static_cast<double>(utilities.size());
    CompensatedSum acc;
    for (std::size_t j = 0; j < utilities.size(); ++j) {
        if (indicators[j] != 0 && indicators[j] != 1)
            throw std::domain_error("expected_gain: indicators must be 0 or 1");
        if (indicators[j]) acc.add(utilities[j] - mean);
    }
    return p * static_cast<double>(utilities.size()) * acc.value();
}

double max_gain_over_subsets(std::span<const double> utilities, double p) {
    const std::size_t n = utilities.size();
    if (n < 1 || n > 20) throw std::domain_error("max_gain_over_subsets: need 1 <= n <= 20");
    const double mean = compensated_sum(utilities) / static_cast<double>(n);
    std::vector<double> dev(n);
    for (std::size_t j = 0; j < n; ++j) dev[j] = utilities[j] - mean;
    double best = 0.0;  // empty ballot
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1ull << j)) s += dev[j];
        best = std::max(best, s);
    }
    return p * static_cast<double>(n) * best;
}

EmpiricalPmf approved_count_distribution(const UtilityModel& model, int n,
                                         std::uint64_t n_samples, std::uint64_t seed,
                                         unsigned threads) {
    if (n < 2) throw std::domain_error("approved_count_distribution: n must be >= 2");
    if (n_samples == 0) throw std::domain_error("approved_count_distribution: need n_samples >= 1");
    model.validate();
    // |optimal_approval_set| == count_above_mean by construction (both apply
    // the same strict mean threshold), so the count is tallied directly.
    const auto worker = [model, n](std::size_t) {
        return [model, buf = std::vector<double>(static_cast<std::size_t>(n))](
                   Xoshiro256& rng) mutable -> std::size_t {
            fill_utilities(model, buf, rng);
            return static_cast<std::size_t>(count_above_mean(buf));
        };
    };
    EmpiricalPmf out;
    out.support_min = 0;
    out.counts = parallel_tally(n_samples, static_cast<std::size_t>(n) + 1, seed, threads, worker);
    out.n_samples = n_samples;
    out.seed = seed;
    return out;
}

Ballot Ballot::parse(const std::string& text) {
    std::string lower;
    for (char ch : text) lower.push_back(static_cast<char>(std::tolower(ch)));
    Ballot ballot;
    if (lower.empty() || lower == "none") return ballot;
    for (char ch : lower) {
        bool* slot = nullptr;
        if (ch == 'a') slot = &ballot.a;
        else if (ch == 'b') slot = &ballot.b;
        else if (ch == 'c') slot = &ballot.c;
        else throw std::domain_error("Ballot: candidates are A, B, C");
        if (*slot) throw std::domain_error("Ballot: duplicate candidate");
        *slot = true;
    }
    return ballot;
}

std::string Ballot::to_string() const {
    std::string s;
    if (a) s += 'A';
    if (b) s += 'B';
    if (c) s += 'C';
    return s.empty() ? "none" : s;
}

namespace {

void require_scenario(const PolarizedScenario& scenario) {
    if (scenario.m < 1) throw std::domain_error("PolarizedScenario: m must be >= 1");
}

// Expected utility of the winner for fixed integer vote totals, with the
// uniform jitter tie-break: candidates a whole vote behind never win, tied
// leaders win with equal probability.
double winner_utility(long ta, long tb, long tc, const std::array<double, 3>& u) {
    const long top = std::max({ta, tb, tc});
    double sum = 0.0;
    int ties = 0;
    if (ta == top) { sum += u[0]; ++ties; }
    if (tb == top) { sum += u[1]; ++ties; }
    if (tc == top) { sum += u[2]; ++ties; }
    return sum / ties;
}

}  // namespace

double polarized_scenario_expected_utility(const PolarizedScenario& scenario, Ballot ballot,
                                           std::uint64_t n_samples, unsigned threads) {
    require_scenario(scenario);
    if (n_samples == 0)
        throw std::domain_error("polarized_scenario_expected_utility: need n_samples >= 1");

    const long m = scenario.m;
    const std::uint64_t bits = 2 * static_cast<std::uint64_t>(m);
    const std::uint64_t words = (bits + 63) / 64;
    const std::uint64_t last_mask =
        (bits % 64 == 0) ? ~0ull : ((1ull << (bits % 64)) - 1);

    const auto worker = [m, words, last_mask, ballot](std::size_t) {
        return [m, words, last_mask, ballot](Xoshiro256& rng) -> std::size_t {
            std::uint64_t c_approvals = 0;
            for (std::uint64_t w = 0; w < words; ++w) {
                std::uint64_t word = rng.next();
                if (w + 1 == words) word &= last_mask;
                c_approvals += static_cast<std::uint64_t>(std::popcount(word));
            }
            const double ta = static_cast<double>(m + (ballot.a ? 1 : 0)) + rng.uniform01();
            const double tb = static_cast<double>(m + (ballot.b ? 1 : 0)) + rng.uniform01();
            const double tc =
                static_cast<double>(c_approvals + (ballot.c ? 1 : 0)) + rng.uniform01();
            if (ta >= tb && ta >= tc) return 0;
            if (tb >= tc) return 1;
            return 2;
        };
    };
    const auto counts = parallel_tally(n_samples, 3, scenario.seed, threads, worker);
    double total = 0.0;
    for (std::size_t w = 0; w < 3; ++w)
        total += scenario.my_utilities[w] * static_cast<double>(counts[w]);
    return total / static_cast<double>(n_samples);
}

double polarized_scenario_exact(long m, const std::array<double, 3>& my_utilities,
                                Ballot ballot) {
    if (m < 1) throw std::domain_error("polarized_scenario_exact: m must be >= 1");
    const long ta = m + (ballot.a ? 1 : 0);
    const long tb = m + (ballot.b ? 1 : 0);
    const long cc = ballot.c ? 1 : 0;

    // Binomial(2m, 1/2) masses from the center outward; the symmetric
    // remainder splits evenly between the two tails.
    const double log_center = std::lgamma(2.0 * m + 1.0) - 2.0 * std::lgamma(m + 1.0) -
                              2.0 * m * std::log(2.0);
    const double p_center = std::exp(log_center);

    double total = p_center * winner_utility(ta, tb, m + cc, my_utilities);
    double mass = p_center;
    double p_lo = p_center, p_hi = p_center;
    long lo = m, hi = m;
    while (lo > 0 || hi < 2 * m) {
        bool moved = false;
        if (lo > 0) {
            p_lo *= static_cast<double>(lo) / static_cast<double>(2 * m - lo + 1);
            --lo;
            total += p_lo * winner_utility(ta, tb, lo + cc, my_utilities);
            mass += p_lo;
            moved = true;
        }
        if (hi < 2 * m) {
            p_hi *= static_cast<double>(2 * m - hi) / static_cast<double>(hi + 1);
            ++hi;
            total += p_hi * winner_utility(ta, tb, hi + cc, my_utilities);
            mass += p_hi;
            moved = true;
        }
        if (!moved || (p_lo < 1e-19 && p_hi < 1e-19)) break;
    }
    // Tails: far below C cannot win, far above C always wins.
    const double tail = std::max(0.0, 1.0 - mass) / 2.0;
    const double u_ab = ta == tb ? 0.5 * (my_utilities[0] + my_utilities[1])
                                 : (ta > tb ? my_utilities[0] : my_utilities[1]);
    total += tail * u_ab;
    total += tail * my_utilities[2];
    return total;
}

}  // namespace eulerw
