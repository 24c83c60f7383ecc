#include "eulerw/eulerian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace eulerw {

DiscretePmf::DiscretePmf(int support_min, std::vector<Rational> probs, std::string label)
    : support_min_(support_min), probs_(std::move(probs)), label_(std::move(label)) {
    if (probs_.empty()) throw std::invalid_argument("DiscretePmf: empty support");
    Rational total = 0;
    for (const auto& p : probs_) {
        if (p < 0) throw std::invalid_argument("DiscretePmf: negative mass");
        total += p;
    }
    if (total != 1) throw std::invalid_argument("DiscretePmf: masses must sum to 1");
}

Rational DiscretePmf::at(int k) const {
    if (k < support_min_ || k > support_max()) return 0;
    return probs_[static_cast<std::size_t>(k - support_min_)];
}

Rational DiscretePmf::cdf(int k) const {
    if (k < support_min_) return 0;
    Rational total = 0;
    const int top = std::min(k, support_max());
    for (int j = support_min_; j <= top; ++j)
        total += probs_[static_cast<std::size_t>(j - support_min_)];
    return total;
}

DiscretePmf DiscretePmf::shifted(int delta) const {
    return DiscretePmf(support_min_ + delta, probs_, label_);
}

std::vector<double> DiscretePmf::to_doubles() const {
    std::vector<double> out;
    out.reserve(probs_.size());
    for (const auto& p : probs_) out.push_back(static_cast<double>(p));
    return out;
}

std::vector<BigInt> eulerian_row(int n) {
    if (n < 0) throw std::domain_error("eulerian_row: n must be >= 0");
    std::vector<BigInt> row{1};  // row 0
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m), 0);
        for (int k = 0; k < m; ++k) {
            BigInt v = 0;
            if (k < static_cast<int>(row.size()))
                v += BigInt(k + 1) * row[static_cast<std::size_t>(k)];
            if (k > 0 && k - 1 < static_cast<int>(row.size()))
                v += BigInt(m - k) * row[static_cast<std::size_t>(k - 1)];
            next[static_cast<std::size_t>(k)] = v;
        }
        row = std::move(next);
    }
    return row;
}

BigInt eulerian_number(int n, int k) {
    if (n < 0) throw std::domain_error("eulerian_number: n must be >= 0");
    if (k < 0 || k > std::max(0, n - 1)) return 0;
    return eulerian_row(n)[static_cast<std::size_t>(k)];
}

BigInt eulerian_alternating_sum(int n, int k) {
    if (n < 1) throw std::domain_error("eulerian_alternating_sum: n must be >= 1");
    if (k < 1 || k > n - 1) return 0;
    BigInt acc = 0;
    for (int i = 0; i < k; ++i) {
        const BigInt term = binomial(n, i) * ipow(BigInt(k - i), n - 1);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

std::vector<BigInt> descent_oracle_row(int n) {
    if (n < 1) throw std::domain_error("descent_oracle_row: n must be >= 1");
    if (n > 9) throw std::domain_error("descent_oracle_row: enumeration bounded to n <= 9");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<BigInt> counts(static_cast<std::size_t>(n), 0);
    do {
        int descents = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i + 1)])
                ++descents;
        ++counts[static_cast<std::size_t>(descents)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

DiscretePmf wn_pmf(int n) {
    if (n < 2) throw std::domain_error("wn_pmf: n must be >= 2");
    const auto row = eulerian_row(n - 1);
    const BigInt denom = factorial(n - 1);
    std::vector<Rational> probs;
    probs.reserve(row.size());
    for (const auto& v : row) probs.emplace_back(v, denom);
    return DiscretePmf(1, std::move(probs), "count above mean, n=" + std::to_string(n));
}

DiscretePmf floor_sum_pmf(int n) {
    if (n < 1) throw std::domain_error("floor_sum_pmf: n must be >= 1");
    const auto row = eulerian_row(n);
    const BigInt denom = factorial(n);
    std::vector<Rational> probs;
    probs.reserve(row.size());
    for (const auto& v : row) probs.emplace_back(v, denom);
    return DiscretePmf(0, std::move(probs), "floor of uniform sum, n=" + std::to_string(n));
}

Rational wn_cdf(int n, int k) {
    if (n < 2) throw std::domain_error("wn_cdf: n must be >= 2");
    if (k < 0 || k > n - 1) throw std::domain_error("wn_cdf: k must be in [0, n-1]");
    return wn_pmf(n).cdf(k);
}

}  // namespace eulerw
