#pragma once

#include <string>
#include <vector>

#include "eulerw/rational.hpp"

namespace eulerw {

/// Exact probability mass function on a window of consecutive integers.
/// probs[i] = P(X = support_min + i); entries are non-negative and sum to 1.
class DiscretePmf {
  public:
    DiscretePmf(int support_min, std::vector<Rational> probs, std::string label);

    int support_min() const { return support_min_; }
    int support_max() const { return support_min_ + static_cast<int>(probs_.size()) - 1; }
    const std::vector<Rational>& probs() const { return probs_; }
    const std::string& label() const { return label_; }

    /// P(X = k); zero outside the window.
    Rational at(int k) const;

    /// P(X <= k).
    Rational cdf(int k) const;

    /// Same masses on a window translated by delta.
    DiscretePmf shifted(int delta) const;

    std::vector<double> to_doubles() const;

    /// Window and masses equal; labels are not compared.
    friend bool operator==(const DiscretePmf& a, const DiscretePmf& b) {
        return a.support_min_ == b.support_min_ && a.probs_ == b.probs_;
    }

  private:
    int support_min_;
    std::vector<Rational> probs_;
    std::string label_;
};

/// Eulerian number <n, k>: permutations of {1..n} with exactly k descents.
/// <0, 0> = 1; zero outside 0 <= k <= max(0, n-1).
BigInt eulerian_number(int n, int k);

/// Row n of the Eulerian triangle, k = 0 .. max(0, n-1).
std::vector<BigInt> eulerian_row(int n);

/// <n-1, k-1> through the alternating binomial sum
///   sum_{i=0}^{k-1} (-1)^i C(n, i) (k - i)^(n-1).
/// Zero for k outside 1 <= k <= n-1. Independent cross-check of the recursion.
BigInt eulerian_alternating_sum(int n, int k);

/// Row n of the triangle by brute-force enumeration of all n! permutations,
/// counting descents directly. Bounded to n <= 9 to keep runtime in seconds.
std::vector<BigInt> descent_oracle_row(int n);

/// Distribution of the number of cycle values strictly above the cycle mean,
/// for n >= 2 i.i.d. continuous draws: P(W_n = k) = <n-1, k-1> / (n-1)!,
/// support {1 .. n-1}.
DiscretePmf wn_pmf(int n);

/// Distribution of floor(U_1 + ... + U_n) for n >= 1 i.i.d. uniform(0,1):
/// P = <n, k> / n!, support {0 .. n-1}.
DiscretePmf floor_sum_pmf(int n);

/// P(W_n <= k) as an exact rational, for 0 <= k <= n-1.
Rational wn_cdf(int n, int k);

}  // namespace eulerw
