#include "eulerw/gaps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eulerw/stats.hpp"

namespace eulerw {

namespace {

void require_sample(std::span<const double> values) {
    if (values.size() < 2) throw std::domain_error("sample must have at least 2 values");
    for (double v : values)
        if (!std::isfinite(v)) throw std::domain_error("sample values must be finite");
}

}  // namespace

int count_above_mean(std::span<const double> values) {
    require_sample(values);
    const double mean = compensated_sum(values) / static_cast<double>(values.size());
    int count = 0;
    for (double v : values)
        if (v > mean) ++count;
    return count;
}

int count_below_mean(std::span<const double> values) {
    require_sample(values);
    const double mean = compensated_sum(values) / static_cast<double>(values.size());
    int count = 0;
    for (double v : values)
        if (v < mean) ++count;
    return count;
}

std::vector<double> sorted_gaps(std::span<const double> values) {
    require_sample(values);
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> gaps(sorted.size() - 1);
    for (std::size_t j = 0; j + 1 < sorted.size(); ++j) gaps[j] = sorted[j + 1] - sorted[j];
    return gaps;
}

int w_below_from_gaps(std::span<const double> gaps) {
    const int n = static_cast<int>(gaps.size()) + 1;
    for (double g : gaps)
        if (!(g >= 0.0) || !std::isfinite(g))
            throw std::domain_error("gaps must be finite and nonnegative");

    CompensatedSum left;   // sum_{j<=k} j * gap_j
    CompensatedSum right;  // sum_{j>k} (n-j) * gap_j
    for (int j = 1; j <= n - 1; ++j)
        right.add((n - j) * gaps[static_cast<std::size_t>(j - 1)]);
    for (int k = 0; k < n - 1; ++k) {
        if (left.value() >= right.value()) return k;
        const double g = gaps[static_cast<std::size_t>(k)];
        left.add((k + 1) * g);
        right.add(-(n - (k + 1)) * g);
    }
    return n - 1;  // left holds the full weighted sum, right is exhausted
}

int w_above_from_gaps(std::span<const double> gaps) {
    std::vector<double> reversed(gaps.rbegin(), gaps.rend());
    return w_below_from_gaps(reversed);
}

}  // namespace eulerw
