#pragma once

#include <span>
#include <vector>

namespace eulerw {

/// Number of entries strictly above the sample mean. The mean uses
/// compensated summation; comparisons stay strict, so entries exactly equal
/// to the mean are counted by neither count_above_mean nor count_below_mean.
int count_above_mean(std::span<const double> values);

/// Number of entries strictly below the sample mean.
int count_below_mean(std::span<const double> values);

/// Gaps between consecutive order statistics of the sample:
/// gaps[j] = x_(j+2) - x_(j+1) on the sorted values, all nonnegative.
std::vector<double> sorted_gaps(std::span<const double> values);

/// Below-mean count recovered from the gaps alone:
///   min { k >= 0 : sum_{j<=k} j*gap_j >= sum_{j>k} (n-j)*gap_j }
/// with ties (exact equality) counting as satisfied. Equals
/// count_below_mean of any sample having these gaps.
int w_below_from_gaps(std::span<const double> gaps);

/// Above-mean count from the gaps: the same minimum on the reversed gap
/// vector. Equals count_above_mean of any generating sample.
int w_above_from_gaps(std::span<const double> gaps);

}  // namespace eulerw
