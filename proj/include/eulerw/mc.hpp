#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "eulerw/eulerian.hpp"
#include "eulerw/rng.hpp"

namespace eulerw {

/// Integer histogram of a simulated integer statistic.
struct EmpiricalPmf {
    int support_min = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t n_samples = 0;
    std::uint64_t seed = 0;

    int support_max() const { return support_min + static_cast<int>(counts.size()) - 1; }
    std::uint64_t count_at(int k) const;
    std::vector<double> frequencies() const;
    /// Empirical P(X <= k).
    double empirical_cdf(int k) const;
};

struct UtilityModel {
    enum class Kind { uniform, stable_increments, normal };
    Kind kind = Kind::uniform;
    double alpha = 0.5;  // stable index, used only by stable_increments

    static UtilityModel uniform() { return {Kind::uniform, 0.0}; }
    static UtilityModel stable(double alpha) { return {Kind::stable_increments, alpha}; }
    static UtilityModel normal() { return {Kind::normal, 0.0}; }
    void validate() const;
    std::string name() const;
};

/// Runs `f(rng) -> bin` once per sample index and accumulates bin counts.
/// Each sample index derives its own generator from (seed, index), and the
/// per-thread partial counts merge by integer addition, so the result is
/// identical for every thread count. make_worker(t) builds one callable per
/// worker thread (a place to hang scratch buffers).
template <class MakeWorker>
std::vector<std::uint64_t> parallel_tally(std::uint64_t n_samples, std::size_t n_bins,
                                          std::uint64_t seed, unsigned threads,
                                          MakeWorker&& make_worker) {
    unsigned t = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    if (n_samples < 4 * static_cast<std::uint64_t>(t)) t = 1;
    std::vector<std::vector<std::uint64_t>> partial(t, std::vector<std::uint64_t>(n_bins, 0));
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            auto f = make_worker(static_cast<std::size_t>(w));
            const std::uint64_t lo = n_samples / t * w + std::min<std::uint64_t>(w, n_samples % t);
            const std::uint64_t hi = lo + n_samples / t + (w < n_samples % t ? 1 : 0);
            auto& bins = partial[w];
            for (std::uint64_t i = lo; i < hi; ++i) {
                Xoshiro256 rng = stream_rng(seed, i);
                bins[f(rng)] += 1;
            }
        });
    }
    for (auto& th : pool) th.join();
    std::vector<std::uint64_t> total(n_bins, 0);
    for (const auto& bins : partial)
        for (std::size_t b = 0; b < n_bins; ++b) total[b] += bins[b];
    return total;
}

/// Fills buf with one utility vector drawn from the model. For stable
/// increments the partial sums of i.i.d. stable gaps are used directly; the
/// above-mean count is invariant under the random relabeling of coordinates,
/// so no permutation is drawn.
void fill_utilities(const UtilityModel& model, std::span<double> buf, Xoshiro256& rng);

/// Law of the above-mean count of n utilities drawn from the model.
/// Counts over support {0..n}. Deterministic in (model, n, n_samples, seed).
EmpiricalPmf sample_wn(const UtilityModel& model, int n, std::uint64_t n_samples,
                       std::uint64_t seed, unsigned threads = 0);

/// Law of floor(U_1 + ... + U_n) for uniform U_i. Counts over {0..n-1}.
EmpiricalPmf sample_floor_sum(int n, std::uint64_t n_samples, std::uint64_t seed,
                              unsigned threads = 0);

struct ComparisonReport {
    double max_abs_dev = 0.0;
    std::vector<double> z_scores;  // one per exact-support cell, in support order
    double chi_square = 0.0;
    int df = 0;
};

/// Empirical-vs-exact fit report: max |freq - p| over the union of windows,
/// per-cell z-scores and Pearson chi-square over the exact support
/// (df = nonzero support size - 1). Counts landing where the exact mass is
/// zero drive the chi-square to infinity. Disjoint windows are an error.
ComparisonReport compare_pmf(const EmpiricalPmf& emp, const DiscretePmf& exact);

struct ChiSquareResult {
    double statistic = 0.0;
    int df = 0;
};

/// Two-sample Pearson chi-square for equal-sized histograms.
ChiSquareResult two_sample_chi_square(const EmpiricalPmf& x, const EmpiricalPmf& y);

}  // namespace eulerw
