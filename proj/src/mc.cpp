#include "eulerw/mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "eulerw/gaps.hpp"
#include "eulerw/heavy_tail.hpp"

namespace eulerw {

std::uint64_t EmpiricalPmf::count_at(int k) const {
    if (k < support_min || k > support_max()) return 0;
    return counts[static_cast<std::size_t>(k - support_min)];
}

std::vector<double> EmpiricalPmf::frequencies() const {
    std::vector<double> out;
    out.reserve(counts.size());
    for (auto c : counts) out.push_back(static_cast<double>(c) / static_cast<double>(n_samples));
    return out;
}

double EmpiricalPmf::empirical_cdf(int k) const {
    std::uint64_t acc = 0;
    for (int j = support_min; j <= std::min(k, support_max()); ++j)
        acc += counts[static_cast<std::size_t>(j - support_min)];
    return static_cast<double>(acc) / static_cast<double>(n_samples);
}

void UtilityModel::validate() const {
    if (kind == Kind::stable_increments && !(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("UtilityModel: stable index alpha must lie in (0, 1)");
}

std::string UtilityModel::name() const {
    switch (kind) {
        case Kind::uniform: return "uniform";
        case Kind::stable_increments: return "stable";
        case Kind::normal: return "normal";
    }
    return "unknown";
}

void fill_utilities(const UtilityModel& model, std::span<double> buf, Xoshiro256& rng) {
    switch (model.kind) {
        case UtilityModel::Kind::uniform:
            for (auto& v : buf) v = rng.uniform01();
            break;
        case UtilityModel::Kind::normal: {
            NormalStream normal(rng);
            for (auto& v : buf) v = normal();
            break;
        }
        case UtilityModel::Kind::stable_increments: {
            double acc = 0.0;
            buf[0] = 0.0;
            for (std::size_t i = 1; i < buf.size(); ++i) {
                acc += sample_stable(model.alpha, rng);
                buf[i] = acc;
            }
            break;
        }
    }
}

EmpiricalPmf sample_wn(const UtilityModel& model, int n, std::uint64_t n_samples,
                       std::uint64_t seed, unsigned threads) {
    if (n < 2) throw std::domain_error("sample_wn: n must be >= 2");
    if (n_samples == 0) throw std::domain_error("sample_wn: need n_samples >= 1");
    model.validate();

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

EmpiricalPmf sample_floor_sum(int n, std::uint64_t n_samples, std::uint64_t seed,
                              unsigned threads) {
    if (n < 1) throw std::domain_error("sample_floor_sum: n must be >= 1");
    if (n_samples == 0) throw std::domain_error("sample_floor_sum: need n_samples >= 1");
    const auto worker = [n](std::size_t) {
        return [n](Xoshiro256& rng) -> std::size_t {
            double sum = 0.0;
            for (int i = 0; i < n; ++i) sum += rng.uniform01();
            return static_cast<std::size_t>(sum);  // sum in [0, n), truncation is floor
        };
    };
    EmpiricalPmf out;
    out.support_min = 0;
    out.counts = parallel_tally(n_samples, static_cast<std::size_t>(n), seed, threads, worker);
    out.n_samples = n_samples;
    out.seed = seed;
    return out;
}

ComparisonReport compare_pmf(const EmpiricalPmf& emp, const DiscretePmf& exact) {
    if (emp.n_samples == 0) throw std::domain_error("compare_pmf: empty empirical pmf");
    std::uint64_t total = 0;
    for (auto c : emp.counts) total += c;
    if (total != emp.n_samples)
        throw std::domain_error("compare_pmf: counts do not sum to n_samples");
    if (emp.support_max() < exact.support_min() || exact.support_max() < emp.support_min)
        throw std::domain_error("compare_pmf: supports do not overlap");

    const double n = static_cast<double>(emp.n_samples);
    ComparisonReport report;

    const int lo = std::min(emp.support_min, exact.support_min());
    const int hi = std::max(emp.support_max(), exact.support_max());
    for (int k = lo; k <= hi; ++k) {
        const double freq = static_cast<double>(emp.count_at(k)) / n;
        const double p = static_cast<double>(exact.at(k));
        report.max_abs_dev = std::max(report.max_abs_dev, std::abs(freq - p));
        if (emp.count_at(k) > 0 && exact.at(k) == 0)
            report.chi_square = std::numeric_limits<double>::infinity();
    }

    int support_cells = 0;
    for (int k = exact.support_min(); k <= exact.support_max(); ++k) {
        const Rational pr = exact.at(k);
        if (pr == 0) continue;
        ++support_cells;
        const double p = static_cast<double>(pr);
        const double freq = static_cast<double>(emp.count_at(k)) / n;
        const double se = std::sqrt(p * (1.0 - p) / n);
        if (se > 0.0)
            report.z_scores.push_back((freq - p) / se);
        else
            report.z_scores.push_back(freq == p ? 0.0
                                                : std::numeric_limits<double>::infinity());
        const double expected = n * p;
        const double diff = static_cast<double>(emp.count_at(k)) - expected;
        report.chi_square += diff * diff / expected;
    }
    report.df = support_cells - 1;
    return report;
}

ChiSquareResult two_sample_chi_square(const EmpiricalPmf& x, const EmpiricalPmf& y) {
    if (x.n_samples != y.n_samples)
        throw std::domain_error("two_sample_chi_square: sample sizes must match");
    ChiSquareResult r;
    const int lo = std::min(x.support_min, y.support_min);
    const int hi = std::max(x.support_max(), y.support_max());
    int cells = 0;
    for (int k = lo; k <= hi; ++k) {
        const double xc = static_cast<double>(x.count_at(k));
        const double yc = static_cast<double>(y.count_at(k));
        if (xc + yc == 0.0) continue;
        ++cells;
        r.statistic += (xc - yc) * (xc - yc) / (xc + yc);
    }
    r.df = cells - 1;
    return r;
}

}  // namespace eulerw
