#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "eulerw/eulerian.hpp"
#include "eulerw/heavy_tail.hpp"
#include "eulerw/mc.hpp"
#include "eulerw/stats.hpp"

using namespace eulerw;

TEST_CASE("per-sample streams make tallies thread-count invariant") {
    for (const auto& model :
         {UtilityModel::uniform(), UtilityModel::normal(), UtilityModel::stable(0.5)}) {
        const auto one = sample_wn(model, 5, 40000, 99, 1);
        for (unsigned t : {2u, 3u, 8u}) {
            const auto many = sample_wn(model, 5, 40000, 99, t);
            CHECK(one.counts == many.counts);
        }
    }
    const auto f1 = sample_floor_sum(4, 40000, 7, 1);
    const auto f3 = sample_floor_sum(4, 40000, 7, 3);
    CHECK(f1.counts == f3.counts);
}

TEST_CASE("same seed reproduces, different seed varies") {
    const auto a = sample_wn(UtilityModel::uniform(), 6, 20000, 1234);
    const auto b = sample_wn(UtilityModel::uniform(), 6, 20000, 1234);
    const auto c = sample_wn(UtilityModel::uniform(), 6, 20000, 1235);
    CHECK(a.counts == b.counts);
    CHECK(a.counts != c.counts);
}

TEST_CASE("two-value sample always has exactly one value above the mean") {
    const auto emp = sample_wn(UtilityModel::uniform(), 2, 5000, 11);
    CHECK(emp.count_at(1) == 5000);
    CHECK(emp.count_at(0) == 0);
    CHECK(emp.count_at(2) == 0);
}

TEST_CASE("uniform empirical law near the exact law") {
    const std::uint64_t n = 200000;
    const auto emp = sample_wn(UtilityModel::uniform(), 4, n, 2024);
    const auto report = compare_pmf(emp, wn_pmf(4));
    for (double z : report.z_scores) CHECK(std::abs(z) <= 4.0);
    CHECK(report.df == 2);
    CHECK(report.chi_square < chi_square_quantile(0.999, report.df));
    CHECK(report.max_abs_dev < 0.01);
}

TEST_CASE("floor of a uniform sum: small cases") {
    const auto one = sample_floor_sum(1, 3000, 5);
    CHECK(one.count_at(0) == 3000);
    const std::uint64_t n = 200000;
    const auto emp = sample_floor_sum(2, n, 321);
    const auto report = compare_pmf(emp, floor_sum_pmf(2));
    for (double z : report.z_scores) CHECK(std::abs(z) <= 4.0);
    const auto emp3 = sample_floor_sum(3, n, 322);
    CHECK(compare_pmf(emp3, floor_sum_pmf(3)).chi_square < chi_square_quantile(0.999, 2));
}

TEST_CASE("empirical histograms of both laws are statistically indistinguishable") {
    // the count law at n equals the shifted floor-sum law at n-1
    for (int n = 2; n <= 8; ++n) {
        const std::uint64_t n_samples = 200000;
        const auto wn = sample_wn(UtilityModel::uniform(), n, n_samples, 9000 + n);
        auto fs = sample_floor_sum(n - 1, n_samples, 9100 + n);
        fs.support_min += 1;
        const auto r = two_sample_chi_square(wn, fs);
        if (r.df == 0)
            CHECK(r.statistic == 0.0);  // n=2: both laws are a single shared cell
        else
            CHECK(r.statistic < chi_square_quantile(0.999, r.df));
    }
    const auto x = sample_floor_sum(2, 100, 1);
    const auto y = sample_floor_sum(2, 101, 1);
    CHECK_THROWS_AS((void)two_sample_chi_square(x, y), std::domain_error);
}

TEST_CASE("fit report flags impossible cells and disjoint windows") {
    EmpiricalPmf emp;
    emp.support_min = 0;
    emp.counts = {10, 90};
    emp.n_samples = 100;
    // exact law puts zero mass at 0, so any observed count there is damning
    const auto r = compare_pmf(emp, wn_pmf(2));
    CHECK(std::isinf(r.chi_square));
    EmpiricalPmf far;
    far.support_min = 50;
    far.counts = {100};
    far.n_samples = 100;
    CHECK_THROWS_AS((void)compare_pmf(far, wn_pmf(2)), std::domain_error);
    // a perfect histogram scores zero on every statistic
    EmpiricalPmf perfect;
    perfect.support_min = 1;
    perfect.counts = {100};
    perfect.n_samples = 100;
    const auto ok = compare_pmf(perfect, wn_pmf(2));
    CHECK(ok.chi_square == 0.0);
    CHECK(ok.max_abs_dev == 0.0);
}

TEST_CASE("empirical cdf and frequencies") {
    EmpiricalPmf emp;
    emp.support_min = 1;
    emp.counts = {25, 50, 25};
    emp.n_samples = 100;
    CHECK(emp.frequencies() == std::vector<double>{0.25, 0.5, 0.25});
    CHECK(emp.empirical_cdf(0) == 0.0);
    CHECK(emp.empirical_cdf(1) == 0.25);
    CHECK(emp.empirical_cdf(2) == 0.75);
    CHECK(emp.empirical_cdf(9) == 1.0);
    CHECK(emp.count_at(2) == 50);
    CHECK(emp.count_at(4) == 0);
}

TEST_CASE("heavy-tail scaled count tracks the arctan law at large n") {
    const int n = 2000;
    const auto emp = sample_wn(UtilityModel::stable(0.5), n, 30000, 60001);
    double sup = 0.0;
    for (int k = 0; k <= n - 1; k += 20)
        sup = std::max(sup, std::abs(emp.empirical_cdf(k) - levy_wn_cdf(n, k)));
    CHECK(sup < 0.02);
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS((void)UtilityModel::stable(1.5).validate(), std::domain_error);
    CHECK_THROWS_AS((void)sample_wn(UtilityModel::uniform(), 1, 100, 1), std::domain_error);
    CHECK(UtilityModel::uniform().name() == "uniform");
    CHECK(UtilityModel::stable(0.5).name() == "stable");
    CHECK(UtilityModel::normal().name() == "normal");
}
