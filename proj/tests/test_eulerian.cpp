#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "eulerw/eulerian.hpp"
#include "eulerw/rational.hpp"

using namespace eulerw;

TEST_CASE("triangle rows match brute-force descent enumeration") {
    for (int n = 1; n <= 9; ++n) CHECK(eulerian_row(n) == descent_oracle_row(n));
    CHECK_THROWS_AS((void)descent_oracle_row(10), std::domain_error);
    CHECK_THROWS_AS((void)descent_oracle_row(0), std::domain_error);
}

TEST_CASE("known rows and entries") {
    CHECK(eulerian_row(0) == std::vector<BigInt>{1});
    CHECK(eulerian_row(1) == std::vector<BigInt>{1});
    CHECK(eulerian_row(3) == std::vector<BigInt>{1, 4, 1});
    CHECK(eulerian_row(4) == std::vector<BigInt>{1, 11, 11, 1});
    CHECK(eulerian_row(5) == std::vector<BigInt>{1, 26, 66, 26, 1});
    CHECK(eulerian_number(3, 1) == 4);
    CHECK(eulerian_number(4, 2) == 11);
    CHECK(eulerian_number(4, 4) == 0);
    CHECK(eulerian_number(4, -1) == 0);
    CHECK_THROWS_AS((void)eulerian_row(-1), std::domain_error);
}

TEST_CASE("rows sum to n! and are palindromic") {
    for (int n = 1; n <= 30; ++n) {
        const auto row = eulerian_row(n);
        BigInt sum = 0;
        for (const auto& v : row) sum += v;
        CHECK(sum == factorial(n));
        for (std::size_t k = 0; k < row.size(); ++k) CHECK(row[k] == row[row.size() - 1 - k]);
    }
}

TEST_CASE("alternating binomial sum reproduces triangle entries") {
    // sum_{i<=k-1} (-1)^i C(n,i) (k-i)^(n-1), zero outside 1 <= k <= n-1
    for (int n = 2; n <= 30; ++n)
        for (int k = 1; k <= n - 1; ++k)
            CHECK(eulerian_alternating_sum(n, k) == eulerian_number(n - 1, k - 1));
    CHECK(eulerian_alternating_sum(4, 2) == 4);
    CHECK(eulerian_alternating_sum(5, 0) == 0);
    CHECK(eulerian_alternating_sum(5, 5) == 0);
    CHECK(eulerian_alternating_sum(5, -3) == 0);
}

TEST_CASE("above-mean count law for n=4") {
    const auto pmf = wn_pmf(4);
    CHECK(pmf.support_min() == 1);
    CHECK(pmf.support_max() == 3);
    CHECK(pmf.at(1) == Rational(1, 6));
    CHECK(pmf.at(2) == Rational(2, 3));
    CHECK(pmf.at(3) == Rational(1, 6));
    CHECK(pmf.at(0) == 0);
    CHECK(pmf.at(4) == 0);
}

TEST_CASE("pmf masses are normalized triangle entries") {
    for (int n = 2; n <= 12; ++n) {
        const auto pmf = wn_pmf(n);
        for (int k = 1; k <= n - 1; ++k)
            CHECK(pmf.at(k) == Rational(eulerian_number(n - 1, k - 1), factorial(n - 1)));
    }
}

TEST_CASE("floor-sum law shifted by one matches the above-mean law") {
    for (int n = 2; n <= 30; ++n) CHECK(wn_pmf(n) == floor_sum_pmf(n - 1).shifted(1));
}

TEST_CASE("floor-sum law basics") {
    const auto pmf = floor_sum_pmf(1);
    CHECK(pmf.support_min() == 0);
    CHECK(pmf.support_max() == 0);
    CHECK(pmf.at(0) == 1);
    CHECK_THROWS_AS((void)floor_sum_pmf(0), std::domain_error);
}

TEST_CASE("cdf partial sums and domain checks") {
    CHECK(wn_cdf(4, 0) == 0);
    CHECK(wn_cdf(4, 1) == Rational(1, 6));
    CHECK(wn_cdf(4, 2) == Rational(5, 6));
    CHECK(wn_cdf(4, 3) == 1);
    CHECK(wn_cdf(2, 1) == 1);
    CHECK_THROWS_AS((void)wn_cdf(1, 0), std::domain_error);
    CHECK_THROWS_AS((void)wn_cdf(4, 4), std::domain_error);
    CHECK_THROWS_AS((void)wn_cdf(4, -1), std::domain_error);
    CHECK_THROWS_AS((void)wn_pmf(1), std::domain_error);
}

TEST_CASE("pmf container validates and shifts") {
    CHECK_THROWS_AS(DiscretePmf(0, {}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(DiscretePmf(0, {Rational(1, 2)}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(DiscretePmf(0, {Rational(3, 2), Rational(-1, 2)}, "x"),
                    std::invalid_argument);
    const DiscretePmf p(2, {Rational(1, 4), Rational(3, 4)}, "x");
    CHECK(p.cdf(1) == 0);
    CHECK(p.cdf(2) == Rational(1, 4));
    CHECK(p.cdf(5) == 1);
    const auto q = p.shifted(-2);
    CHECK(q.support_min() == 0);
    CHECK(q.at(0) == Rational(1, 4));
    CHECK(p.to_doubles() == std::vector<double>{0.25, 0.75});
}

TEST_CASE("fraction formatting round-trips") {
    CHECK(to_fraction_string(Rational(1, 6)) == "1/6");
    CHECK(to_fraction_string(Rational(4, 2)) == "2");
    CHECK(parse_fraction("5/6") == Rational(5, 6));
    CHECK(parse_fraction("-3") == Rational(-3));
    CHECK_THROWS_AS((void)parse_fraction("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_fraction("x"), std::invalid_argument);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, 11) == 0);
    CHECK(ipow(BigInt(3), 5) == 243);
}
