#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eulerw/gaps.hpp"
#include "eulerw/rng.hpp"

using namespace eulerw;

TEST_CASE("direct counts against the sample mean") {
    const std::vector<double> a{0.0, 1.0};
    CHECK(count_above_mean(a) == 1);
    CHECK(count_below_mean(a) == 1);
    const std::vector<double> b{1.0, 1.0, 1.0};
    CHECK(count_above_mean(b) == 0);
    CHECK(count_below_mean(b) == 0);
    const std::vector<double> c{0.1, 0.2, 0.9};
    CHECK(count_above_mean(c) == 1);
    CHECK(count_below_mean(c) == 2);
    CHECK_THROWS_AS((void)count_above_mean(std::vector<double>{1.0}), std::domain_error);
}

TEST_CASE("sorted gaps") {
    const std::vector<double> s{0.9, 0.1, 0.2};
    CHECK(sorted_gaps(s) == std::vector<double>{0.1, 0.7});
    const std::vector<double> t{2.0, 2.0};
    CHECK(sorted_gaps(t) == std::vector<double>{0.0});
}

TEST_CASE("gap formula on worked examples") {
    // n=2: k=0 fails (0 >= gap is false), k=1 holds
    CHECK(w_below_from_gaps(std::vector<double>{1.0}) == 1);
    CHECK(w_above_from_gaps(std::vector<double>{1.0}) == 1);
    // sample 0.1, 0.2, 0.9: k=1 gives 0.1 >= 0.7 false, k=2 holds
    CHECK(w_below_from_gaps(std::vector<double>{0.1, 0.7}) == 2);
    CHECK(w_above_from_gaps(std::vector<double>{0.1, 0.7}) == 1);
    // sample 1, 2, 3: exact tie at k=1 counts as satisfied
    CHECK(w_below_from_gaps(std::vector<double>{1.0, 1.0}) == 1);
    CHECK(w_above_from_gaps(std::vector<double>{1.0, 1.0}) == 1);
    // all-equal sample: k=0 tie holds immediately
    CHECK(w_below_from_gaps(std::vector<double>{0.0, 0.0}) == 0);
    CHECK(w_above_from_gaps(std::vector<double>{0.0, 0.0}) == 0);
    CHECK_THROWS_AS((void)w_below_from_gaps(std::vector<double>{-1.0}), std::domain_error);
}

TEST_CASE("gap formula equals the direct count on random distinct samples") {
    Xoshiro256 rng(20240809);
    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 49);
        std::vector<double> sample(static_cast<std::size_t>(n));
        for (auto& x : sample) x = rng.uniform01();
        std::vector<double> dedup = sample;
        std::sort(dedup.begin(), dedup.end());
        if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end()) continue;
        const auto gaps = sorted_gaps(sample);
        CHECK(w_below_from_gaps(gaps) == count_below_mean(sample));
        CHECK(w_above_from_gaps(gaps) == count_above_mean(sample));
        ++checked;
    }
    CHECK(checked >= 9990);
}

TEST_CASE("gap formula handles exact ties on integer grids") {
    Xoshiro256 rng(77);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 11);
        std::vector<double> sample(static_cast<std::size_t>(n));
        // small integers scaled by n keep the mean and all comparisons exact
        for (auto& x : sample)
            x = static_cast<double>(n) * static_cast<double>(rng.next() % 8);
        const auto gaps = sorted_gaps(sample);
        CHECK(w_below_from_gaps(gaps) == count_below_mean(sample));
        CHECK(w_above_from_gaps(gaps) == count_above_mean(sample));
    }
}

TEST_CASE("negation swaps the two counts") {
    Xoshiro256 rng(91);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 20);
        std::vector<double> sample(static_cast<std::size_t>(n)), negated;
        for (auto& x : sample) x = rng.uniform01();
        for (double x : sample) negated.push_back(-x);
        CHECK(count_above_mean(sample) == count_below_mean(negated));
        CHECK(count_below_mean(sample) == count_above_mean(negated));
    }
}

TEST_CASE("counts are translation and positive-scale invariant") {
    const std::vector<double> s{0.25, 0.5, 0.125, 0.75, 0.0625};
    std::vector<double> t;
    for (double x : s) t.push_back(4.0 * x + 8.0);  // exact in binary floating point
    CHECK(count_above_mean(t) == count_above_mean(s));
    CHECK(count_below_mean(t) == count_below_mean(s));
    CHECK(w_below_from_gaps(sorted_gaps(t)) == w_below_from_gaps(sorted_gaps(s)));
}
