#include "eulerw/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "eulerw/eulerian.hpp"
#include "eulerw/expo_lp.hpp"
#include "eulerw/heavy_tail.hpp"
#include "eulerw/mc.hpp"
#include "eulerw/stats.hpp"
#include "eulerw/voting.hpp"

namespace eulerw {

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t s = seed + tag * 0x9E3779B97F4A7C15ull;
    return splitmix64_next(s);
}

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

CheckResult timed(CheckResult r, const Timer& timer) {
    r.elapsed_sec = timer.seconds();
    return r;
}

// --- criterion 1: exact law of the above-mean count ---

CheckResult check_rows_vs_oracle() {
    Timer timer;
    CheckResult r{"1a", "triangle rows match descent enumeration", "brute-force descent counts",
                  "rows 1..9 identical", "", "exact", false, 0.0};
    int matched = 0;
    for (int n = 1; n <= 9; ++n)
        if (eulerian_row(n) == descent_oracle_row(n)) ++matched;
    r.observed = std::to_string(matched) + "/9 rows identical";
    r.pass = matched == 9;
    return timed(r, timer);
}

CheckResult check_wn_pmf_exact() {
    Timer timer;
    CheckResult r{"1b", "above-mean count pmf equals normalized triangle row",
                  "<n-1;k-1>/(n-1)!", "n=2..10 equal", "", "exact", false, 0.0};
    int matched = 0;
    for (int n = 2; n <= 10; ++n) {
        const auto pmf = wn_pmf(n);
        const auto row = eulerian_row(n - 1);
        const BigInt denom = factorial(n - 1);
        bool ok = pmf.support_min() == 1 && pmf.probs().size() == row.size();
        for (std::size_t i = 0; ok && i < row.size(); ++i)
            ok = pmf.probs()[i] == Rational(row[i], denom);
        if (ok) ++matched;
    }
    r.observed = std::to_string(matched) + "/9 values of n equal";
    r.pass = matched == 9;
    return timed(r, timer);
}

// --- criterion 2: shift identity between the two exact laws ---

CheckResult check_shift_identity() {
    Timer timer;
    CheckResult r{"2", "floor-sum law shifted by one equals above-mean law",
                  "wn_pmf(n) == shift(floor_sum_pmf(n-1); +1)", "n=2..30 equal", "", "exact",
                  false, 0.0};
    int matched = 0;
    for (int n = 2; n <= 30; ++n)
        if (wn_pmf(n) == floor_sum_pmf(n - 1).shifted(1)) ++matched;
    r.observed = std::to_string(matched) + "/29 values of n equal";
    r.pass = matched == 29;
    return timed(r, timer);
}

// --- criterion 3: uniform-model MC vs the exact law ---

std::vector<CheckResult> check_uniform_mc(const VerifyOptions& opt, std::uint64_t n_samples) {
    std::vector<CheckResult> results;
    for (int n = 2; n <= 10; ++n) {
        Timer timer;
        CheckResult r;
        r.id = "3.n" + std::to_string(n);
        r.name = "uniform MC vs exact pmf; n=" + std::to_string(n);
        r.reference = "Pearson chi-square";
        const auto emp = sample_wn(UtilityModel::uniform(), n, n_samples,
                                   mix_seed(opt.seed, 0x300 + static_cast<std::uint64_t>(n)),
                                   opt.threads);
        const auto report = compare_pmf(emp, wn_pmf(n));
        if (report.df == 0) {
            r.expected = "chi-square == 0 (single support cell)";
            r.tolerance = "exact";
            r.pass = report.chi_square == 0.0;
        } else {
            const double quantile = chi_square_quantile(0.999, report.df);
            r.expected = "chi-square < " + fmt17(quantile);
            r.tolerance = "0.999 quantile; df=" + std::to_string(report.df);
            r.pass = report.chi_square < quantile;
        }
        r.observed = "chi-square = " + fmt17(report.chi_square);
        results.push_back(timed(r, timer));
    }
    return results;
}

// --- criterion 4: closed form for exponential linear combinations ---

CheckResult check_lp_exact_cdf() {
    Timer timer;
    CheckResult r{"4a", "residue formula equals rational cdf",
                  "partial fractions over a=[1..k]; b=[1..n-1-k]", "n<=12; all k equal", "",
                  "exact", false, 0.0};
    int cases = 0, matched = 0;
    for (int n = 2; n <= 12; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            ++cases;
            if (wn_cdf_via_lp_exact(n, k) == wn_cdf(n, k)) ++matched;
        }
    r.observed = std::to_string(matched) + "/" + std::to_string(cases) + " cases equal";
    r.pass = matched == cases;
    return timed(r, timer);
}

CheckResult check_lp_mc(const VerifyOptions& opt, std::uint64_t n_samples) {
    Timer timer;
    CheckResult r{"4b", "residue formula vs exponential MC; 100 random instances",
                  "event frequency of sum a*xi >= sum b*eta", "100/100 within 4 SE", "",
                  "4 binomial SE", false, 0.0};
    Xoshiro256 gen(mix_seed(opt.seed, 0x4b0));
    int ok = 0;
    double max_z = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int total = 1 + i % 8;
        const int k = static_cast<int>(gen.next() % static_cast<std::uint64_t>(total + 1));
        const int l = total - k;
        std::vector<double> a, b;
        while (static_cast<int>(a.size()) < k) {
            const double x = 0.1 + 4.9 * gen.uniform01();
            bool separated = true;
            for (double prev : a)
                if (std::abs(x - prev) < 1e-3) separated = false;
            if (separated) a.push_back(x);
        }
        for (int j = 0; j < l; ++j) b.push_back(0.1 + 4.9 * gen.uniform01());

        const double p = lp_probability(a, b);
        const double mc = lp_probability_mc(a, b, n_samples,
                                            mix_seed(opt.seed, 0x4b1 + static_cast<std::uint64_t>(i)),
                                            opt.threads);
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples));
        const double diff = std::abs(p - mc);
        if (se > 0.0) {
            max_z = std::max(max_z, diff / se);
            if (diff <= 4.0 * se) ++ok;
        } else if (diff <= 1e-9) {
            ++ok;
        }
    }
    r.observed = std::to_string(ok) + "/100 within 4 SE; max |z| = " + fmt17(max_z);
    r.pass = ok == 100;
    return timed(r, timer);
}

// --- criterion 5: index-1/2 arctan law ---

CheckResult check_levy_quarter() {
    Timer timer;
    CheckResult r{"5a", "index-1/2 cdf closed form at n=4; k=1",
                  "(2/pi)*atan(1/(1+sqrt(2))) == 1/4", "0.25", "", "1e-12", false, 0.0};
    const double v = levy_wn_cdf(4, 1);
    r.observed = fmt17(v);
    r.pass = std::abs(v - 0.25) <= 1e-12;
    return timed(r, timer);
}

CheckResult check_levy_mc(const VerifyOptions& opt, std::uint64_t n_samples) {
    Timer timer;
    CheckResult r{"5b", "index-1/2 MC vs arctan cdf; n=10", "two-draw ratio of stable sums",
                  "10/10 cdf points within 4 SE", "", "4 binomial SE", false, 0.0};
    const int n = 10;
    const auto emp =
        sample_wn(UtilityModel::stable(0.5), n, n_samples, mix_seed(opt.seed, 0x5b0), opt.threads);
    int ok = 0;
    double max_z = 0.0;
    for (int k = 0; k <= n - 1; ++k) {
        const double f = levy_wn_cdf(n, k);
        const double e = emp.empirical_cdf(k);
        const double se = std::sqrt(f * (1.0 - f) / static_cast<double>(n_samples));
        const double diff = std::abs(f - e);
        if (se > 0.0) {
            max_z = std::max(max_z, diff / se);
            if (diff <= 4.0 * se) ++ok;
        } else if (diff == 0.0) {
            ++ok;
        }
    }
    r.observed = std::to_string(ok) + "/10 within 4 SE; max |z| = " + fmt17(max_z);
    r.pass = ok == 10;
    return timed(r, timer);
}

// --- criterion 6: limit law of the scaled count ---

CheckResult check_levy_density_integral() {
    Timer timer;
    CheckResult r{"6a", "limit density integrates to one", "adaptive Simpson quadrature", "1",
                  "", "1e-10", false, 0.0};
    const double delta = 1e-9;  // endpoint tails contribute ~(2/pi)*delta^1.5 each
    const double integral =
        integrate([](double x) { return levy_limit_density(x); }, delta, 1.0 - delta, 1e-12);
    r.observed = fmt17(integral);
    r.pass = std::abs(integral - 1.0) <= 1e-10;
    return timed(r, timer);
}

CheckResult check_levy_density_derivative() {
    Timer timer;
    CheckResult r{"6b", "cdf finite difference matches density", "central difference; h=1e-6",
                  "max abs error <= 1e-5 on 99 points", "", "1e-5", false, 0.0};
    const double h = 1e-6;
    double max_err = 0.0;
    for (int i = 1; i <= 99; ++i) {
        const double x = i / 100.0;
        const double d = (levy_limit_cdf(x + h) - levy_limit_cdf(x - h)) / (2.0 * h);
        max_err = std::max(max_err, std::abs(d - levy_limit_density(x)));
    }
    r.observed = "max abs error = " + fmt17(max_err);
    r.pass = max_err <= 1e-5;
    return timed(r, timer);
}

CheckResult check_levy_limit_mc(const VerifyOptions& opt, std::uint64_t n_samples) {
    Timer timer;
    CheckResult r{"6c", "scaled count empirical cdf near limit cdf; n=2000",
                  "(2/pi)*atan((x/(1-x))^(3/2))", "sup distance < 0.01", "", "0.01", false, 0.0};
    const int n = 2000;
    const auto emp =
        sample_wn(UtilityModel::stable(0.5), n, n_samples, mix_seed(opt.seed, 0x6c0), opt.threads);
    double sup = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double x = static_cast<double>(k) / n;
        sup = std::max(sup, std::abs(emp.empirical_cdf(k) - levy_limit_cdf(x)));
    }
    r.observed = "sup distance = " + fmt17(sup);
    r.pass = sup < 0.01;
    return timed(r, timer);
}

// --- criterion 7: normal-sample masses ---

CheckResult check_normal_constant() {
    Timer timer;
    CheckResult r{"7a", "n=4 corner mass closed form", "acos(23/27)/pi", "0.175479656",
                  "", "matches to 9 decimals", false, 0.0};
    const double v = normal_case_pmf(4).masses[0].value;
    r.observed = fmt17(v);
    r.pass = std::abs(v - 0.175479656) <= 0.5e-9;
    return timed(r, timer);
}

CheckResult check_normal_mc4(const VerifyOptions& opt, std::uint64_t n_samples) {
    Timer timer;
    CheckResult r{"7b", "normal MC vs n=4 closed-form masses", "acos(23/27)/pi; 3-6*acos(1/3)/pi",
                  "3/3 masses within 4 SE", "", "4 binomial SE", false, 0.0};
    const auto emp =
        sample_wn(UtilityModel::normal(), 4, n_samples, mix_seed(opt.seed, 0x7b0), opt.threads);
    int ok = 0;
    double max_z = 0.0;
    for (const auto& mass : normal_case_pmf(4).masses) {
        const double freq =
            static_cast<double>(emp.count_at(mass.k)) / static_cast<double>(n_samples);
        const double se = std::sqrt(mass.value * (1.0 - mass.value) / static_cast<double>(n_samples));
        const double z = std::abs(freq - mass.value) / se;
        max_z = std::max(max_z, z);
        if (z <= 4.0) ++ok;
    }
    r.observed = std::to_string(ok) + "/3 within 4 SE; max |z| = " + fmt17(max_z);
    r.pass = ok == 3;
    return timed(r, timer);
}

CheckResult check_normal_mc5(const VerifyOptions& opt, std::uint64_t n_samples) {
    Timer timer;
    CheckResult r{"7c", "normal MC vs n=5 corner mass (conjectured closed form)",
                  "acos(61/64)/(2*pi)", "within 4 SE of 0.04892344186", "", "4 binomial SE",
                  false, 0.0};
    const auto emp =
        sample_wn(UtilityModel::normal(), 5, n_samples, mix_seed(opt.seed, 0x7c0), opt.threads);
    const double target = normal_case_pmf(5).masses[0].value;
    const double freq = static_cast<double>(emp.count_at(1)) / static_cast<double>(n_samples);
    const double se = std::sqrt(target * (1.0 - target) / static_cast<double>(n_samples));
    const double z = std::abs(freq - target) / se;
    r.observed = fmt17(freq) + "; |z| = " + fmt17(z);
    r.pass = z <= 4.0;
    return timed(r, timer);
}

// --- criterion 8: approval voting ---

CheckResult check_vote_argmax(const VerifyOptions& opt) {
    Timer timer;
    CheckResult r{"8a", "mean-threshold ballot maximizes the gain functional",
                  "exhaustive search over all 2^n ballots", "10000/10000 vectors maximal", "",
                  "1e-12 relative", false, 0.0};
    Xoshiro256 gen(mix_seed(opt.seed, 0x8a0));
    int ok = 0;
    for (int v = 0; v < 10000; ++v) {
        const int n = 2 + static_cast<int>(gen.next() % 11);  // n in 2..12
        std::vector<double> u(static_cast<std::size_t>(n));
        for (auto& x : u) x = gen.uniform01();
        const auto indicators = optimal_approval_set(u);
        const double gain = expected_gain(u, indicators, 1.0);
        const double best = max_gain_over_subsets(u, 1.0);
        if (gain >= best - 1e-12 * std::max(1.0, std::abs(best))) ++ok;
    }
    r.observed = std::to_string(ok) + "/10000 vectors maximal";
    r.pass = ok == 10000;
    return timed(r, timer);
}

CheckResult check_vote_polarized(const VerifyOptions& opt, std::uint64_t n_samples,
                                 const std::string& id, Ballot ballot, double limit_value) {
    Timer timer;
    CheckResult r;
    r.id = id;
    r.name = "polarized election expected utility; ballot {" + ballot.to_string() + "}; m=500";
    r.reference = "large-m limit value";
    r.expected = fmt17(limit_value);
    r.tolerance = "0.05";
    PolarizedScenario scenario;
    scenario.m = 500;
    scenario.seed = mix_seed(opt.seed, 0x8b0 + (ballot.b ? 1 : 0));
    const double estimate = polarized_scenario_expected_utility(scenario, ballot, n_samples,
                                                                opt.threads);
    r.observed = fmt17(estimate);
    r.pass = std::abs(estimate - limit_value) <= 0.05;
    return timed(r, timer);
}

// --- criterion 9: report determinism ---

CheckResult check_determinism(const VerifyOptions& opt) {
    Timer timer;
    CheckResult r{"9", "quick report byte-identical across worker counts",
                  "two full reruns; 1 thread vs 4 threads", "byte-identical", "", "exact",
                  false, 0.0};
    VerifyOptions inner = opt;
    inner.quick = true;
    inner.skip_determinism = true;
    inner.threads = 1;
    const std::string first = report_to_json(run_verification(inner));
    inner.threads = 4;
    const std::string second = report_to_json(run_verification(inner));
    r.pass = first == second;
    r.observed = r.pass ? "byte-identical (" + std::to_string(first.size()) + " bytes)"
                        : "reports differ";
    return timed(r, timer);
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    const std::uint64_t mc_large = options.quick ? 100000ull : 10000000ull;
    const std::uint64_t mc_small = options.quick ? 100000ull : 1000000ull;

    VerifyReport report;
    report.seed = options.seed;
    report.quick = options.quick;

    report.checks.push_back(check_rows_vs_oracle());
    report.checks.push_back(check_wn_pmf_exact());
    report.checks.push_back(check_shift_identity());
    for (auto& c : check_uniform_mc(options, mc_small)) report.checks.push_back(std::move(c));
    report.checks.push_back(check_lp_exact_cdf());
    report.checks.push_back(check_lp_mc(options, mc_large));
    report.checks.push_back(check_levy_quarter());
    report.checks.push_back(check_levy_mc(options, mc_small));
    report.checks.push_back(check_levy_density_integral());
    report.checks.push_back(check_levy_density_derivative());
    report.checks.push_back(check_levy_limit_mc(options, mc_small));
    report.checks.push_back(check_normal_constant());
    report.checks.push_back(check_normal_mc4(options, mc_large));
    report.checks.push_back(check_normal_mc5(options, mc_large));
    report.checks.push_back(check_vote_argmax(options));
    report.checks.push_back(check_vote_polarized(options, mc_small, "8b", Ballot{true, true, false},
                                                 4.0));
    report.checks.push_back(check_vote_polarized(options, mc_small, "8c", Ballot{true, false, false},
                                                 5.0));
    if (!options.skip_determinism) report.checks.push_back(check_determinism(options));

    report.all_pass = true;
    for (const auto& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::json doc;
    doc["seed"] = report.seed;
    doc["mode"] = report.quick ? "quick" : "full";
    doc["all_pass"] = report.all_pass;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json row;
        row["id"] = c.id;
        row["name"] = c.name;
        row["reference"] = c.reference;
        row["expected"] = c.expected;
        row["observed"] = c.observed;
        row["tolerance"] = c.tolerance;
        row["pass"] = c.pass;
        checks.push_back(std::move(row));
    }
    doc["checks"] = std::move(checks);
    return doc.dump(2);
}

std::string report_to_csv(const VerifyReport& report) {
    std::ostringstream out;
    out << "id,name,reference,expected,observed,tolerance,pass\n";
    for (const auto& c : report.checks)
        out << c.id << ',' << c.name << ',' << c.reference << ',' << c.expected << ','
            << c.observed << ',' << c.tolerance << ',' << (c.pass ? "true" : "false") << '\n';
    out << "ALL,every check passes,,,,," << (report.all_pass ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace eulerw
