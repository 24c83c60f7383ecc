#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "eulerw/eulerian.hpp"
#include "eulerw/expo_lp.hpp"
#include "eulerw/gaps.hpp"
#include "eulerw/heavy_tail.hpp"
#include "eulerw/mc.hpp"
#include "eulerw/verify.hpp"
#include "eulerw/voting.hpp"

namespace {

using nlohmann::json;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t parsed) {
    if (opt != nullptr && opt->count() > 0) return parsed;
    if (const char* env = std::getenv("EULERW_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw std::domain_error("EULERW_SEED must be an unsigned integer");
        return static_cast<std::uint64_t>(v);
    }
    return parsed;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::domain_error("not a number: " + s);
    return v;
}

void emit(const std::string& format, const json& doc, const std::string& csv) {
    if (format == "csv")
        std::cout << csv;
    else
        std::cout << doc.dump(2) << "\n";
}

json pmf_to_json(const eulerw::DiscretePmf& pmf) {
    json doc;
    doc["support_min"] = pmf.support_min();
    doc["label"] = pmf.label();
    json probs = json::array();
    for (const auto& p : pmf.probs()) probs.push_back(eulerw::to_fraction_string(p));
    doc["probs"] = std::move(probs);
    doc["probs_float"] = pmf.to_doubles();
    return doc;
}

std::string pmf_to_csv(const eulerw::DiscretePmf& pmf) {
    std::string out = "k,prob,prob_float\n";
    for (int k = pmf.support_min(); k <= pmf.support_max(); ++k)
        out += std::to_string(k) + "," + eulerw::to_fraction_string(pmf.at(k)) + "," +
               fmt17(static_cast<double>(pmf.at(k))) + "\n";
    return out;
}

json empirical_to_json(const eulerw::EmpiricalPmf& emp) {
    json doc;
    doc["support_min"] = emp.support_min;
    doc["counts"] = emp.counts;
    doc["n_samples"] = emp.n_samples;
    doc["seed"] = emp.seed;
    doc["frequencies"] = emp.frequencies();
    return doc;
}

std::string empirical_to_csv(const eulerw::EmpiricalPmf& emp) {
    std::string out = "k,count\n";
    for (int k = emp.support_min; k <= emp.support_max(); ++k)
        out += std::to_string(k) + "," + std::to_string(emp.count_at(k)) + "\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eulerian laws of above-mean counts: exact forms, closed forms, and seeded "
                 "Monte Carlo cross-checks"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // eulerian n [k]
    auto* cmd_eulerian = app.add_subcommand("eulerian", "Triangle row or single entry");
    int eu_n = 0, eu_k = 0;
    cmd_eulerian->add_option("n", eu_n, "Row index")->required();
    auto* eu_k_opt = cmd_eulerian->add_option("k", eu_k, "Entry index");

    // pmf wn|floorsum n
    auto* cmd_pmf = app.add_subcommand("pmf", "Exact pmf of the above-mean count or floor sum");
    std::string pmf_which;
    int pmf_n = 0;
    cmd_pmf->add_option("which", pmf_which, "wn or floorsum")
        ->required()
        ->check(CLI::IsMember({"wn", "floorsum"}));
    cmd_pmf->add_option("n", pmf_n, "Sample size")->required();

    // cdf wn n k [--via-lp] [--exact]
    auto* cmd_cdf = app.add_subcommand("cdf", "Cumulative law of the above-mean count");
    std::string cdf_which;
    int cdf_n = 0, cdf_k = 0;
    bool cdf_via_lp = false, cdf_exact = false;
    cmd_cdf->add_option("which", cdf_which)->required()->check(CLI::IsMember({"wn"}));
    cmd_cdf->add_option("n", cdf_n)->required();
    cmd_cdf->add_option("k", cdf_k)->required();
    cmd_cdf->add_flag("--via-lp", cdf_via_lp, "Evaluate through the residue closed form");
    cmd_cdf->add_flag("--exact", cdf_exact, "Rational arithmetic on the closed-form path");

    // lp --a ... --b ... [--exact]
    auto* cmd_lp = app.add_subcommand("lp", "P(sum a*xi >= sum b*eta) for standard exponentials");
    std::vector<std::string> lp_a, lp_b;
    bool lp_exact = false;
    double lp_min_sep = 1e-9;
    cmd_lp->add_option("--a", lp_a, "Coefficients of the left sum (distinct, positive)");
    cmd_lp->add_option("--b", lp_b, "Coefficients of the right sum (positive)");
    cmd_lp->add_flag("--exact", lp_exact, "Exact rationals; accepts p/q values");
    cmd_lp->add_option("--min-separation", lp_min_sep, "Float-path separation threshold")
        ->capture_default_str();

    // levy cdf n k | levy limit x
    auto* cmd_levy = app.add_subcommand("levy", "Index-1/2 stable-increment laws");
    cmd_levy->require_subcommand(1);
    auto* cmd_levy_cdf = cmd_levy->add_subcommand("cdf", "Arctan closed form of P(W_n <= k)");
    int levy_n = 0, levy_k = 0;
    cmd_levy_cdf->add_option("n", levy_n)->required();
    cmd_levy_cdf->add_option("k", levy_k)->required();
    auto* cmd_levy_limit = cmd_levy->add_subcommand("limit", "Limit law of W_n/n");
    double levy_x = 0.0;
    cmd_levy_limit->add_option("x", levy_x)->required();

    // normal-case n
    auto* cmd_normal = app.add_subcommand("normal-case", "Closed-form masses for normal samples");
    int normal_n = 0;
    cmd_normal->add_option("n", normal_n, "4 or 5")->required();

    // vote optimal|gain|polarized
    auto* cmd_vote = app.add_subcommand("vote", "Approval-voting strategy tools");
    cmd_vote->require_subcommand(1);
    auto* cmd_vote_opt = cmd_vote->add_subcommand("optimal", "Mean-threshold ballot");
    std::vector<double> vote_utilities;
    cmd_vote_opt->add_option("--utilities", vote_utilities, "Candidate utilities")
        ->required()
        ->expected(-2);
    auto* cmd_vote_gain = cmd_vote->add_subcommand("gain", "Expected gain of a ballot");
    std::vector<double> gain_utilities;
    std::vector<int> gain_approve;
    double gain_p = 1.0;
    cmd_vote_gain->add_option("--utilities", gain_utilities)->required()->expected(-2);
    cmd_vote_gain->add_option("--approve", gain_approve, "1-based approved indices");
    cmd_vote_gain->add_option("--p", gain_p, "Swing-pair probability")->capture_default_str();
    auto* cmd_vote_pol = cmd_vote->add_subcommand("polarized", "Three-candidate scenario");
    long pol_m = 500;
    std::string pol_ballot = "AB";
    std::uint64_t pol_samples = 1000000, pol_seed = eulerw::kDefaultSeed;
    unsigned pol_threads = 0;
    std::vector<double> pol_utilities{10.0, 6.0, 0.0};
    cmd_vote_pol->add_option("--m", pol_m, "Half the size of the polarized electorate")
        ->capture_default_str();
    cmd_vote_pol->add_option("--ballot", pol_ballot, "My ballot, e.g. A, AB, none")
        ->capture_default_str();
    cmd_vote_pol->add_option("--samples", pol_samples)->capture_default_str();
    auto* pol_seed_opt = cmd_vote_pol->add_option("--seed", pol_seed);
    cmd_vote_pol->add_option("--threads", pol_threads);
    cmd_vote_pol->add_option("--utilities", pol_utilities, "My utilities for A B C")->expected(3);
    bool pol_exact = false;
    cmd_vote_pol->add_flag("--exact", pol_exact, "Analytic expectation instead of simulation");

    // sample --model ... -n ... --samples ... --seed ...
    auto* cmd_sample = app.add_subcommand("sample", "Seeded Monte Carlo histograms");
    std::string sample_model = "uniform";
    double sample_alpha = 0.5;
    int sample_n = 0;
    std::uint64_t sample_count = 1000000, sample_seed = eulerw::kDefaultSeed;
    unsigned sample_threads = 0;
    bool sample_floor = false;
    cmd_sample->add_option("--model", sample_model, "uniform, normal or stable")
        ->check(CLI::IsMember({"uniform", "normal", "stable"}))
        ->capture_default_str();
    cmd_sample->add_option("--alpha", sample_alpha, "Stable index")->capture_default_str();
    cmd_sample->add_option("-n,--n", sample_n, "Sample size per draw")->required();
    cmd_sample->add_option("--samples", sample_count)->capture_default_str();
    auto* sample_seed_opt = cmd_sample->add_option("--seed", sample_seed);
    cmd_sample->add_option("--threads", sample_threads);
    cmd_sample->add_flag("--floor-sum", sample_floor,
                         "Histogram floor(sum of uniforms) instead of the above-mean count");

    // verify [--quick]
    auto* cmd_verify = app.add_subcommand("verify", "Run the full check suite");
    bool verify_quick = false;
    std::uint64_t verify_seed = eulerw::kDefaultSeed;
    unsigned verify_threads = 0;
    cmd_verify->add_flag("--quick", verify_quick, "100k samples instead of full budgets");
    auto* verify_seed_opt = cmd_verify->add_option("--seed", verify_seed);
    cmd_verify->add_option("--threads", verify_threads);

    // Let --format (and any other root option) appear after the subcommand tokens.
    for (CLI::App* sub : {cmd_eulerian, cmd_pmf, cmd_cdf, cmd_lp, cmd_levy, cmd_levy_cdf,
                          cmd_levy_limit, cmd_normal, cmd_vote, cmd_vote_opt, cmd_vote_gain,
                          cmd_vote_pol, cmd_sample, cmd_verify})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_eulerian) {
            json doc;
            doc["n"] = eu_n;
            std::string csv;
            if (eu_k_opt->count() > 0) {
                doc["k"] = eu_k;
                doc["value"] = eulerw::eulerian_number(eu_n, eu_k).str();
                csv = "n,k,value\n" + std::to_string(eu_n) + "," + std::to_string(eu_k) + "," +
                      eulerw::eulerian_number(eu_n, eu_k).str() + "\n";
            } else {
                json row = json::array();
                csv = "k,value\n";
                const auto values = eulerw::eulerian_row(eu_n);
                for (std::size_t k = 0; k < values.size(); ++k) {
                    row.push_back(values[k].str());
                    csv += std::to_string(k) + "," + values[k].str() + "\n";
                }
                doc["row"] = std::move(row);
            }
            emit(format, doc, csv);
        } else if (*cmd_pmf) {
            const auto pmf =
                pmf_which == "wn" ? eulerw::wn_pmf(pmf_n) : eulerw::floor_sum_pmf(pmf_n);
            json doc = pmf_to_json(pmf);
            doc["kind"] = pmf_which;
            doc["n"] = pmf_n;
            emit(format, doc, pmf_to_csv(pmf));
        } else if (*cmd_cdf) {
            json doc;
            doc["n"] = cdf_n;
            doc["k"] = cdf_k;
            std::string value;
            if (cdf_via_lp && !cdf_exact) {
                const double v = eulerw::wn_cdf_via_lp(cdf_n, cdf_k);
                doc["value"] = v;
                doc["method"] = "residue formula (float)";
                value = fmt17(v);
            } else if (cdf_via_lp) {
                const auto v = eulerw::wn_cdf_via_lp_exact(cdf_n, cdf_k);
                doc["value"] = eulerw::to_fraction_string(v);
                doc["method"] = "residue formula (exact)";
                value = eulerw::to_fraction_string(v);
            } else {
                const auto v = eulerw::wn_cdf(cdf_n, cdf_k);
                doc["value"] = eulerw::to_fraction_string(v);
                doc["method"] = "partial sums of the exact pmf";
                value = eulerw::to_fraction_string(v);
            }
            emit(format, doc, "n,k,value\n" + std::to_string(cdf_n) + "," +
                                  std::to_string(cdf_k) + "," + value + "\n");
        } else if (*cmd_lp) {
            json doc;
            doc["a"] = lp_a;
            doc["b"] = lp_b;
            std::string value;
            if (lp_exact) {
                std::vector<eulerw::Rational> a, b;
                for (const auto& s : lp_a) a.push_back(eulerw::parse_fraction(s));
                for (const auto& s : lp_b) b.push_back(eulerw::parse_fraction(s));
                const auto v = eulerw::lp_probability_exact(a, b);
                value = eulerw::to_fraction_string(v);
                doc["value"] = value;
            } else {
                std::vector<double> a, b;
                for (const auto& s : lp_a) a.push_back(parse_double(s));
                for (const auto& s : lp_b) b.push_back(parse_double(s));
                eulerw::LpOptions options;
                options.min_separation = lp_min_sep;
                const double v = eulerw::lp_probability(a, b, options);
                value = fmt17(v);
                doc["value"] = v;
            }
            emit(format, doc, "value\n" + value + "\n");
        } else if (*cmd_levy) {
            json doc;
            std::string csv;
            if (*cmd_levy_cdf) {
                const double v = eulerw::levy_wn_cdf(levy_n, levy_k);
                doc["n"] = levy_n;
                doc["k"] = levy_k;
                doc["value"] = v;
                csv = "n,k,value\n" + std::to_string(levy_n) + "," + std::to_string(levy_k) +
                      "," + fmt17(v) + "\n";
            } else {
                const double cdf = eulerw::levy_limit_cdf(levy_x);
                doc["x"] = levy_x;
                doc["cdf"] = cdf;
                csv = "x,cdf,density\n" + fmt17(levy_x) + "," + fmt17(cdf) + ",";
                if (levy_x > 0.0 && levy_x < 1.0) {
                    const double density = eulerw::levy_limit_density(levy_x);
                    doc["density"] = density;
                    csv += fmt17(density);
                } else {
                    doc["density"] = nullptr;
                }
                csv += "\n";
            }
            emit(format, doc, csv);
        } else if (*cmd_normal) {
            const auto constants = eulerw::normal_case_pmf(normal_n);
            json doc;
            doc["n"] = constants.n;
            json masses = json::array();
            std::string csv = "k,value,status\n";
            for (const auto& mass : constants.masses) {
                json row;
                row["k"] = mass.k;
                row["value"] = mass.value;
                row["status"] = mass.proved ? "proved" : "conjectured";
                masses.push_back(std::move(row));
                csv += std::to_string(mass.k) + "," + fmt17(mass.value) + "," +
                       (mass.proved ? "proved" : "conjectured") + "\n";
            }
            doc["masses"] = std::move(masses);
            emit(format, doc, csv);
        } else if (*cmd_vote) {
            if (*cmd_vote_opt) {
                const auto indicators = eulerw::optimal_approval_set(vote_utilities);
                json doc;
                doc["utilities"] = vote_utilities;
                doc["approve"] = indicators;
                json indices = json::array();
                std::string csv = "index,utility,approve\n";
                for (std::size_t j = 0; j < indicators.size(); ++j) {
                    if (indicators[j]) indices.push_back(j + 1);
                    csv += std::to_string(j + 1) + "," + fmt17(vote_utilities[j]) + "," +
                           std::to_string(indicators[j]) + "\n";
                }
                doc["approved_indices"] = std::move(indices);
                emit(format, doc, csv);
            } else if (*cmd_vote_gain) {
                std::vector<int> indicators(gain_utilities.size(), 0);
                for (int idx : gain_approve) {
                    if (idx < 1 || idx > static_cast<int>(gain_utilities.size()))
                        throw std::domain_error("vote gain: approved index out of range");
                    if (indicators[static_cast<std::size_t>(idx - 1)])
                        throw std::domain_error("vote gain: duplicate approved index");
                    indicators[static_cast<std::size_t>(idx - 1)] = 1;
                }
                const double v = eulerw::expected_gain(gain_utilities, indicators, gain_p);
                json doc;
                doc["utilities"] = gain_utilities;
                doc["approve"] = indicators;
                doc["p"] = gain_p;
                doc["value"] = v;
                emit(format, doc, "value\n" + fmt17(v) + "\n");
            } else {
                const auto ballot = eulerw::Ballot::parse(pol_ballot);
                eulerw::PolarizedScenario scenario;
                scenario.m = pol_m;
                scenario.my_utilities = {pol_utilities[0], pol_utilities[1], pol_utilities[2]};
                scenario.seed = resolve_seed(pol_seed_opt, pol_seed);
                json doc;
                doc["m"] = pol_m;
                doc["ballot"] = ballot.to_string();
                double v = 0.0;
                if (pol_exact) {
                    v = eulerw::polarized_scenario_exact(pol_m, scenario.my_utilities, ballot);
                    doc["method"] = "analytic";
                } else {
                    v = eulerw::polarized_scenario_expected_utility(scenario, ballot, pol_samples,
                                                                    pol_threads);
                    doc["method"] = "simulation";
                    doc["n_samples"] = pol_samples;
                    doc["seed"] = scenario.seed;
                }
                doc["expected_utility"] = v;
                emit(format, doc,
                     "m,ballot,expected_utility\n" + std::to_string(pol_m) + "," +
                         ballot.to_string() + "," + fmt17(v) + "\n");
            }
        } else if (*cmd_sample) {
            const std::uint64_t seed = resolve_seed(sample_seed_opt, sample_seed);
            eulerw::EmpiricalPmf emp;
            json doc;
            if (sample_floor) {
                if (sample_model != "uniform")
                    throw std::domain_error("sample: --floor-sum requires the uniform model");
                emp = eulerw::sample_floor_sum(sample_n, sample_count, seed, sample_threads);
                doc["target"] = "floor_sum";
            } else {
                eulerw::UtilityModel model = eulerw::UtilityModel::uniform();
                if (sample_model == "normal") model = eulerw::UtilityModel::normal();
                if (sample_model == "stable") model = eulerw::UtilityModel::stable(sample_alpha);
                emp = eulerw::sample_wn(model, sample_n, sample_count, seed, sample_threads);
                doc["target"] = "above_mean_count";
                if (sample_model == "stable") doc["alpha"] = sample_alpha;
            }
            doc.update(empirical_to_json(emp));
            doc["model"] = sample_model;
            doc["n"] = sample_n;
            emit(format, doc, empirical_to_csv(emp));
        } else if (*cmd_verify) {
            eulerw::VerifyOptions options;
            options.seed = resolve_seed(verify_seed_opt, verify_seed);
            options.quick = verify_quick;
            options.threads = verify_threads;
            const auto report = eulerw::run_verification(options);
            if (format == "csv")
                std::cout << eulerw::report_to_csv(report);
            else
                std::cout << eulerw::report_to_json(report) << "\n";
            return report.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
