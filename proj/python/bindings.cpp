#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "eulerw/eulerian.hpp"
#include "eulerw/expo_lp.hpp"
#include "eulerw/gaps.hpp"
#include "eulerw/heavy_tail.hpp"
#include "eulerw/mc.hpp"
#include "eulerw/verify.hpp"
#include "eulerw/voting.hpp"

namespace py = pybind11;
using namespace eulerw;

namespace {

py::int_ to_pyint(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_pyints(const std::vector<BigInt>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_pyint(v));
    return out;
}

// Accepts any sequence whose entries stringify to "p/q" or an integer, which
// covers python ints, strs and fractions.Fraction.
std::vector<Rational> to_rationals(const py::sequence& seq) {
    std::vector<Rational> out;
    for (const auto& item : seq) out.push_back(parse_fraction(py::str(item)));
    return out;
}

UtilityModel model_from_name(const std::string& name, double alpha) {
    if (name == "uniform") return UtilityModel::uniform();
    if (name == "normal") return UtilityModel::normal();
    if (name == "stable") return UtilityModel::stable(alpha);
    throw std::domain_error("model must be uniform, normal or stable");
}

}  // namespace

PYBIND11_MODULE(_eulerw, m) {
    m.doc() = "Exact and Monte Carlo laws of the above-mean count of a random sample";

    py::class_<DiscretePmf>(m, "ExactPmf")
        .def_property_readonly("support_min", &DiscretePmf::support_min)
        .def_property_readonly("support_max", &DiscretePmf::support_max)
        .def_property_readonly("label", &DiscretePmf::label)
        .def("fractions",
             [](const DiscretePmf& p) {
                 std::vector<std::string> out;
                 for (const auto& q : p.probs()) out.push_back(to_fraction_string(q));
                 return out;
             })
        .def("floats", &DiscretePmf::to_doubles)
        .def("at", [](const DiscretePmf& p, int k) { return to_fraction_string(p.at(k)); })
        .def("cdf", [](const DiscretePmf& p, int k) { return to_fraction_string(p.cdf(k)); })
        .def("shifted", &DiscretePmf::shifted)
        .def("__eq__", [](const DiscretePmf& a, const DiscretePmf& b) { return a == b; })
        .def("__repr__", [](const DiscretePmf& p) {
            return "<ExactPmf " + p.label() + " on [" + std::to_string(p.support_min()) + ", " +
                   std::to_string(p.support_max()) + "]>";
        });

    py::class_<EmpiricalPmf>(m, "EmpiricalPmf")
        .def_readonly("support_min", &EmpiricalPmf::support_min)
        .def_readonly("counts", &EmpiricalPmf::counts)
        .def_readonly("n_samples", &EmpiricalPmf::n_samples)
        .def_readonly("seed", &EmpiricalPmf::seed)
        .def_property_readonly("support_max", &EmpiricalPmf::support_max)
        .def("count_at", &EmpiricalPmf::count_at)
        .def("frequencies", &EmpiricalPmf::frequencies)
        .def("empirical_cdf", &EmpiricalPmf::empirical_cdf);

    // exact combinatorics
    m.def("eulerian_number", [](int n, int k) { return to_pyint(eulerian_number(n, k)); });
    m.def("eulerian_row", [](int n) { return to_pyints(eulerian_row(n)); });
    m.def("eulerian_alternating_sum",
          [](int n, int k) { return to_pyint(eulerian_alternating_sum(n, k)); });
    m.def("descent_oracle_row", [](int n) { return to_pyints(descent_oracle_row(n)); });
    m.def("wn_pmf", &wn_pmf, py::arg("n"));
    m.def("floor_sum_pmf", &floor_sum_pmf, py::arg("n"));
    m.def("wn_cdf", [](int n, int k) { return to_fraction_string(wn_cdf(n, k)); });

    // direct counts and the gap form
    m.def("count_above_mean",
          [](const std::vector<double>& v) { return count_above_mean(v); });
    m.def("count_below_mean",
          [](const std::vector<double>& v) { return count_below_mean(v); });
    m.def("sorted_gaps", [](const std::vector<double>& v) { return sorted_gaps(v); });
    m.def("w_below_from_gaps",
          [](const std::vector<double>& g) { return w_below_from_gaps(g); });
    m.def("w_above_from_gaps",
          [](const std::vector<double>& g) { return w_above_from_gaps(g); });

    // competing exponential sums
    m.def(
        "lp_probability",
        [](const std::vector<double>& a, const std::vector<double>& b, double min_separation) {
            LpOptions options;
            options.min_separation = min_separation;
            return lp_probability(a, b, options);
        },
        py::arg("a"), py::arg("b"), py::arg("min_separation") = 1e-9);
    m.def("lp_probability_exact", [](const py::sequence& a, const py::sequence& b) {
        return to_fraction_string(lp_probability_exact(to_rationals(a), to_rationals(b)));
    });
    m.def("lp_probability_mc",
          [](const std::vector<double>& a, const std::vector<double>& b,
             std::uint64_t n_samples, std::uint64_t seed,
             unsigned threads) { return lp_probability_mc(a, b, n_samples, seed, threads); },
          py::arg("a"), py::arg("b"), py::arg("n_samples"), py::arg("seed"),
          py::arg("threads") = 0);
    m.def("wn_cdf_via_lp", &wn_cdf_via_lp);
    m.def("wn_cdf_via_lp_exact",
          [](int n, int k) { return to_fraction_string(wn_cdf_via_lp_exact(n, k)); });

    // heavy-tail laws
    m.def("power_sum", &power_sum);
    m.def("levy_wn_cdf", &levy_wn_cdf);
    m.def("levy_limit_cdf", &levy_limit_cdf);
    m.def("levy_limit_density", &levy_limit_density);
    m.def(
        "sample_stable",
        [](double alpha, std::uint64_t seed, std::size_t count) {
            Xoshiro256 rng(seed);
            std::vector<double> out(count);
            for (auto& x : out) x = sample_stable(alpha, rng);
            return out;
        },
        py::arg("alpha"), py::arg("seed"), py::arg("count"));
    m.def("stable_wn_cdf_mc", &stable_wn_cdf_mc, py::arg("alpha"), py::arg("n"), py::arg("k"),
          py::arg("n_samples"), py::arg("seed"), py::arg("threads") = 0);
    m.def("normal_case_pmf", [](int n) {
        py::list masses;
        for (const auto& mass : normal_case_pmf(n).masses) {
            py::dict d;
            d["k"] = mass.k;
            d["value"] = mass.value;
            d["proved"] = mass.proved;
            masses.append(d);
        }
        return masses;
    });

    // sampling engine
    m.def(
        "sample_wn",
        [](const std::string& model, int n, std::uint64_t n_samples, std::uint64_t seed,
           double alpha, unsigned threads) {
            return sample_wn(model_from_name(model, alpha), n, n_samples, seed, threads);
        },
        py::arg("model"), py::arg("n"), py::arg("n_samples"), py::arg("seed"),
        py::arg("alpha") = 0.5, py::arg("threads") = 0);
    m.def("sample_floor_sum", &sample_floor_sum, py::arg("n"), py::arg("n_samples"),
          py::arg("seed"), py::arg("threads") = 0);
    m.def("compare_pmf", [](const EmpiricalPmf& emp, const DiscretePmf& exact) {
        const auto r = compare_pmf(emp, exact);
        py::dict d;
        d["max_abs_dev"] = r.max_abs_dev;
        d["z_scores"] = r.z_scores;
        d["chi_square"] = r.chi_square;
        d["df"] = r.df;
        return d;
    });

    // approval voting
    m.def("optimal_approval_set",
          [](const std::vector<double>& u) { return optimal_approval_set(u); });
    m.def("expected_gain",
          [](const std::vector<double>& u, const std::vector<int>& indicators, double p) {
              return expected_gain(u, indicators, p);
          },
          py::arg("utilities"), py::arg("indicators"), py::arg("p") = 1.0);
    m.def("max_gain_over_subsets",
          [](const std::vector<double>& u, double p) { return max_gain_over_subsets(u, p); },
          py::arg("utilities"), py::arg("p") = 1.0);
    m.def(
        "polarized_expected_utility",
        [](long m_voters, const std::string& ballot, std::uint64_t n_samples,
           std::uint64_t seed, const std::array<double, 3>& utilities, unsigned threads) {
            PolarizedScenario scenario;
            scenario.m = m_voters;
            scenario.my_utilities = utilities;
            scenario.seed = seed;
            return polarized_scenario_expected_utility(scenario, Ballot::parse(ballot),
                                                       n_samples, threads);
        },
        py::arg("m"), py::arg("ballot"), py::arg("n_samples"), py::arg("seed"),
        py::arg("utilities") = std::array<double, 3>{10.0, 6.0, 0.0}, py::arg("threads") = 0);
    m.def(
        "polarized_exact",
        [](long m_voters, const std::string& ballot, const std::array<double, 3>& utilities) {
            return polarized_scenario_exact(m_voters, utilities, Ballot::parse(ballot));
        },
        py::arg("m"), py::arg("ballot"),
        py::arg("utilities") = std::array<double, 3>{10.0, 6.0, 0.0});

    // verification entry point (JSON report; exit policy is left to the CLI)
    m.def(
        "verify_report_json",
        [](bool quick, std::uint64_t seed, unsigned threads) {
            VerifyOptions options;
            options.quick = quick;
            options.seed = seed;
            options.threads = threads;
            return report_to_json(run_verification(options));
        },
        py::arg("quick") = true, py::arg("seed") = kDefaultSeed, py::arg("threads") = 0);
}
