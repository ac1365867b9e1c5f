#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hcnsim/expectation.hpp"
#include "hcnsim/experiment_io.hpp"

namespace py = pybind11;

namespace {

hcnsim::PathLossKind parse_kind(const std::string& name) {
    if (name == "bounded") return hcnsim::PathLossKind::bounded;
    if (name == "power_law") return hcnsim::PathLossKind::power_law;
    throw std::invalid_argument("path_loss must be \"bounded\" or \"power_law\"");
}

hcnsim::Scheme parse_scheme(const std::string& name) {
    if (name == "conventional") return hcnsim::Scheme::max_power;
    if (name == "proposed") return hcnsim::Scheme::interference_min;
    throw std::invalid_argument("scheme must be \"conventional\" or \"proposed\"");
}

hcnsim::NetworkConfig make_config(const std::vector<std::pair<double, double>>& tiers,
                                  double alpha, double cochannel_fraction,
                                  std::optional<double> ms_intensity) {
    std::vector<hcnsim::TierConfig> t;
    t.reserve(tiers.size());
    for (const auto& [power, intensity] : tiers)
        t.push_back(hcnsim::TierConfig{power, intensity});
    return hcnsim::NetworkConfig(std::move(t), alpha, cochannel_fraction, ms_intensity);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "K-tier downlink interference simulator: power-normalized association analysis";

    py::class_<hcnsim::NetworkConfig>(m, "NetworkConfig")
        .def(py::init(&make_config), py::arg("tiers"), py::arg("alpha"),
             py::arg("cochannel_fraction"), py::arg("ms_intensity") = std::nullopt,
             "tiers: list of (power, intensity) pairs")
        .def_property_readonly("alpha", &hcnsim::NetworkConfig::alpha)
        .def_property_readonly("cochannel_fraction", &hcnsim::NetworkConfig::cochannel_fraction)
        .def_property_readonly("num_tiers", &hcnsim::NetworkConfig::num_tiers)
        .def_property_readonly("total_bs_intensity", &hcnsim::NetworkConfig::total_bs_intensity)
        .def_property_readonly("cochannel_bs_intensity",
                               &hcnsim::NetworkConfig::cochannel_bs_intensity)
        .def_property_readonly("ms_intensity", &hcnsim::NetworkConfig::ms_intensity)
        .def_property_readonly("tiers", [](const hcnsim::NetworkConfig& cfg) {
            std::vector<std::pair<double, double>> out;
            for (const auto& t : cfg.tiers()) out.emplace_back(t.power, t.intensity);
            return out;
        });

    py::class_<hcnsim::ExperimentSummary>(m, "ExperimentSummary")
        .def_property_readonly("scheme",
                               [](const hcnsim::ExperimentSummary& s) {
                                   return s.scheme == hcnsim::Scheme::max_power ? "conventional"
                                                                                : "proposed";
                               })
        .def_readonly("mean_victim_interference",
                      &hcnsim::ExperimentSummary::mean_victim_interference)
        .def_readonly("ci95_halfwidth", &hcnsim::ExperimentSummary::ci95_halfwidth)
        .def_readonly("blocked_fraction", &hcnsim::ExperimentSummary::blocked_fraction)
        .def_readonly("trials_used", &hcnsim::ExperimentSummary::trials_used)
        .def_readonly("trials_total", &hcnsim::ExperimentSummary::trials_total)
        .def_readonly("oracle_value", &hcnsim::ExperimentSummary::oracle_value)
        .def("__repr__", [](const hcnsim::ExperimentSummary& s) {
            std::ostringstream ss;
            ss << "ExperimentSummary(scheme="
               << (s.scheme == hcnsim::Scheme::max_power ? "conventional" : "proposed")
               << ", mean=" << s.mean_victim_interference << ", ci95=" << s.ci95_halfwidth
               << ", blocked_fraction=" << s.blocked_fraction << ", trials_used=" << s.trials_used
               << ")";
            return ss.str();
        });

    m.def("scale_factor", &hcnsim::scale_factor, py::arg("power"), py::arg("alpha"));
    m.def("normalized_intensity", &hcnsim::normalized_intensity, py::arg("config"));
    m.def("tier_fraction", &hcnsim::tier_fraction, py::arg("config"), py::arg("k"));
    m.def("nearest_distance_pdf", &hcnsim::nearest_distance_pdf, py::arg("r"),
          py::arg("intensity"));
    m.def("nearest_distance_cdf", &hcnsim::nearest_distance_cdf, py::arg("r"),
          py::arg("intensity"));
    m.def("tier_power_pdf", &hcnsim::tier_power_pdf, py::arg("p"), py::arg("config"),
          py::arg("k"));
    m.def("tier_power_cdf", &hcnsim::tier_power_cdf, py::arg("p"), py::arg("config"),
          py::arg("k"));
    m.def("min_d_pdf", &hcnsim::min_d_pdf, py::arg("d"), py::arg("config"));
    m.def("min_d_cdf", &hcnsim::min_d_cdf, py::arg("d"), py::arg("config"));
    m.def("max_power_cdf_direct", &hcnsim::max_power_cdf_direct, py::arg("p"), py::arg("config"));
    m.def("max_power_cdf_tpnm", &hcnsim::max_power_cdf_tpnm, py::arg("p"), py::arg("config"));
    m.def("victim_distance_pdf", &hcnsim::victim_distance_pdf, py::arg("r"),
          py::arg("ms_intensity"));
    m.def("victim_distance_cdf", &hcnsim::victim_distance_cdf, py::arg("r"),
          py::arg("ms_intensity"));
    m.def("r_opt_pdf", &hcnsim::r_opt_pdf, py::arg("r"), py::arg("ms_intensity"),
          py::arg("n_ty"));
    m.def("r_opt_cdf", &hcnsim::r_opt_cdf, py::arg("r"), py::arg("ms_intensity"),
          py::arg("n_ty"));
    m.def("mean_candidate_count", &hcnsim::mean_candidate_count, py::arg("config"));
    m.def(
        "mean_candidate_count_by_integral",
        [](const hcnsim::NetworkConfig& cfg) { return hcnsim::mean_candidate_count_by_integral(cfg); },
        py::arg("config"));
    m.def("interference_prefactor", &hcnsim::interference_prefactor, py::arg("config"));

    m.def(
        "expected_interference_conventional",
        [](const hcnsim::NetworkConfig& cfg, const std::string& path_loss) {
            const auto est = hcnsim::expected_interference_conventional(
                cfg, hcnsim::PathLossModel(parse_kind(path_loss), cfg.alpha()));
            return py::make_tuple(est.value, est.error_bound);
        },
        py::arg("config"), py::arg("path_loss") = "bounded",
        "Returns (value, error_bound) of the quadrature oracle");
    m.def(
        "expected_interference_proposed",
        [](const hcnsim::NetworkConfig& cfg, double n_ty, const std::string& path_loss) {
            const auto est = hcnsim::expected_interference_proposed(
                cfg, hcnsim::PathLossModel(parse_kind(path_loss), cfg.alpha()), n_ty);
            return py::make_tuple(est.value, est.error_bound);
        },
        py::arg("config"), py::arg("n_ty"), py::arg("path_loss") = "bounded",
        "Returns (value, error_bound) of the quadrature oracle");

    m.def(
        "run_trial",
        [](const hcnsim::NetworkConfig& cfg, const std::string& scheme,
           const std::string& path_loss, long trials, std::uint64_t seed, long trial_index,
           std::optional<double> window_halfwidth) {
            const hcnsim::ExperimentSpec spec{
                cfg, parse_scheme(scheme),
                hcnsim::PathLossModel(parse_kind(path_loss), cfg.alpha()), trials, seed,
                window_halfwidth};
            return hcnsim::run_trial(spec, trial_index);
        },
        py::arg("config"), py::arg("scheme"), py::arg("path_loss"), py::arg("trials"),
        py::arg("seed"), py::arg("trial_index"), py::arg("window_halfwidth") = std::nullopt,
        "Victim-interference sample of one trial, or None when blocked");
    m.def(
        "run_experiment",
        [](const hcnsim::NetworkConfig& cfg, const std::string& scheme,
           const std::string& path_loss, long trials, std::uint64_t seed,
           std::optional<double> window_halfwidth, unsigned threads) {
            const hcnsim::ExperimentSpec spec{
                cfg, parse_scheme(scheme),
                hcnsim::PathLossModel(parse_kind(path_loss), cfg.alpha()), trials, seed,
                window_halfwidth};
            return hcnsim::run_experiment(spec, threads);
        },
        py::arg("config"), py::arg("scheme"), py::arg("path_loss") = "bounded",
        py::arg("trials") = 100000, py::arg("seed") = 1,
        py::arg("window_halfwidth") = std::nullopt, py::arg("threads") = 0);

    m.def(
        "ks_statistic",
        [](std::vector<double> samples, const std::function<double(double)>& cdf) {
            return hcnsim::ks_statistic(std::move(samples), cdf);
        },
        py::arg("samples"), py::arg("cdf"));
    m.def(
        "run_validation",
        []() {
            std::ostringstream ss;
            const int failures = hcnsim::run_validation(ss);
            return py::make_tuple(failures, ss.str());
        },
        "Runs the self-check suite; returns (failure_count, report_text)");
}
