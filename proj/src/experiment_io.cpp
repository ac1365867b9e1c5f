#include "hcnsim/experiment_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include <nlohmann/json.hpp>

#include "hcnsim/expectation.hpp"

namespace hcnsim {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownTopLevel = {
    "tiers",     "alpha",     "cochannel_fraction", "ms_intensity", "trials",
    "seed",      "path_loss", "window_halfwidth",   "scheme",       "sweep"};
const std::set<std::string> kKnownTierFields = {"power", "intensity"};
const std::set<std::string> kKnownSweepFields = {"axis", "values"};

double as_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw ConfigError(field + " must be a number");
    return j.get<double>();
}

std::vector<TierConfig> parse_tiers(const json& j) {
    if (!j.is_array() || j.empty())
        throw ConfigError("tiers must be a nonempty array of {power, intensity} objects");
    std::vector<TierConfig> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& t = j[i];
        const std::string where = "tiers[" + std::to_string(i) + "]";
        if (!t.is_object()) throw ConfigError(where + " must be an object");
        for (const auto& item : t.items())
            if (!kKnownTierFields.count(item.key()))
                throw ConfigError("unknown field '" + item.key() + "' in " + where);
        if (!t.contains("power") || !t.contains("intensity"))
            throw ConfigError(where + " needs both power and intensity");
        out.push_back(TierConfig{as_number(t["power"], where + ".power"),
                                 as_number(t["intensity"], where + ".intensity")});
    }
    return out;
}

SweepSpec parse_sweep(const json& j, double alpha) {
    if (!j.is_object()) throw ConfigError("sweep must be an object with axis and values");
    for (const auto& item : j.items())
        if (!kKnownSweepFields.count(item.key()))
            throw ConfigError("unknown field '" + item.key() + "' in sweep");
    if (!j.contains("axis") || !j.contains("values"))
        throw ConfigError("sweep needs both axis and values");
    SweepSpec out;
    const std::string axis = j["axis"].is_string() ? j["axis"].get<std::string>() : "";
    if (axis == "alpha") {
        out.axis = SweepAxis::alpha;
    } else if (axis == "n_ty") {
        out.axis = SweepAxis::n_ty;
    } else {
        throw ConfigError("sweep.axis must be \"alpha\" or \"n_ty\"");
    }
    if (!j["values"].is_array() || j["values"].empty())
        throw ConfigError("sweep.values must be a nonempty array of numbers");
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < j["values"].size(); ++i) {
        const double v =
            as_number(j["values"][i], "sweep.values[" + std::to_string(i) + "]");
        if (!(v > prev)) throw ConfigError("sweep.values must be strictly increasing");
        if (out.axis == SweepAxis::alpha && !(v > 2.0))
            throw ConfigError("sweep.values: alpha values must exceed 2");
        if (out.axis == SweepAxis::n_ty && !(v >= 1.0))
            throw ConfigError("sweep.values: n_ty values must be at least 1");
        out.values.push_back(v);
        prev = v;
    }
    (void)alpha;
    return out;
}

}  // namespace

SchemeSelection parse_scheme_selection(const std::string& name) {
    if (name == "conventional") return SchemeSelection::conventional;
    if (name == "proposed") return SchemeSelection::proposed;
    if (name == "both") return SchemeSelection::both;
    throw ConfigError("scheme must be \"conventional\", \"proposed\", or \"both\"");
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    for (const auto& item : j.items())
        if (!kKnownTopLevel.count(item.key()))
            throw ConfigError("unknown config field '" + item.key() + "'");

    std::vector<TierConfig> tiers{{10.0, 0.01}, {1.0, 0.1}, {0.1, 1.0}};
    if (j.contains("tiers")) tiers = parse_tiers(j["tiers"]);

    const double alpha = j.contains("alpha") ? as_number(j["alpha"], "alpha") : 4.0;
    const double cochannel_fraction =
        j.contains("cochannel_fraction") ? as_number(j["cochannel_fraction"], "cochannel_fraction")
                                         : 1.0 / 3.0;
    std::optional<double> ms_intensity;
    if (j.contains("ms_intensity"))
        ms_intensity = as_number(j["ms_intensity"], "ms_intensity");

    std::optional<NetworkConfig> network;
    try {
        network.emplace(std::move(tiers), alpha, cochannel_fraction, ms_intensity);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    PathLossKind kind = PathLossKind::bounded;
    if (j.contains("path_loss")) {
        const std::string name =
            j["path_loss"].is_string() ? j["path_loss"].get<std::string>() : "";
        if (name == "bounded") {
            kind = PathLossKind::bounded;
        } else if (name == "power_law") {
            kind = PathLossKind::power_law;
        } else {
            throw ConfigError("path_loss must be \"bounded\" or \"power_law\"");
        }
    }

    long trials = 100000;
    if (j.contains("trials")) {
        if (!j["trials"].is_number_integer() || j["trials"].get<long long>() < 1)
            throw ConfigError("trials must be a positive integer");
        trials = j["trials"].get<long>();
    }
    std::uint64_t seed = 1;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0)
            throw ConfigError("seed must be a nonnegative integer");
        seed = j["seed"].get<std::uint64_t>();
    }
    std::optional<double> window_halfwidth;
    if (j.contains("window_halfwidth")) {
        const double hw = as_number(j["window_halfwidth"], "window_halfwidth");
        if (!(std::isfinite(hw) && hw > 0.0))
            throw ConfigError("window_halfwidth must be finite and positive");
        window_halfwidth = hw;
    }

    RunConfig out{ExperimentSpec{std::move(*network), Scheme::max_power,
                                 PathLossModel(kind, alpha), trials, seed, window_halfwidth},
                  SchemeSelection::both, std::nullopt};
    if (j.contains("scheme")) {
        if (!j["scheme"].is_string())
            throw ConfigError("scheme must be \"conventional\", \"proposed\", or \"both\"");
        out.schemes = parse_scheme_selection(j["scheme"].get<std::string>());
    }
    if (j.contains("sweep")) out.sweep = parse_sweep(j["sweep"], alpha);
    return out;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

const char* scheme_name(Scheme scheme) {
    return scheme == Scheme::max_power ? "conventional" : "proposed";
}

std::vector<Scheme> selected_schemes(SchemeSelection selection) {
    switch (selection) {
        case SchemeSelection::conventional:
            return {Scheme::max_power};
        case SchemeSelection::proposed:
            return {Scheme::interference_min};
        default:
            return {Scheme::max_power, Scheme::interference_min};
    }
}

NetworkConfig config_for_axis(const NetworkConfig& base, SweepAxis axis, double value) {
    if (axis == SweepAxis::alpha) {
        return NetworkConfig(base.tiers(), value, base.cochannel_fraction(),
                             base.has_ms_intensity_override()
                                 ? std::optional<double>(base.ms_intensity())
                                 : std::nullopt);
    }
    return NetworkConfig(base.tiers(), base.alpha(), 1.0 / value,
                         base.has_ms_intensity_override()
                             ? std::optional<double>(base.ms_intensity())
                             : std::nullopt);
}

SweepRow evaluate_point(const ExperimentSpec& base, const NetworkConfig& cfg, Scheme scheme,
                        double axis_value, double n_ty, unsigned threads) {
    ExperimentSpec spec = base;
    spec.config = cfg;
    spec.scheme = scheme;
    if (spec.path_loss.alpha() != cfg.alpha())
        spec.path_loss = PathLossModel(spec.path_loss.kind(), cfg.alpha());
    ExperimentSummary summary = run_experiment(spec, threads);
    const InterferenceEstimate oracle =
        scheme == Scheme::max_power
            ? expected_interference_conventional(cfg, spec.path_loss)
            : expected_interference_proposed(cfg, spec.path_loss, n_ty);
    summary.oracle_value = oracle.value;
    return SweepRow{axis_value,
                    scheme_name(scheme),
                    summary.mean_victim_interference,
                    summary.ci95_halfwidth,
                    oracle.value,
                    summary.blocked_fraction,
                    spec.trials,
                    spec.seed};
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& config, unsigned threads) {
    if (!config.sweep)
        throw std::invalid_argument("run_sweep requires a sweep specification");
    const SweepSpec& sweep = *config.sweep;
    std::vector<SweepRow> rows;
    for (double value : sweep.values) {
        const NetworkConfig cfg = config_for_axis(config.base.config, sweep.axis, value);
        const double n_ty = sweep.axis == SweepAxis::n_ty ? value : mean_candidate_count(cfg);
        for (Scheme scheme : selected_schemes(config.schemes))
            rows.push_back(evaluate_point(config.base, cfg, scheme, value, n_ty, threads));
    }
    return rows;
}

std::vector<SweepRow> run_single(const RunConfig& config, unsigned threads) {
    const NetworkConfig& cfg = config.base.config;
    std::vector<SweepRow> rows;
    for (Scheme scheme : selected_schemes(config.schemes))
        rows.push_back(evaluate_point(config.base, cfg, scheme, cfg.alpha(),
                                      mean_candidate_count(cfg), threads));
    return rows;
}

std::string csv_row(const SweepRow& row) {
    char buf[320];
    std::snprintf(buf, sizeof(buf), "%s,%s,%s,%s,%s,%s,%ld,%llu",
                  fmt_double(row.axis_value).c_str(), row.scheme.c_str(),
                  fmt_double(row.mc_mean).c_str(), fmt_double(row.mc_ci95).c_str(),
                  fmt_double(row.oracle_value).c_str(), fmt_double(row.blocked_fraction).c_str(),
                  row.trials, static_cast<unsigned long long>(row.seed));
    return buf;
}

}  // namespace hcnsim
