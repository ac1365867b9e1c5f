#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "hcnsim/expectation.hpp"
#include "hcnsim/experiment_io.hpp"

namespace hcnsim {

namespace {

NetworkConfig reference_config(double alpha, double cochannel_fraction = 1.0 / 3.0) {
    return NetworkConfig({{10.0, 0.01}, {1.0, 0.1}, {0.1, 1.0}}, alpha, cochannel_fraction);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

struct Reporter {
    std::ostream& out;
    int failures = 0;

    void report(bool pass, const std::string& name, const std::string& detail) {
        out << (pass ? "PASS " : "FAIL ") << name << ' ' << detail << '\n';
        if (!pass) ++failures;
    }

    template <typename Fn>
    void check(const std::string& name, Fn&& fn) {
        try {
            fn(*this, name);
        } catch (const std::exception& e) {
            report(false, name, std::string("error=") + e.what());
        }
    }
};

void check_route_equivalence(Reporter& rep, const std::string& name) {
    double max_diff = 0.0;
    for (double alpha : {2.5, 3.0, 4.0, 6.0}) {
        const NetworkConfig cfg = reference_config(alpha);
        for (int i = 0; i < 1000; ++i) {
            const double p = std::pow(10.0, -3.0 + 6.0 * i / 999.0);
            max_diff = std::max(
                max_diff, std::abs(max_power_cdf_direct(p, cfg) - max_power_cdf_tpnm(p, cfg)));
        }
    }
    rep.report(max_diff < 1e-12, name, "max_diff=" + fmt(max_diff) + " tol=1e-12");
}

void check_normalization_exactness(Reporter& rep, const std::string& name) {
    RandomStream rng(2026);
    double max_rel = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double alpha = rng.uniform(2.5, 6.0);
        const double power = std::exp(rng.uniform(std::log(0.05), std::log(20.0)));
        const double r = std::exp(rng.uniform(std::log(0.05), std::log(30.0)));
        const double original = power * std::pow(r, -alpha);
        const double image = std::pow(scale_factor(power, alpha) * r, -alpha);
        max_rel = std::max(max_rel, std::abs(original - image) / original);
    }
    rep.report(max_rel < 1e-12, name, "points=1000 max_rel=" + fmt(max_rel) + " tol=1e-12");
}

void check_argmax_invariance(Reporter& rep, const std::string& name) {
    const NetworkConfig cfg = reference_config(4.0);
    const PathLossModel model(PathLossKind::bounded, 4.0);
    const Window window = Window::square(Point{0.0, 0.0}, 10.0);
    const RandomStream root(777);
    const int networks = 2000;
    int mismatches = 0;
    int checked = 0;
    for (int i = 0; i < networks; ++i) {
        const Scenario scenario =
            realize_scenario(cfg, model, window, root.split(static_cast<std::uint64_t>(i)));
        if (scenario.bs_all.size() == 0) continue;
        ++checked;
        try {
            associate_max_power(scenario);
        } catch (const std::logic_error&) {
            ++mismatches;
        }
    }
    rep.report(mismatches == 0 && checked > 0, name,
               "networks=" + std::to_string(checked) + " mismatches=" + std::to_string(mismatches));
}

double sample_max_power(const NetworkConfig& cfg, const Window& window,
                        const RandomStream& stream) {
    double best = 0.0;
    for (std::size_t k = 0; k < cfg.num_tiers(); ++k) {
        RandomStream tier_stream = stream.split(k);
        const PointPattern pattern =
            sample_ppp(cfg.tier(k).intensity, window, tier_stream, static_cast<int>(k));
        for (const Point& p : pattern.points()) {
            const double r = distance(p, window.center);
            best = std::max(best, cfg.tier(k).power * std::pow(r, -cfg.alpha()));
        }
    }
    return best;
}

void check_max_power_ks(Reporter& rep, const std::string& name) {
    const NetworkConfig cfg = reference_config(4.0);
    const Window window = Window::square(Point{0.0, 0.0}, 10.0);
    const RandomStream root(404);
    std::vector<double> samples;
    const int draws = 10000;
    samples.reserve(draws);
    for (int i = 0; i < draws; ++i) {
        const double s = sample_max_power(cfg, window, root.split(static_cast<std::uint64_t>(i)));
        if (s > 0.0) samples.push_back(s);
    }
    const double d = ks_statistic(samples, [&cfg](double p) { return max_power_cdf_tpnm(p, cfg); });
    const double crit = 1.63 / std::sqrt(static_cast<double>(samples.size()));
    rep.report(d < crit, name,
               "n=" + std::to_string(samples.size()) + " D=" + fmt(d) + " crit=" + fmt(crit));
}

void check_nearest_distance_ks(Reporter& rep, const std::string& name) {
    const Window window = Window::square(Point{0.0, 0.0}, 8.0);
    const RandomStream root(55);
    std::vector<double> samples;
    const int draws = 10000;
    samples.reserve(draws);
    for (int i = 0; i < draws; ++i) {
        RandomStream stream = root.split(static_cast<std::uint64_t>(i));
        const PointPattern pattern = sample_ppp(1.0, window, stream);
        const auto hit = nearest(pattern, window.center);
        if (hit) samples.push_back(hit->dist);
    }
    const double d = ks_statistic(samples, [](double r) { return nearest_distance_cdf(r, 1.0); });
    const double crit = 1.63 / std::sqrt(static_cast<double>(samples.size()));
    rep.report(d < crit, name,
               "n=" + std::to_string(samples.size()) + " D=" + fmt(d) + " crit=" + fmt(crit));
}

void check_pdf_normalization(Reporter& rep, const std::string& name) {
    const NetworkConfig cfg = reference_config(4.0);
    const double lam_ms = cfg.ms_intensity();
    const double lam_norm_co = cfg.cochannel_fraction() * normalized_intensity(cfg);
    double max_dev = 0.0;
    const auto note = [&max_dev](double integral) {
        max_dev = std::max(max_dev, std::abs(integral - 1.0));
    };
    note(integrate_improper([](double r) { return nearest_distance_pdf(r, 0.37); }).value);
    for (std::size_t k = 0; k < cfg.num_tiers(); ++k) {
        note(integrate([&cfg, k](double u) {
                 const double p = std::exp(u);
                 return tier_power_pdf(p, cfg, k) * p;
             },
                        -60.0, 60.0)
                 .value);
    }
    note(integrate_improper([&cfg](double d) { return min_d_pdf(d, cfg); }).value);
    note(integrate_improper([lam_ms](double r) { return victim_distance_pdf(r, lam_ms); }).value);
    note(integrate_improper([lam_norm_co](double r) {
             return nearest_distance_pdf(r, lam_norm_co);
         }).value);
    note(integrate_improper([lam_ms](double r) { return r_opt_pdf(r, lam_ms, 3.0); }).value);
    rep.report(max_dev < 1e-8, name, "pdfs=8 max_dev=" + fmt(max_dev) + " tol=1e-8");
}

void check_candidate_count_routes(Reporter& rep, const std::string& name) {
    const NetworkConfig settings[] = {
        reference_config(4.0),
        reference_config(3.0, 0.2),
        NetworkConfig({{1.0, 0.45}}, 4.0, 1.0),
    };
    double max_diff = 0.0;
    for (const NetworkConfig& cfg : settings) {
        const double closed = mean_candidate_count(cfg);
        const double integral = mean_candidate_count_by_integral(cfg);
        max_diff = std::max(max_diff, std::abs(closed - integral));
    }
    rep.report(max_diff < 1e-8, name, "settings=3 max_diff=" + fmt(max_diff) + " tol=1e-8");
}

void check_proposed_degenerates(Reporter& rep, const std::string& name) {
    const NetworkConfig cfg = reference_config(4.0);
    const PathLossModel model(PathLossKind::bounded, 4.0);
    const double conv = expected_interference_conventional(cfg, model).value;
    const double prop = expected_interference_proposed(cfg, model, 1.0).value;
    const double rel = std::abs(prop - conv) / conv;
    rep.report(rel <= 1e-10, name, "rel_diff=" + fmt(rel) + " tol=1e-10");
}

void check_oracle_ordering(Reporter& rep, const std::string& name) {
    int violations = 0;
    for (double alpha : {2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0}) {
        const NetworkConfig cfg = reference_config(alpha);
        const PathLossModel model(PathLossKind::bounded, alpha);
        const double conv = expected_interference_conventional(cfg, model).value;
        const double prop = expected_interference_proposed(cfg, model, 3.0).value;
        if (!(prop < conv)) ++violations;
    }
    rep.report(violations == 0, name, "alphas=8 violations=" + std::to_string(violations));
}

void check_scheme_dominance(Reporter& rep, const std::string& name) {
    const NetworkConfig cfg = reference_config(4.0);
    const PathLossModel model(PathLossKind::bounded, 4.0);
    const Window window = Window::square(Point{0.0, 0.0}, auto_window_halfwidth(cfg));
    const RandomStream root(9090);
    int violations = 0;
    int trials = 0;
    double sum_conv = 0.0;
    double sum_prop = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const Scenario scenario =
            realize_scenario(cfg, model, window, root.split(static_cast<std::uint64_t>(i)));
        if (scenario.bs_all.size() == 0) continue;
        const AssociationOutcome conv = associate_max_power(scenario);
        const AssociationOutcome prop = associate_interference_min(scenario);
        if (prop.blocked || prop.victim_interference > conv.victim_interference) ++violations;
        sum_conv += conv.victim_interference;
        sum_prop += prop.victim_interference;
        ++trials;
    }
    rep.report(violations == 0 && sum_prop < sum_conv, name,
               "trials=" + std::to_string(trials) + " violations=" + std::to_string(violations) +
                   " mean_conv=" + fmt(sum_conv / trials) + " mean_prop=" + fmt(sum_prop / trials));
}

void check_prefactor_unity(Reporter& rep, const std::string& name) {
    const double pre = interference_prefactor(reference_config(4.0));
    rep.report(std::abs(pre - 1.0) < 1e-9, name, "prefactor=" + fmt(pre) + " tol=1e-9");
}

void check_ci_shrinkage(Reporter& rep, const std::string& name) {
    const NetworkConfig cfg = reference_config(4.0);
    const ExperimentSpec base{cfg, Scheme::max_power, PathLossModel(PathLossKind::bounded, 4.0),
                              2000, 31337, std::nullopt};
    ExperimentSpec wide = base;
    wide.trials = 8000;
    const double ci_small = run_experiment(base).ci95_halfwidth;
    const double ci_large = run_experiment(wide).ci95_halfwidth;
    const double ratio = ci_small / ci_large;
    rep.report(ratio > 1.7 && ratio < 2.3, name, "ratio=" + fmt(ratio) + " want=[1.7,2.3]");
}

void check_mc_reproducibility(Reporter& rep, const std::string& name) {
    const NetworkConfig cfg = reference_config(4.0);
    const ExperimentSpec spec{cfg, Scheme::interference_min,
                              PathLossModel(PathLossKind::bounded, 4.0), 500, 77, std::nullopt};
    const ExperimentSummary serial_a = run_experiment(spec, 1);
    const ExperimentSummary serial_b = run_experiment(spec, 1);
    const ExperimentSummary threaded = run_experiment(spec, 3);
    const bool identical =
        serial_a.mean_victim_interference == serial_b.mean_victim_interference &&
        serial_a.mean_victim_interference == threaded.mean_victim_interference &&
        serial_a.ci95_halfwidth == threaded.ci95_halfwidth &&
        serial_a.blocked_fraction == threaded.blocked_fraction;
    rep.report(identical, name,
               "mean=" + fmt(serial_a.mean_victim_interference) + " bit_identical=" +
                   (identical ? "yes" : "no"));
}

}  // namespace

int run_validation(std::ostream& out) {
    Reporter rep{out};
    rep.check("tpnm_route_equivalence", check_route_equivalence);
    rep.check("tpnm_normalization_exactness", check_normalization_exactness);
    rep.check("argmax_invariance", check_argmax_invariance);
    rep.check("max_power_ks", check_max_power_ks);
    rep.check("nearest_distance_ks", check_nearest_distance_ks);
    rep.check("pdf_normalization", check_pdf_normalization);
    rep.check("candidate_count_routes", check_candidate_count_routes);
    rep.check("proposed_degenerates_at_one", check_proposed_degenerates);
    rep.check("oracle_ordering", check_oracle_ordering);
    rep.check("scheme_dominance", check_scheme_dominance);
    rep.check("prefactor_unity", check_prefactor_unity);
    rep.check("ci_shrinkage", check_ci_shrinkage);
    rep.check("mc_reproducibility", check_mc_reproducibility);
    return rep.failures;
}

}  // namespace hcnsim
