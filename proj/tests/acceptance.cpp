// Acceptance gate for the simulator: one PASS/FAIL line per criterion.
//
// Usage: acceptance [criterion-number]
// With no argument every criterion runs; the exit status is the number of
// failing criteria (0 when all pass).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "hcnsim/association.hpp"
#include "hcnsim/channel.hpp"
#include "hcnsim/expectation.hpp"
#include "hcnsim/experiment_io.hpp"
#include "hcnsim/geometry.hpp"
#include "hcnsim/montecarlo.hpp"
#include "hcnsim/tpnm.hpp"

namespace {

using hcnsim::NetworkConfig;
using hcnsim::PathLossKind;
using hcnsim::PathLossModel;
using hcnsim::Point;
using hcnsim::PointPattern;
using hcnsim::RandomStream;
using hcnsim::Window;

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 6) {
    std::ostringstream out;
    out << std::setprecision(precision) << v;
    return out.str();
}

NetworkConfig reference_config(double alpha, double cochannel_fraction = 1.0 / 3.0) {
    return NetworkConfig({{10.0, 0.01}, {1.0, 0.1}, {0.1, 1.0}}, alpha, cochannel_fraction);
}

PointPattern sample_reference_bs(const NetworkConfig& cfg, const Window& window,
                                 const RandomStream& stream) {
    std::vector<PointPattern> tiers;
    tiers.reserve(cfg.num_tiers());
    for (std::size_t k = 0; k < cfg.num_tiers(); ++k) {
        RandomStream tier_stream = stream.split(k);
        tiers.push_back(
            hcnsim::sample_ppp(cfg.tier(k).intensity, window, tier_stream, static_cast<int>(k)));
    }
    return hcnsim::superpose(tiers);
}

// 1. The per-tier product form and the normalized-intensity form of the
//    best-received-power CDF agree pointwise.
Outcome criterion_1() {
    const auto start = Clock::now();
    double max_diff = 0.0;
    for (const double alpha : {2.5, 3.0, 4.0, 6.0}) {
        const NetworkConfig cfg = reference_config(alpha);
        for (int i = 0; i < 1000; ++i) {
            const double p = 1e-3 * std::pow(10.0, 6.0 * i / 999.0);
            max_diff = std::max(max_diff, std::abs(hcnsim::max_power_cdf_direct(p, cfg) -
                                                   hcnsim::max_power_cdf_tpnm(p, cfg)));
        }
    }
    const double elapsed = seconds_since(start);
    return Outcome{max_diff < 1e-12 && elapsed < 1.0,
                   "max_abs_diff=" + fmt(max_diff, 3) + " (bound 1e-12), elapsed=" +
                       fmt(elapsed, 3) + "s (budget 1s)"};
}

// 2. Power normalization preserves the received power at the anchor for every
//    point of a realization.
Outcome criterion_2() {
    const auto start = Clock::now();
    const NetworkConfig cfg = reference_config(4.0);
    const Window window = Window::square({0.0, 0.0}, 10.0);
    const Point anchor{0.0, 0.0};
    RandomStream stream(20260821);
    std::vector<Point> points;
    std::vector<int> tags;
    for (int i = 0; i < 1000; ++i) {
        points.push_back(window.sample_uniform(stream));
        tags.push_back(static_cast<int>(stream.uniform(0.0, 3.0)));
    }
    const PointPattern original(points, tags, window);
    const PointPattern normalized = hcnsim::normalize_realization(original, cfg, anchor);
    double max_rel = 0.0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        const double power = cfg.tier(static_cast<std::size_t>(tags[i])).power;
        const double before =
            power * std::pow(hcnsim::distance(original.points()[i], anchor), -cfg.alpha());
        const double after =
            std::pow(hcnsim::distance(normalized.points()[i], anchor), -cfg.alpha());
        max_rel = std::max(max_rel, std::abs(after - before) / before);
    }
    const double elapsed = seconds_since(start);
    return Outcome{max_rel < 1e-12 && elapsed < 1.0,
                   "n=1000 max_rel_err=" + fmt(max_rel, 3) + " (bound 1e-12), elapsed=" +
                       fmt(elapsed, 3) + "s (budget 1s)"};
}

// 3. The strongest station in the original frame is the nearest station in
//    the normalized frame, realization by realization.
Outcome criterion_3() {
    const auto start = Clock::now();
    const NetworkConfig cfg = reference_config(4.0);
    const Window window = Window::square({0.0, 0.0}, 10.0);
    const Point anchor{0.0, 0.0};
    const RandomStream root(314159);
    const int networks = 10000;
    int compared = 0;
    int matched = 0;
    for (int i = 0; i < networks; ++i) {
        const PointPattern bs =
            sample_reference_bs(cfg, window, root.split(static_cast<std::uint64_t>(i)));
        if (bs.size() == 0) continue;
        std::size_t best_idx = 0;
        double best_power = -1.0;
        for (std::size_t j = 0; j < bs.size(); ++j) {
            const double power = cfg.tier(static_cast<std::size_t>(bs.tier_tags()[j])).power;
            const double p_rx =
                power * std::pow(hcnsim::distance(bs.points()[j], anchor), -cfg.alpha());
            if (p_rx > best_power) {
                best_power = p_rx;
                best_idx = j;
            }
        }
        const PointPattern normalized = hcnsim::normalize_realization(bs, cfg, anchor);
        const auto hit = hcnsim::nearest(normalized, anchor);
        ++compared;
        if (hit && hit->index == best_idx) ++matched;
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "matched " << matched << "/" << compared << " realizations, elapsed="
           << fmt(elapsed, 3) << "s (budget 30s)";
    return Outcome{compared == networks && matched == compared && elapsed < 30.0, detail.str()};
}

// 4. Simulated best-received-power samples follow the analytic distribution.
Outcome criterion_4() {
    const auto start = Clock::now();
    const NetworkConfig cfg = reference_config(4.0);
    const Window window = Window::square({0.0, 0.0}, 10.0);
    const RandomStream root(271828);
    const int draws = 100000;
    std::vector<double> samples;
    samples.reserve(draws);
    for (int i = 0; i < draws; ++i) {
        const PointPattern bs =
            sample_reference_bs(cfg, window, root.split(static_cast<std::uint64_t>(i)));
        double best = 0.0;
        for (std::size_t j = 0; j < bs.size(); ++j) {
            const double power = cfg.tier(static_cast<std::size_t>(bs.tier_tags()[j])).power;
            best = std::max(best, power * std::pow(hcnsim::distance(bs.points()[j],
                                                                    window.center),
                                                   -cfg.alpha()));
        }
        if (best > 0.0) samples.push_back(best);
    }
    const double d = hcnsim::ks_statistic(
        samples, [&cfg](double p) { return hcnsim::max_power_cdf_direct(p, cfg); });
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "n=" << samples.size() << " D=" << fmt(d, 4)
           << " (bound 0.0052), elapsed=" << fmt(elapsed, 3) << "s (budget 120s)";
    return Outcome{samples.size() == static_cast<std::size_t>(draws) && d < 0.0052 &&
                       elapsed < 120.0,
                   detail.str()};
}

// 5. Across the exponent sweep the interference-minimized oracle sits below
//    the conventional one, and simulation agrees with each oracle within 5%.
Outcome criterion_5() {
    const auto start = Clock::now();
    const double n_ty = 3.0;
    const long trials = 100000;
    bool ordering_ok = true;
    double conv_dev_max = 0.0;
    double prop_dev_lo = 0.0;
    double prop_dev_hi = 0.0;
    bool first_prop = true;
    for (const double alpha : {2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.0}) {
        const NetworkConfig cfg = reference_config(alpha, 1.0 / n_ty);
        const PathLossModel loss(PathLossKind::bounded, alpha);
        const double conv_oracle =
            hcnsim::expected_interference_conventional(cfg, loss).value;
        const double prop_oracle =
            hcnsim::expected_interference_proposed(cfg, loss, n_ty).value;
        if (!(prop_oracle < conv_oracle)) ordering_ok = false;

        const hcnsim::ExperimentSpec conv_spec{cfg, hcnsim::Scheme::max_power, loss, trials,
                                               90210, std::nullopt};
        hcnsim::ExperimentSpec prop_spec = conv_spec;
        prop_spec.scheme = hcnsim::Scheme::interference_min;
        const double conv_mc = hcnsim::run_experiment(conv_spec).mean_victim_interference;
        const double prop_mc = hcnsim::run_experiment(prop_spec).mean_victim_interference;

        conv_dev_max = std::max(conv_dev_max, std::abs(conv_mc - conv_oracle) / conv_oracle);
        const double prop_dev = (prop_mc - prop_oracle) / prop_oracle;
        if (first_prop) {
            prop_dev_lo = prop_dev;
            prop_dev_hi = prop_dev;
            first_prop = false;
        } else {
            prop_dev_lo = std::min(prop_dev_lo, prop_dev);
            prop_dev_hi = std::max(prop_dev_hi, prop_dev);
        }
    }
    const double elapsed = seconds_since(start);
    const bool conv_ok = conv_dev_max < 0.05;
    const bool prop_ok = std::max(std::abs(prop_dev_lo), std::abs(prop_dev_hi)) < 0.05;
    std::ostringstream detail;
    detail << "oracle ordering " << (ordering_ok ? "ok" : "VIOLATED") << " at 8 exponents; "
           << "conventional |dev| max " << fmt(100.0 * conv_dev_max, 3) << "% (bound 5%); "
           << "interference-min dev in [" << fmt(100.0 * prop_dev_lo, 3) << "%, "
           << fmt(100.0 * prop_dev_hi, 3) << "%] (bound 5%); elapsed=" << fmt(elapsed, 4)
           << "s (budget 600s)";
    return Outcome{ordering_ok && conv_ok && prop_ok && elapsed < 600.0, detail.str()};
}

// 6. Growing the qualifying set never increases the oracle, the size-1 case
//    degenerates to the conventional oracle, and with full co-channel sharing
//    the two simulated schemes coincide.
Outcome criterion_6() {
    const auto start = Clock::now();
    const PathLossModel loss(PathLossKind::bounded, 4.0);
    bool nonincreasing = true;
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 8; ++n) {
        const NetworkConfig cfg = reference_config(4.0, 1.0 / static_cast<double>(n));
        const double v =
            hcnsim::expected_interference_proposed(cfg, loss, static_cast<double>(n)).value;
        if (v > prev) nonincreasing = false;
        prev = v;
    }

    const NetworkConfig full = reference_config(4.0, 1.0);
    const double degenerate = hcnsim::expected_interference_proposed(full, loss, 1.0).value;
    const double conv_oracle = hcnsim::expected_interference_conventional(full, loss).value;
    const double degen_rel = std::abs(degenerate - conv_oracle) / conv_oracle;

    const long trials = 100000;
    const hcnsim::ExperimentSpec conv_spec{full, hcnsim::Scheme::max_power, loss, trials, 424242,
                                           std::nullopt};
    hcnsim::ExperimentSpec prop_spec = conv_spec;
    prop_spec.scheme = hcnsim::Scheme::interference_min;
    const double conv_mc = hcnsim::run_experiment(conv_spec).mean_victim_interference;
    const double prop_mc = hcnsim::run_experiment(prop_spec).mean_victim_interference;
    const double mc_rel = std::abs(prop_mc - conv_mc) / conv_mc;

    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "oracle nonincreasing over sizes 1..8 " << (nonincreasing ? "ok" : "VIOLATED")
           << "; size-1 vs conventional rel " << fmt(degen_rel, 3)
           << " (bound 1e-10); full-sharing simulation rel gap " << fmt(mc_rel, 3)
           << " (bound 2%); elapsed=" << fmt(elapsed, 4) << "s (budget 300s)";
    return Outcome{nonincreasing && degen_rel < 1e-10 && mc_rel < 0.02 && elapsed < 300.0,
                   detail.str()};
}

// 7. The closed-form mean candidate count matches its integral route, and
//    every distribution density integrates to one.
Outcome criterion_7() {
    const auto start = Clock::now();
    double count_diff_max = 0.0;
    const std::vector<NetworkConfig> settings = {
        reference_config(4.0),
        NetworkConfig({{1.0, 0.45}}, 4.0, 0.5),
        NetworkConfig({{1.0, 0.45}}, 4.0, 1.0),
    };
    for (const NetworkConfig& cfg : settings) {
        count_diff_max = std::max(count_diff_max,
                                  std::abs(hcnsim::mean_candidate_count(cfg) -
                                           hcnsim::mean_candidate_count_by_integral(cfg)));
    }

    const NetworkConfig cfg = reference_config(4.0);
    const double lam_norm = hcnsim::normalized_intensity(cfg);
    const double lam_cc = cfg.cochannel_fraction() * lam_norm;
    std::vector<double> norms;
    norms.push_back(
        hcnsim::integrate_improper([](double r) { return hcnsim::nearest_distance_pdf(r, 0.37); })
            .value);
    for (std::size_t k = 0; k < cfg.num_tiers(); ++k) {
        norms.push_back(hcnsim::integrate(
                            [&cfg, k](double u) {
                                const double p = std::exp(u);
                                return hcnsim::tier_power_pdf(p, cfg, k) * p;
                            },
                            -60.0, 60.0)
                            .value);
    }
    norms.push_back(
        hcnsim::integrate_improper([&cfg](double d) { return hcnsim::min_d_pdf(d, cfg); }).value);
    norms.push_back(
        hcnsim::integrate_improper([](double r) { return hcnsim::victim_distance_pdf(r, 0.37); })
            .value);
    norms.push_back(
        hcnsim::integrate_improper(
            [lam_cc](double r) { return hcnsim::nearest_distance_pdf(r, lam_cc); })
            .value);
    norms.push_back(
        hcnsim::integrate_improper([](double r) { return hcnsim::r_opt_pdf(r, 0.37, 3.0); })
            .value);
    double norm_err_max = 0.0;
    for (double n : norms) norm_err_max = std::max(norm_err_max, std::abs(n - 1.0));

    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "candidate-count route diff max " << fmt(count_diff_max, 3)
           << " (bound 1e-8); density normalization err max " << fmt(norm_err_max, 3)
           << " over " << norms.size() << " densities (bound 1e-8); elapsed=" << fmt(elapsed, 3)
           << "s (budget 10s)";
    return Outcome{count_diff_max < 1e-8 && norm_err_max < 1e-8 && elapsed < 10.0, detail.str()};
}

// 8. The intensity-weighted mean transmit power of the reference network at
//    exponent 4 collapses to exactly one.
Outcome criterion_8() {
    const NetworkConfig cfg = reference_config(4.0);
    const auto start = Clock::now();
    const double value = hcnsim::interference_prefactor(cfg);
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "value=" << fmt(value, 12) << " |value-1|=" << fmt(std::abs(value - 1.0), 3)
           << " (bound 1e-9), elapsed=" << fmt(elapsed * 1e6, 3) << "us (budget 1ms)";
    return Outcome{std::abs(value - 1.0) < 1e-9 && elapsed < 1e-3, detail.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 9. The command-line sweep is byte-identical across repeated and threaded
//    runs with the same seed.
Outcome criterion_9() {
#ifndef HCNSIM_CLI_PATH
    return Outcome{false, "CLI path not compiled in"};
#else
    const auto start = Clock::now();
    char tmpl[] = "/tmp/hcnsim_acceptance_XXXXXX";
    if (!mkdtemp(tmpl)) return Outcome{false, "could not create temp directory"};
    const std::string dir = tmpl;
    const std::string config_path = dir + "/sweep.json";
    {
        std::ofstream cfg(config_path);
        cfg << R"({"trials": 2000, "seed": 9, "window_halfwidth": 6.0,)"
            << R"( "sweep": {"axis": "alpha", "values": [3.0, 4.0]}})" << "\n";
    }
    const std::string cli = HCNSIM_CLI_PATH;
    const std::string out1 = dir + "/run1.csv";
    const std::string out2 = dir + "/run2.csv";
    const std::string out3 = dir + "/run3.csv";
    const int rc1 = std::system((cli + " sweep " + config_path + " --out " + out1).c_str());
    const int rc2 = std::system((cli + " sweep " + config_path + " --out " + out2).c_str());
    const int rc3 =
        std::system((cli + " sweep " + config_path + " --out " + out3 + " --threads 3").c_str());
    const std::string a = read_file(out1);
    const std::string b = read_file(out2);
    const std::string c = read_file(out3);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    std::remove(out3.c_str());
    std::remove(config_path.c_str());
    rmdir(dir.c_str());
    const double elapsed = seconds_since(start);
    const bool exits_ok = rc1 == 0 && rc2 == 0 && rc3 == 0;
    const bool repeat_ok = !a.empty() && a == b;
    const bool threaded_ok = a == c;
    std::ostringstream detail;
    detail << "exit codes " << (exits_ok ? "0/0/0" : "nonzero") << "; repeat run "
           << (repeat_ok ? "identical" : "DIFFERS") << "; threaded run "
           << (threaded_ok ? "identical" : "DIFFERS") << " (" << a.size()
           << " bytes); elapsed=" << fmt(elapsed, 3) << "s";
    return Outcome{exits_ok && repeat_ok && threaded_ok, detail.str()};
#endif
}

struct Entry {
    int id;
    const char* name;
    Outcome (*fn)();
};

const Entry kEntries[] = {
    {1, "normalized_route_equivalence", criterion_1},
    {2, "normalization_exactness", criterion_2},
    {3, "argmax_invariance", criterion_3},
    {4, "best_power_distribution_ks", criterion_4},
    {5, "scheme_ordering_and_simulation_agreement", criterion_5},
    {6, "candidate_count_monotonicity_and_degeneracy", criterion_6},
    {7, "closed_form_self_consistency", criterion_7},
    {8, "prefactor_identity", criterion_8},
    {9, "cli_reproducibility", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > 9) {
            std::fprintf(stderr, "usage: %s [criterion 1-9]\n", argv[0]);
            return 2;
        }
    }
    int failures = 0;
    int ran = 0;
    for (const Entry& entry : kEntries) {
        if (only != 0 && entry.id != only) continue;
        const Outcome outcome = entry.fn();
        std::printf("%s criterion_%d %s: %s\n", outcome.pass ? "PASS" : "FAIL", entry.id,
                    entry.name, outcome.detail.c_str());
        std::fflush(stdout);
        ++ran;
        if (!outcome.pass) ++failures;
    }
    if (only == 0)
        std::printf("%d/%d criteria passed\n", ran - failures, ran);
    return failures == 0 ? 0 : 1;
}
