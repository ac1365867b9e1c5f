#include "hcnsim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace hcnsim {

namespace {

constexpr double kZ975 = 1.959963984540054;

void validate_spec(const ExperimentSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("experiment needs at least one trial");
    if (spec.window_halfwidth &&
        !(std::isfinite(*spec.window_halfwidth) && *spec.window_halfwidth > 0.0))
        throw std::invalid_argument("window half-width must be finite and positive");
}

}  // namespace

double auto_window_halfwidth(const NetworkConfig& config) {
    const double guard_ms = 5.0 / std::sqrt(config.ms_intensity());
    const double guard_bs = 5.0 / std::sqrt(config.cochannel_bs_intensity());
    return std::max({guard_ms, guard_bs, 10.0});
}

std::optional<double> run_trial(const ExperimentSpec& spec, long trial_index) {
    validate_spec(spec);
    if (trial_index < 0 || trial_index >= spec.trials)
        throw std::invalid_argument("trial index out of range");
    const double hw = spec.window_halfwidth ? *spec.window_halfwidth
                                            : auto_window_halfwidth(spec.config);
    const Window window = Window::square(Point{0.0, 0.0}, hw);
    const RandomStream trial_stream =
        RandomStream(spec.seed).split(static_cast<std::uint64_t>(trial_index));
    const Scenario scenario = realize_scenario(spec.config, spec.path_loss, window, trial_stream);
    // An empty realization blocks association under either scheme.
    if (scenario.bs_all.size() == 0) return std::nullopt;
    if (spec.scheme == Scheme::max_power) {
        return associate_max_power(scenario).victim_interference;
    }
    const AssociationOutcome out = associate_interference_min(scenario);
    if (out.blocked) return std::nullopt;
    return out.victim_interference;
}

ExperimentSummary run_experiment(const ExperimentSpec& spec, unsigned threads) {
    validate_spec(spec);
    const std::size_t n = static_cast<std::size_t>(spec.trials);
    std::vector<std::optional<double>> results(n);

    unsigned worker_count = threads ? threads : std::thread::hardware_concurrency();
    if (worker_count == 0) worker_count = 1;
    worker_count = static_cast<unsigned>(
        std::min<std::size_t>(worker_count, n));

    if (worker_count <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            results[i] = run_trial(spec, static_cast<long>(i));
    } else {
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            workers.emplace_back([&spec, &results, n, w, worker_count] {
                for (std::size_t i = w; i < n; i += worker_count)
                    results[i] = run_trial(spec, static_cast<long>(i));
            });
        }
        for (auto& t : workers) t.join();
    }

    // Fixed trial-index reduction order keeps serial and threaded runs
    // bit-identical.
    double sum = 0.0;
    long used = 0;
    for (const auto& r : results) {
        if (!r) continue;
        sum += *r;
        ++used;
    }
    if (used == 0)
        throw AllBlockedError("all trials were blocked; no interference samples collected");
    const double mean = sum / static_cast<double>(used);
    double sq_dev = 0.0;
    for (const auto& r : results) {
        if (!r) continue;
        const double d = *r - mean;
        sq_dev += d * d;
    }
    ExperimentSummary out;
    out.scheme = spec.scheme;
    out.mean_victim_interference = mean;
    if (used > 1) {
        const double sd = std::sqrt(sq_dev / static_cast<double>(used - 1));
        out.ci95_halfwidth = kZ975 * sd / std::sqrt(static_cast<double>(used));
    }
    out.blocked_fraction =
        static_cast<double>(spec.trials - used) / static_cast<double>(spec.trials);
    out.trials_used = used;
    out.trials_total = spec.trials;
    out.spec_echo = spec;
    return out;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty())
        throw std::invalid_argument("KS statistic needs at least one sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d_max = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - f;
        const double lo = f - static_cast<double>(i) / n;
        d_max = std::max({d_max, hi, lo});
    }
    return d_max;
}

}  // namespace hcnsim
