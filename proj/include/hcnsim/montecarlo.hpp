#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hcnsim/association.hpp"

namespace hcnsim {

// One Monte Carlo experiment: repeated scenario realizations measuring the
// victim interference of the chosen association scheme.
struct ExperimentSpec {
    NetworkConfig config;
    Scheme scheme = Scheme::max_power;
    PathLossModel path_loss;
    long trials = 100000;
    std::uint64_t seed = 1;
    std::optional<double> window_halfwidth;
};

// Window half-width large enough that boundary truncation is negligible for
// the measured distance laws.
double auto_window_halfwidth(const NetworkConfig& config);

struct ExperimentSummary {
    Scheme scheme = Scheme::max_power;
    double mean_victim_interference = 0.0;
    // Normal-approximation 95% confidence halfwidth; 0 when fewer than two
    // unblocked trials contributed.
    double ci95_halfwidth = 0.0;
    double blocked_fraction = 0.0;
    long trials_used = 0;
    long trials_total = 0;
    // Closed-form/quadrature reference, filled by callers that computed one.
    std::optional<double> oracle_value;
    std::optional<ExperimentSpec> spec_echo;
};

class AllBlockedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Runs trial `trial_index` of the experiment on its own child stream derived
// from (seed, trial_index) alone, so any subset of trials can be reproduced
// in any order.  Returns the victim-interference sample, or nullopt when the
// trial is blocked (empty base-station realization for either scheme, empty
// candidate set for the interference-min scheme).
std::optional<double> run_trial(const ExperimentSpec& spec, long trial_index);

// Runs all trials and reduces in trial-index order.  `threads` = 0 uses the
// hardware concurrency; results are bit-identical for any thread count.
ExperimentSummary run_experiment(const ExperimentSpec& spec, unsigned threads = 0);

// Two-sided Kolmogorov-Smirnov statistic of the samples against a reference CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

}  // namespace hcnsim
