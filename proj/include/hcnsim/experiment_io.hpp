#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcnsim/montecarlo.hpp"

namespace hcnsim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SchemeSelection { conventional, proposed, both };

enum class SweepAxis { alpha, n_ty };

// Sweep over one axis: path-loss exponent, or target candidate-set size
// (which sets cochannel_fraction = 1 / value).
struct SweepSpec {
    SweepAxis axis = SweepAxis::alpha;
    std::vector<double> values;
};

// Fully parsed run description: the base experiment, which schemes to run,
// and the optional sweep.
struct RunConfig {
    ExperimentSpec base;
    SchemeSelection schemes = SchemeSelection::both;
    std::optional<SweepSpec> sweep;
};

// Parses and validates a JSON run configuration.  Malformed syntax and
// semantic violations raise ConfigError naming the offending field.
RunConfig parse_config(const std::string& json_text);

SchemeSelection parse_scheme_selection(const std::string& name);

struct SweepRow {
    double axis_value = 0.0;
    std::string scheme;
    double mc_mean = 0.0;
    double mc_ci95 = 0.0;
    double oracle_value = 0.0;
    double blocked_fraction = 0.0;
    long trials = 0;
    std::uint64_t seed = 0;
};

inline constexpr const char* kCsvHeader =
    "axis_value,scheme,mc_mean,mc_ci95,oracle_value,blocked_fraction,trials,seed";

// Runs Monte Carlo plus the matching closed-form/quadrature oracle for every
// (axis value, scheme) pair, in axis order with conventional before proposed.
std::vector<SweepRow> run_sweep(const RunConfig& config, unsigned threads = 0);

// Runs the base experiment (no sweep) for the selected schemes at the
// configured parameters; axis_value echoes the path-loss exponent.
std::vector<SweepRow> run_single(const RunConfig& config, unsigned threads = 0);

std::string csv_row(const SweepRow& row);

// Self-check suite: prints one "PASS name ..." or "FAIL name ..." line per
// check to `out` and returns the number of failures.
int run_validation(std::ostream& out);

}  // namespace hcnsim
