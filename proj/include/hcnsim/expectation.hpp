#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "hcnsim/channel.hpp"
#include "hcnsim/tpnm.hpp"

namespace hcnsim {

// Tolerances for adaptive Gauss-Kronrod integration.
struct Quadrature {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 48;
};

struct IntegralResult {
    double value = 0.0;
    double error_bound = 0.0;
};

// Raised when refinement cannot reach the requested tolerance; carries the
// best estimate so far and its error bound.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double best_estimate, double error_bound)
        : std::runtime_error(msg), best_estimate(best_estimate), error_bound(error_bound) {}

    double best_estimate;
    double error_bound;
};

// Adaptive 7-15 Gauss-Kronrod integration over [a, b].
IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const Quadrature& quad = {});

// Integral over [0, infinity) via doubling panels with tail truncation once
// panel contributions fall below abs_tol / 100.
IntegralResult integrate_improper(const std::function<double(double)>& f,
                                  const Quadrature& quad = {});

// Distance law from a transmitter to the nearest co-channel mobile station.
double victim_distance_pdf(double r, double ms_intensity);
double victim_distance_cdf(double r, double ms_intensity);

// Mean size of the qualifying candidate set: closed form, and the independent
// route through the void-distance integral of the normalized network.
double mean_candidate_count(const NetworkConfig& config);
double mean_candidate_count_by_integral(const NetworkConfig& config, const Quadrature& quad = {});

// Law of the minimum of n_ty independent victim distances.
double r_opt_cdf(double r, double ms_intensity, double n_ty);
double r_opt_pdf(double r, double ms_intensity, double n_ty);

enum class EstimateMethod { quadrature, monte_carlo };

struct InterferenceEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    EstimateMethod method = EstimateMethod::quadrature;
};

// Intensity-weighted mean transmit power of the normalized network,
// sum_k intensity_k P_k^(2/alpha + 1) / sum_k intensity_k P_k^(2/alpha).
double interference_prefactor(const NetworkConfig& config);

// Expected interference at the nearest co-channel mobile station when the
// tagged user associates with the strongest-received-power station.
InterferenceEstimate expected_interference_conventional(const NetworkConfig& config,
                                                        const PathLossModel& model,
                                                        const Quadrature& quad = {});

// Expected interference under the interference-minimized association, with the
// candidate-set size held at n_ty.
InterferenceEstimate expected_interference_proposed(const NetworkConfig& config,
                                                    const PathLossModel& model, double n_ty,
                                                    const Quadrature& quad = {});

}  // namespace hcnsim
