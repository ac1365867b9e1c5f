#pragma once

#include <span>

namespace hcnsim {

enum class PathLossKind { power_law, bounded };

// Distance-dependent propagation gain: the singular power law r^-alpha, or the
// bounded variant 1/(1 + r^alpha) which stays finite at r = 0.
class PathLossModel {
public:
    PathLossModel(PathLossKind kind, double alpha);

    PathLossKind kind() const { return kind_; }
    double alpha() const { return alpha_; }

    // Gain at distance r >= 0.  The power-law kind rejects r == 0.
    double gain(double r) const;

private:
    PathLossKind kind_;
    double alpha_;
};

double received_power(double tx_power, const PathLossModel& model, double r);

// Ratio of serving power to total interference power; +infinity when the
// interferer set is empty or sums to zero.
double signal_to_interference(double serving_power, std::span<const double> interferer_powers);

}  // namespace hcnsim
