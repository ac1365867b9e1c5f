#include "hcnsim/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hcnsim {

PathLossModel::PathLossModel(PathLossKind kind, double alpha) : kind_(kind), alpha_(alpha) {
    if (!(std::isfinite(alpha) && alpha > 2.0))
        throw std::invalid_argument("path-loss exponent alpha must exceed 2");
}

double PathLossModel::gain(double r) const {
    if (!(std::isfinite(r) && r >= 0.0))
        throw std::domain_error("path-loss distance must be finite and nonnegative");
    if (kind_ == PathLossKind::power_law) {
        if (r == 0.0)
            throw std::domain_error("power-law path loss is singular at distance 0");
        return std::pow(r, -alpha_);
    }
    return 1.0 / (1.0 + std::pow(r, alpha_));
}

double received_power(double tx_power, const PathLossModel& model, double r) {
    if (!(std::isfinite(tx_power) && tx_power > 0.0))
        throw std::invalid_argument("transmit power must be finite and positive");
    return tx_power * model.gain(r);
}

double signal_to_interference(double serving_power, std::span<const double> interferer_powers) {
    if (!(std::isfinite(serving_power) && serving_power >= 0.0))
        throw std::invalid_argument("serving power must be finite and nonnegative");
    double total = 0.0;
    for (double p : interferer_powers) {
        if (!(std::isfinite(p) && p >= 0.0))
            throw std::invalid_argument("interferer powers must be finite and nonnegative");
        total += p;
    }
    if (total == 0.0) return std::numeric_limits<double>::infinity();
    return serving_power / total;
}

}  // namespace hcnsim
