#include "hcnsim/tpnm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hcnsim {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

NetworkConfig::NetworkConfig(std::vector<TierConfig> tiers, double alpha,
                             double cochannel_fraction, std::optional<double> ms_intensity)
    : tiers_(std::move(tiers)),
      alpha_(alpha),
      cochannel_fraction_(cochannel_fraction),
      ms_intensity_override_(ms_intensity) {
    require(!tiers_.empty(), "network needs at least one tier");
    for (std::size_t k = 0; k < tiers_.size(); ++k) {
        const auto& t = tiers_[k];
        require(std::isfinite(t.power) && t.power > 0.0,
                "tier " + std::to_string(k) + " power must be finite and positive");
        require(std::isfinite(t.intensity) && t.intensity > 0.0,
                "tier " + std::to_string(k) + " intensity must be finite and positive");
    }
    require(std::isfinite(alpha_) && alpha_ > 2.0, "alpha must exceed 2");
    require(cochannel_fraction_ > 0.0 && cochannel_fraction_ <= 1.0,
            "cochannel fraction must lie in (0, 1]");
    if (ms_intensity_override_)
        require(std::isfinite(*ms_intensity_override_) && *ms_intensity_override_ > 0.0,
                "mobile-station intensity must be finite and positive");
}

double NetworkConfig::total_bs_intensity() const {
    double total = 0.0;
    for (const auto& t : tiers_) total += t.intensity;
    return total;
}

double NetworkConfig::cochannel_bs_intensity() const {
    return cochannel_fraction_ * total_bs_intensity();
}

double NetworkConfig::ms_intensity() const {
    if (ms_intensity_override_) return *ms_intensity_override_;
    return cochannel_bs_intensity();
}

double scale_factor(double power, double alpha) {
    require(std::isfinite(power) && power > 0.0, "power must be finite and positive");
    require(std::isfinite(alpha) && alpha > 2.0, "alpha must exceed 2");
    return std::pow(power, -1.0 / alpha);
}

double normalized_intensity(const NetworkConfig& config) {
    double total = 0.0;
    for (const auto& t : config.tiers())
        total += t.intensity * std::pow(t.power, 2.0 / config.alpha());
    return total;
}

PointPattern normalize_realization(const PointPattern& bs_pattern, const NetworkConfig& config,
                                   const Point& anchor) {
    require(bs_pattern.window().contains(anchor),
            "normalization anchor must lie inside the pattern window");
    std::vector<double> factors(config.num_tiers());
    double f_max = 0.0;
    for (std::size_t k = 0; k < config.num_tiers(); ++k) {
        factors[k] = scale_factor(config.tier(k).power, config.alpha());
        f_max = std::max(f_max, factors[k]);
    }
    std::vector<Point> points;
    points.reserve(bs_pattern.size());
    for (std::size_t i = 0; i < bs_pattern.size(); ++i) {
        const int tag = bs_pattern.tier_tags()[i];
        require(tag >= 0 && static_cast<std::size_t>(tag) < config.num_tiers(),
                "pattern tier tag out of range for this network");
        const double f = factors[static_cast<std::size_t>(tag)];
        const Point& p = bs_pattern.points()[i];
        points.push_back(Point{anchor.x + f * (p.x - anchor.x), anchor.y + f * (p.y - anchor.y)});
    }
    std::vector<int> tags(bs_pattern.size(), 0);
    return PointPattern(std::move(points), std::move(tags),
                        bs_pattern.window().scaled(f_max, anchor));
}

double tier_fraction(const NetworkConfig& config, std::size_t k) {
    require(k < config.num_tiers(), "tier index out of range");
    const auto& t = config.tier(k);
    return t.intensity * std::pow(t.power, 2.0 / config.alpha()) / normalized_intensity(config);
}

double nearest_distance_pdf(double r, double intensity) {
    require(std::isfinite(intensity) && intensity > 0.0, "intensity must be finite and positive");
    if (!(r >= 0.0)) return 0.0;
    return 2.0 * kPi * intensity * r * std::exp(-intensity * kPi * r * r);
}

double nearest_distance_cdf(double r, double intensity) {
    require(std::isfinite(intensity) && intensity > 0.0, "intensity must be finite and positive");
    if (!(r >= 0.0)) return 0.0;
    return -std::expm1(-intensity * kPi * r * r);
}

double tier_power_pdf(double p, const NetworkConfig& config, std::size_t k) {
    require(k < config.num_tiers(), "tier index out of range");
    require(std::isfinite(p) && p > 0.0, "power argument must be finite and positive");
    const auto& t = config.tier(k);
    const double u = t.intensity * std::pow(t.power / p, 2.0 / config.alpha());
    return (2.0 * kPi / (config.alpha() * p)) * u * std::exp(-kPi * u);
}

double tier_power_cdf(double p, const NetworkConfig& config, std::size_t k) {
    require(k < config.num_tiers(), "tier index out of range");
    require(std::isfinite(p) && p > 0.0, "power argument must be finite and positive");
    const auto& t = config.tier(k);
    return std::exp(-kPi * t.intensity * std::pow(t.power / p, 2.0 / config.alpha()));
}

double min_d_cdf(double d, const NetworkConfig& config) {
    if (!(d >= 0.0)) return 0.0;
    return -std::expm1(-kPi * d * d * normalized_intensity(config));
}

double min_d_pdf(double d, const NetworkConfig& config) {
    if (!(d >= 0.0)) return 0.0;
    const double lam = normalized_intensity(config);
    return 2.0 * kPi * lam * d * std::exp(-kPi * d * d * lam);
}

double max_power_cdf_direct(double p, const NetworkConfig& config) {
    require(std::isfinite(p) && p > 0.0, "power argument must be finite and positive");
    // Independent tiers: the maximum is below p iff every tier's best power is.
    double cdf = 1.0;
    for (std::size_t k = 0; k < config.num_tiers(); ++k)
        cdf *= tier_power_cdf(p, config, k);
    return cdf;
}

double max_power_cdf_tpnm(double p, const NetworkConfig& config) {
    require(std::isfinite(p) && p > 0.0, "power argument must be finite and positive");
    // In the unit-power network the best power is R^-alpha for the void
    // distance R, so it is below p exactly when R exceeds p^(-1/alpha).
    const double r = std::pow(p, -1.0 / config.alpha());
    return 1.0 - nearest_distance_cdf(r, normalized_intensity(config));
}

}  // namespace hcnsim
