#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcnsim/geometry.hpp"

namespace hcnsim {

// One base-station tier: common transmit power and spatial density.
struct TierConfig {
    double power = 1.0;
    double intensity = 1.0;
};

// Validated K-tier network description.  Co-channel base stations and
// co-channel mobile stations are thinned sub-processes; the mobile-station
// intensity defaults to the co-channel base-station intensity unless
// overridden.
class NetworkConfig {
public:
    NetworkConfig(std::vector<TierConfig> tiers, double alpha, double cochannel_fraction,
                  std::optional<double> ms_intensity = std::nullopt);

    std::size_t num_tiers() const { return tiers_.size(); }
    const TierConfig& tier(std::size_t k) const { return tiers_.at(k); }
    const std::vector<TierConfig>& tiers() const { return tiers_; }
    double alpha() const { return alpha_; }
    double cochannel_fraction() const { return cochannel_fraction_; }

    // Total base-station intensity, sum of the tier intensities.
    double total_bs_intensity() const;
    // Intensity of the co-channel base-station sub-process.
    double cochannel_bs_intensity() const;
    // Intensity of the co-channel mobile-station process.
    double ms_intensity() const;
    bool has_ms_intensity_override() const { return ms_intensity_override_.has_value(); }

private:
    std::vector<TierConfig> tiers_;
    double alpha_;
    double cochannel_fraction_;
    std::optional<double> ms_intensity_override_;
};

// Distance scale factor P^(-1/alpha) that maps a power-P station to a unit
// power station with the same received power at the scaling anchor.
double scale_factor(double power, double alpha);

// Intensity of the power-normalized network: sum_k intensity_k * power_k^(2/alpha).
double normalized_intensity(const NetworkConfig& config);

// Maps a tagged base-station pattern to the equivalent unit-power network by
// scaling each tier-k point about `anchor` with scale_factor(P_k, alpha).
// Point order is preserved (output index i corresponds to input index i);
// output tags are all 0 since the image is a single equivalent tier.
PointPattern normalize_realization(const PointPattern& bs_pattern, const NetworkConfig& config,
                                   const Point& anchor);

// Probability that the strongest-received-power station belongs to tier k.
double tier_fraction(const NetworkConfig& config, std::size_t k);

// Nearest-point distance law of a homogeneous process of the given intensity.
double nearest_distance_pdf(double r, double intensity);
double nearest_distance_cdf(double r, double intensity);

// Received-power law at the origin from the nearest tier-k station under the
// singular power law.
double tier_power_pdf(double p, const NetworkConfig& config, std::size_t k);
double tier_power_cdf(double p, const NetworkConfig& config, std::size_t k);

// Law of the minimum tier-normalized distance min_k P_k^(-1/alpha) * d_k.
double min_d_cdf(double d, const NetworkConfig& config);
double min_d_pdf(double d, const NetworkConfig& config);

// CDF of the maximum received power max_k P_k * d_k^-alpha, computed directly
// as the product of the per-tier best-power CDFs.
double max_power_cdf_direct(double p, const NetworkConfig& config);

// Same CDF via the power-normalized route: form the normalized intensity,
// then apply the complemented nearest-distance law at p^(-1/alpha).
double max_power_cdf_tpnm(double p, const NetworkConfig& config);

}  // namespace hcnsim
