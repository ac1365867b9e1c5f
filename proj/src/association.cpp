#include "hcnsim/association.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace hcnsim {

namespace {

constexpr std::uint64_t kThinStreamLabel = 0x636f636861ULL;
constexpr std::uint64_t kMsStreamLabel = 0x6d735f707070ULL;

std::vector<double> normalized_distances(const Scenario& scenario) {
    const NetworkConfig& cfg = scenario.config;
    std::vector<double> factors(cfg.num_tiers());
    for (std::size_t k = 0; k < cfg.num_tiers(); ++k)
        factors[k] = scale_factor(cfg.tier(k).power, cfg.alpha());
    std::vector<double> out(scenario.bs_all.size());
    for (std::size_t i = 0; i < scenario.bs_all.size(); ++i) {
        const int tag = scenario.bs_all.tier_tags()[i];
        if (tag < 0 || static_cast<std::size_t>(tag) >= cfg.num_tiers())
            throw std::invalid_argument("scenario tier tag out of range for its network");
        out[i] = factors[static_cast<std::size_t>(tag)] *
                 distance(scenario.bs_all.points()[i], scenario.tagged_ms);
    }
    return out;
}

// Interference the station at bs_index would cause at its nearest co-channel
// mobile station, measured with the scenario's path-loss law and the
// station's original transmit power.  Zero when no victim exists.
std::pair<std::optional<Point>, double> victim_interference_of(const Scenario& scenario,
                                                               std::size_t bs_index) {
    const Point& pos = scenario.bs_all.points()[bs_index];
    const auto victim = nearest(scenario.ms_cochannel, pos, scenario.tagged_ms);
    if (!victim) return {std::nullopt, 0.0};
    const int tag = scenario.bs_all.tier_tags()[bs_index];
    const double power = scenario.config.tier(static_cast<std::size_t>(tag)).power;
    return {victim->point, received_power(power, scenario.path_loss, victim->dist)};
}

double sir_at_tagged(const Scenario& scenario, std::size_t serving_index) {
    const int tag = scenario.bs_all.tier_tags()[serving_index];
    const double power = scenario.config.tier(static_cast<std::size_t>(tag)).power;
    const double r = distance(scenario.bs_all.points()[serving_index], scenario.tagged_ms);
    const double signal = received_power(power, scenario.path_loss, r);
    std::vector<double> interferers;
    interferers.reserve(scenario.cochannel_indices.size());
    for (std::size_t j : scenario.cochannel_indices) {
        if (j == serving_index) continue;
        const int jtag = scenario.bs_all.tier_tags()[j];
        const double jpower = scenario.config.tier(static_cast<std::size_t>(jtag)).power;
        const double jr = distance(scenario.bs_all.points()[j], scenario.tagged_ms);
        interferers.push_back(received_power(jpower, scenario.path_loss, jr));
    }
    return signal_to_interference(signal, interferers);
}

}  // namespace

PointPattern Scenario::cochannel_pattern() const {
    std::vector<Point> points;
    std::vector<int> tags;
    points.reserve(cochannel_indices.size());
    tags.reserve(cochannel_indices.size());
    for (std::size_t i : cochannel_indices) {
        points.push_back(bs_all.points()[i]);
        tags.push_back(bs_all.tier_tags()[i]);
    }
    return PointPattern(std::move(points), std::move(tags), bs_all.window());
}

std::vector<Candidate> candidate_set(const Scenario& scenario) {
    const std::vector<double> nd = normalized_distances(scenario);
    double void_distance = std::numeric_limits<double>::infinity();
    for (std::size_t j : scenario.cochannel_indices)
        void_distance = std::min(void_distance, nd[j]);
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < nd.size(); ++i)
        if (nd[i] <= void_distance) out.push_back(Candidate{i, nd[i]});
    return out;
}

AssociationOutcome associate_max_power(const Scenario& scenario) {
    if (scenario.bs_all.size() == 0)
        throw std::invalid_argument("cannot associate in an empty base-station pattern");
    const NetworkConfig& cfg = scenario.config;
    // Association uses the singular-power-law received power; the selection is
    // equivalent to minimizing the power-normalized distance, and both routes
    // are computed and cross-checked.
    const std::vector<double> nd = normalized_distances(scenario);
    std::size_t best_power_idx = 0;
    double best_power = -1.0;
    std::size_t best_nd_idx = 0;
    double best_nd = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < scenario.bs_all.size(); ++i) {
        const int tag = scenario.bs_all.tier_tags()[i];
        const double p_tx = cfg.tier(static_cast<std::size_t>(tag)).power;
        const double r = distance(scenario.bs_all.points()[i], scenario.tagged_ms);
        const double p_rx = p_tx * std::pow(r, -cfg.alpha());
        if (p_rx > best_power) {
            best_power = p_rx;
            best_power_idx = i;
        }
        if (nd[i] < best_nd) {
            best_nd = nd[i];
            best_nd_idx = i;
        }
    }
    if (best_power_idx != best_nd_idx)
        throw std::logic_error(
            "received-power argmax disagrees with normalized-distance argmin");

    AssociationOutcome out;
    out.serving_index = best_power_idx;
    out.serving_tier = scenario.bs_all.tier_tags()[best_power_idx];
    out.serving_bs = scenario.bs_all.points()[best_power_idx];
    out.candidates = candidate_set(scenario);
    auto [victim, caused] = victim_interference_of(scenario, best_power_idx);
    out.worst_victim = victim;
    out.victim_interference = caused;
    out.sir_at_tagged = sir_at_tagged(scenario, best_power_idx);
    return out;
}

AssociationOutcome associate_interference_min(const Scenario& scenario) {
    AssociationOutcome out;
    out.candidates = candidate_set(scenario);
    if (out.candidates.empty()) {
        out.blocked = true;
        return out;
    }
    std::size_t best = 0;
    std::optional<Point> best_victim;
    double best_caused = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < out.candidates.size(); ++c) {
        auto [victim, caused] = victim_interference_of(scenario, out.candidates[c].bs_index);
        bool take = c == 0;
        if (!take && caused < best_caused) take = true;
        if (!take && caused == best_caused &&
            out.candidates[c].normalized_distance < out.candidates[best].normalized_distance)
            take = true;
        if (take) {
            best = c;
            best_victim = victim;
            best_caused = caused;
        }
    }
    const std::size_t serving = out.candidates[best].bs_index;
    out.serving_index = serving;
    out.serving_tier = scenario.bs_all.tier_tags()[serving];
    out.serving_bs = scenario.bs_all.points()[serving];
    out.worst_victim = best_victim;
    out.victim_interference = best_caused;
    out.sir_at_tagged = sir_at_tagged(scenario, serving);
    return out;
}

Scenario realize_scenario(const NetworkConfig& config, const PathLossModel& model,
                          const Window& window, const RandomStream& stream) {
    std::vector<PointPattern> tiers;
    tiers.reserve(config.num_tiers());
    for (std::size_t k = 0; k < config.num_tiers(); ++k) {
        RandomStream tier_stream = stream.split(k);
        tiers.push_back(
            sample_ppp(config.tier(k).intensity, window, tier_stream, static_cast<int>(k)));
    }
    PointPattern bs_all = superpose(tiers);

    RandomStream thin_stream = stream.split(kThinStreamLabel);
    std::vector<std::size_t> cochannel_indices;
    for (std::size_t i = 0; i < bs_all.size(); ++i)
        if (thin_stream.bernoulli(config.cochannel_fraction())) cochannel_indices.push_back(i);

    RandomStream ms_stream = stream.split(kMsStreamLabel);
    PointPattern ms = sample_ppp(config.ms_intensity(), window, ms_stream, kMsTag);

    return Scenario{std::move(bs_all), std::move(cochannel_indices), std::move(ms),
                    window.center, config, model};
}

}  // namespace hcnsim
