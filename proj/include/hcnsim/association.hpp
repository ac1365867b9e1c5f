#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcnsim/channel.hpp"
#include "hcnsim/geometry.hpp"
#include "hcnsim/tpnm.hpp"

namespace hcnsim {

// One sampled downlink snapshot around a tagged user at the window center:
// the full base-station field, its co-channel sub-process (with back-indices
// into the full field), and the co-channel mobile stations.
struct Scenario {
    PointPattern bs_all;
    std::vector<std::size_t> cochannel_indices;
    PointPattern ms_cochannel;
    Point tagged_ms{};
    NetworkConfig config;
    PathLossModel path_loss;

    // Materializes the co-channel sub-pattern referenced by cochannel_indices.
    PointPattern cochannel_pattern() const;
};

struct Candidate {
    std::size_t bs_index = 0;
    double normalized_distance = 0.0;
};

enum class Scheme { max_power, interference_min };

struct AssociationOutcome {
    bool blocked = false;
    std::size_t serving_index = 0;
    int serving_tier = 0;
    Point serving_bs{};
    std::vector<Candidate> candidates;
    std::optional<Point> worst_victim;
    // Interference the serving station causes at its nearest co-channel
    // mobile station; 0 when no such victim exists.
    double victim_interference = 0.0;
    double sir_at_tagged = 0.0;
};

// QoS-qualifying stations: those whose power-normalized distance to the
// tagged user does not exceed the normalized distance of the nearest
// co-channel station (boundary inclusive).  Ascending index order.
std::vector<Candidate> candidate_set(const Scenario& scenario);

// Conventional rule: serve from the station with the highest received power
// at the tagged user (equivalently, the smallest normalized distance; both
// are computed and cross-checked).
AssociationOutcome associate_max_power(const Scenario& scenario);

// Proposed rule: among the qualifying candidates, serve from the one whose
// transmission hurts its nearest co-channel mobile station least.  Ties
// prefer the smaller normalized distance, then the lower index.  Blocked
// only when the candidate set is empty.
AssociationOutcome associate_interference_min(const Scenario& scenario);

// Samples a full scenario: per-tier stations, co-channel thinning, and
// co-channel mobile stations, all from deterministic child streams.
Scenario realize_scenario(const NetworkConfig& config, const PathLossModel& model,
                          const Window& window, const RandomStream& stream);

}  // namespace hcnsim
