#pragma once

#include <cstdint>
#include <vector>

#include "convoy/convoy.hpp"

namespace convoy {

struct PlantedConvoy {
    std::size_t member_count = 3;
    Tick start = 0;
    Tick end = 0;
    double jitter = 0.2;  // spatial wobble of members around the group anchor
};

// Synthetic scene spec replacing the (unavailable) real datasets. Planted
// convoys are built to satisfy (m, k, e); every other object is a random
// walker kept spatially separated from the convoy bands.
struct SyntheticSpec {
    std::size_t n_objects = 10;
    Tick ticks = 50;
    std::vector<PlantedConvoy> convoys;
    double e = 1.0;
    double missing_prob = 0.0;     // chance of dropping an interior sample
    bool irregular_lifetimes = false;  // random sub-windows of the domain
};

struct SyntheticScene {
    std::vector<Trajectory> trajectories;
    std::vector<Convoy> planted;  // ground truth, as planted
};

SyntheticScene generate(const SyntheticSpec& spec, std::uint64_t seed);

}  // namespace convoy
