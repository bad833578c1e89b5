#pragma once

#include <vector>

#include "swarm/params.hpp"
#include "swarm/state.hpp"

namespace swarm {

/// Per-agent interaction sets: the n closest zone members, ordered by ascending
/// distance with ties broken by ascending agent index.
struct NeighborSets {
    std::vector<std::vector<int>> attract;
    std::vector<std::vector<int>> repel;
};

NeighborSets select_neighbors(const Configuration& config, const ModelParams& params);

}  // namespace swarm
