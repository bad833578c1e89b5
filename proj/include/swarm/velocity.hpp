#pragma once

#include <vector>

#include "swarm/neighbors.hpp"
#include "swarm/params.hpp"
#include "swarm/state.hpp"

namespace swarm {

/// Raw velocities v_i = sum_{j in attract_i} (x_j - x_i)
///                      - xi^2 sum_{j in repel_i} (x_j - x_i)/|x_j - x_i|^2,
/// with F_a normalized to 1. No speed cap, no noise.
std::vector<Vec2> velocity_field(const Configuration& config, const NeighborSets& neighbors,
                                 const ModelParams& params);

}  // namespace swarm
