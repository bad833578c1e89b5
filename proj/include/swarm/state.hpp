#pragma once

#include <vector>

#include "swarm/vec.hpp"

namespace swarm {

struct AgentState {
    Vec2 position;            // BL
    Vec2 heading{1.0, 0.0};   // unit vector
    Vec2 velocity;            // BL/TU, last applied velocity
};

/// The full state vector x = (x_1, ..., x_N) plus simulation time.
struct Configuration {
    std::vector<AgentState> agents;
    double time = 0.0;  // TU

    int size() const { return static_cast<int>(agents.size()); }
};

Vec2 centroid(const Configuration& config);

/// Smallest pairwise distance; requires N >= 2.
double min_pair_distance(const Configuration& config);

/// Throws DegenerateConfigError if N < 2 or any two agents are closer than 1e-12 BL.
void require_non_degenerate(const Configuration& config);

}  // namespace swarm
