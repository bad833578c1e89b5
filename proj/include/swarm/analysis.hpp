#pragma once

#include <vector>

#include "swarm/state.hpp"

namespace swarm {

/// Per-agent arg-min sets of the nearest-neighbor distance, with an eps_tie
/// tolerance for "equidistant".
struct ClosestSet {
    std::vector<std::vector<int>> members;  // ascending agent index
    std::vector<int> cardinality;

    int max_cardinality() const;
};

/// members[i] = { j != i : |x_i - x_j| <= min_k |x_i - x_k| + eps_tie }.
/// Exact arg-min set at eps_tie = 0. Requires N >= 2.
ClosestSet closest_sets(const Configuration& config, double eps_tie);

/// True iff some agent has more than one closest neighbor at tolerance eps_tie
/// (a sufficient witness of a switching configuration; ties among non-nearest
/// distances are not probed).
bool is_switching_configuration(const Configuration& config, double eps_tie);

/// Centered hexagonal lattice with 1 + 3*rings*(rings+1) agents, nearest
/// distance exactly `spacing`, headings +x.
Configuration hex_lattice(int rings, double spacing);

struct EquilibriumVerdict {
    bool is_filippov_equilibrium = false;
    std::vector<double> per_agent_distances;  // nearest-neighbor distance of each agent
    std::vector<int> per_agent_cardinality;
    int max_cardinality = 0;
};

/// Checks the sufficient conditions for a Filippov equilibrium in the n=1
/// isotropic regime: every closest neighbor of every agent at distance within
/// eps_dist of xi, and every closest-set cardinality <= 6.
EquilibriumVerdict verify_equilibrium(const Configuration& config, double xi, double eps_dist,
                                      double eps_tie);

}  // namespace swarm
