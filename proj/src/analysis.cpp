#include "swarm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swarm/errors.hpp"

namespace swarm {

int ClosestSet::max_cardinality() const {
    int best = 0;
    for (int c : cardinality) best = std::max(best, c);
    return best;
}

ClosestSet closest_sets(const Configuration& config, double eps_tie) {
    if (config.size() < 2) throw ConfigError("closest_sets requires N >= 2");
    require_non_degenerate(config);
    const int N = config.size();
    ClosestSet out;
    out.members.resize(N);
    out.cardinality.resize(N);
    for (int i = 0; i < N; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            best = std::min(best, norm(config.agents[j].position - config.agents[i].position));
        }
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            const double d = norm(config.agents[j].position - config.agents[i].position);
            if (d <= best + eps_tie) out.members[i].push_back(j);
        }
        out.cardinality[i] = int(out.members[i].size());
    }
    return out;
}

bool is_switching_configuration(const Configuration& config, double eps_tie) {
    return closest_sets(config, eps_tie).max_cardinality() > 1;
}

Configuration hex_lattice(int rings, double spacing) {
    if (rings < 0) throw ConfigError("hex_lattice: rings must be >= 0");
    if (!(spacing > 0)) throw ConfigError("hex_lattice: spacing must be > 0");
    Configuration config;
    const double half = 0.5 * spacing;
    const double row = spacing * std::sqrt(3.0) / 2.0;
    // axial coordinates (q, r) with |q|, |r|, |q + r| <= rings
    for (int q = -rings; q <= rings; ++q) {
        for (int r = -rings; r <= rings; ++r) {
            if (std::abs(q + r) > rings) continue;
            AgentState a;
            a.position = {spacing * q + half * r, row * r};
            config.agents.push_back(a);
        }
    }
    return config;
}

EquilibriumVerdict verify_equilibrium(const Configuration& config, double xi, double eps_dist,
                                      double eps_tie) {
    const ClosestSet sets = closest_sets(config, eps_tie);
    const int N = config.size();
    EquilibriumVerdict verdict;
    verdict.per_agent_distances.resize(N);
    verdict.per_agent_cardinality = sets.cardinality;
    verdict.max_cardinality = sets.max_cardinality();
    verdict.is_filippov_equilibrium = verdict.max_cardinality <= 6;
    for (int i = 0; i < N; ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (int j : sets.members[i]) {
            const double d = norm(config.agents[j].position - config.agents[i].position);
            nearest = std::min(nearest, d);
            if (std::abs(d - xi) > eps_dist) verdict.is_filippov_equilibrium = false;
        }
        verdict.per_agent_distances[i] = nearest;
    }
    return verdict;
}

}  // namespace swarm
