#include "swarm/state.hpp"

#include <limits>
#include <sstream>

#include "swarm/errors.hpp"

namespace swarm {

Vec2 centroid(const Configuration& config) {
    Vec2 c;
    for (const auto& a : config.agents) c += a.position;
    return c / double(config.size());
}

double min_pair_distance(const Configuration& config) {
    const int N = config.size();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            const double d = norm(config.agents[j].position - config.agents[i].position);
            if (d < best) best = d;
        }
    return best;
}

void require_non_degenerate(const Configuration& config) {
    if (config.size() < 2) throw DegenerateConfigError("configuration needs at least 2 agents");
    const int N = config.size();
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            if (norm(config.agents[j].position - config.agents[i].position) <= 1e-12) {
                std::ostringstream msg;
                msg << "degenerate configuration: agents " << i << " and " << j
                    << " closer than 1e-12 BL";
                throw DegenerateConfigError(msg.str());
            }
        }
}

}  // namespace swarm
