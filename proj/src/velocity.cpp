#include "swarm/velocity.hpp"

#include "swarm/errors.hpp"

namespace swarm {

std::vector<Vec2> velocity_field(const Configuration& config, const NeighborSets& neighbors,
                                 const ModelParams& params) {
    const int N = config.size();
    const double xi2 = params.xi * params.xi;
    std::vector<Vec2> v(N);
    for (int i = 0; i < N; ++i) {
        const Vec2 xi_pos = config.agents[i].position;
        Vec2 vi;
        for (int j : neighbors.attract[i]) vi += config.agents[j].position - xi_pos;
        for (int j : neighbors.repel[i]) {
            const Vec2 offset = config.agents[j].position - xi_pos;
            const double d2 = norm_sq(offset);
            if (d2 <= 1e-24)
                throw DegenerateConfigError("velocity_field: coincident positions");
            vi -= offset * (xi2 / d2);
        }
        v[i] = vi;
    }
    return v;
}

}  // namespace swarm
