#include "swarm/neighbors.hpp"

#include <algorithm>

#include "swarm/zones.hpp"

namespace swarm {

namespace {

// (distance^2, index) candidates; sorting this pair implements the
// closest-first, index-tie-break ordering.
void take_n_closest(std::vector<std::pair<double, int>>& candidates, int n,
                    std::vector<int>& out) {
    const auto take = std::min<std::size_t>(candidates.size(), std::size_t(n));
    std::partial_sort(candidates.begin(), candidates.begin() + take, candidates.end());
    out.resize(take);
    for (std::size_t k = 0; k < take; ++k) out[k] = candidates[k].second;
}

}  // namespace

NeighborSets select_neighbors(const Configuration& config, const ModelParams& params) {
    require_non_degenerate(config);
    const int N = config.size();
    NeighborSets sets;
    sets.attract.resize(N);
    sets.repel.resize(N);

    std::vector<std::pair<double, int>> attract_cand;
    std::vector<std::pair<double, int>> repel_cand;
    attract_cand.reserve(N - 1);
    repel_cand.reserve(N - 1);

    for (int i = 0; i < N; ++i) {
        attract_cand.clear();
        repel_cand.clear();
        const AgentState& focal = config.agents[i];
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            const Vec2 pos = config.agents[j].position;
            const double d2 = norm_sq(pos - focal.position);
            if (in_attraction_zone(focal, pos, params.alpha_a)) attract_cand.emplace_back(d2, j);
            if (in_repulsion_zone(focal, pos, params.alpha_r, params.R_sr))
                repel_cand.emplace_back(d2, j);
        }
        take_n_closest(attract_cand, params.n, sets.attract[i]);
        take_n_closest(repel_cand, params.n, sets.repel[i]);
    }
    return sets;
}

}  // namespace swarm
