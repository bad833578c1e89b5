#include "swarm/integrator.hpp"

#include <algorithm>
#include <cmath>

#include "swarm/errors.hpp"
#include "swarm/neighbors.hpp"
#include "swarm/velocity.hpp"

namespace swarm {

StepResult step(const Configuration& config, const ModelParams& params, StreamRng& noise) {
    const int N = config.size();
    const NeighborSets neighbors = select_neighbors(config, params);
    std::vector<Vec2> v = velocity_field(config, neighbors, params);

    for (auto& vi : v) {
        const double speed = norm(vi);
        if (speed > params.v_max) vi = vi * (params.v_max / speed);
    }
    if (params.alpha_noise > 0.0) {
        for (auto& vi : v) {
            const double angle = noise.uniform(-params.alpha_noise, params.alpha_noise);
            vi = rotated(vi, deg_to_rad(angle));
        }
    }

    double max_speed = 0.0;
    for (const auto& vi : v) max_speed = std::max(max_speed, norm(vi));
    const double dt =
        max_speed == 0.0 ? params.dt_max
                         : std::min(params.dt_max, params.effective_disp_cap() / max_speed);

    StepResult result;
    result.config = config;
    result.dt_used = dt;
    result.max_speed = max_speed;

    const Vec2 c_before = centroid(config);
    for (int i = 0; i < N; ++i) {
        AgentState& a = result.config.agents[i];
        a.position += v[i] * dt;
        a.velocity = v[i];
        if (params.heading_mode == HeadingMode::velocity) {
            const double speed = norm(v[i]);
            if (speed > 1e-6) a.heading = v[i] / speed;
        }
    }
    result.config.time = config.time + dt;

    const Vec2 c_after = centroid(result.config);
    double drift = 0.0;
    for (int i = 0; i < N; ++i) {
        const Vec2 rel_before = config.agents[i].position - c_before;
        const Vec2 rel_after = result.config.agents[i].position - c_after;
        drift = std::max(drift, norm(rel_after - rel_before) / dt);
    }
    result.max_relative_drift = drift;

    require_non_degenerate(result.config);
    return result;
}

Configuration random_initial(const ModelParams& params) {
    params.validate();
    Configuration config;
    config.agents.resize(params.N);
    for (int i = 0; i < params.N; ++i) {
        AgentState& a = config.agents[i];
        bool placed = false;
        for (std::uint64_t attempt = 0; attempt < 1000000; ++attempt) {
            const Vec2 candidate{
                counter_uniform(params.seed, std::uint64_t(i), 2 * attempt, 0.0, params.L),
                counter_uniform(params.seed, std::uint64_t(i), 2 * attempt + 1, 0.0, params.L)};
            bool clear = true;
            for (int j = 0; j < i; ++j) {
                if (norm(candidate - config.agents[j].position) < 1e-6) {
                    clear = false;
                    break;
                }
            }
            if (clear) {
                a.position = candidate;
                placed = true;
                break;
            }
        }
        if (!placed)
            throw ConfigError("random_initial: could not place agent after 1e6 attempts");
        a.heading = {1.0, 0.0};
        a.velocity = {0.0, 0.0};
    }
    return config;
}

namespace {

Snapshot make_snapshot(const Configuration& config) {
    Snapshot snap;
    snap.time = config.time;
    snap.centroid_lab = centroid(config);
    snap.agents = config.agents;
    for (auto& a : snap.agents) a.position -= snap.centroid_lab;
    return snap;
}

}  // namespace

RunRecord run(const Configuration& initial, const ModelParams& params, long snapshot_stride) {
    params.validate();
    require_non_degenerate(initial);

    RunRecord record;
    record.params = params;
    record.seed = params.seed;

    Configuration config = initial;
    StreamRng noise(params.seed, kNoiseStream);

    const auto record_snapshot = [&](const Configuration& c) {
        record.snapshots.push_back(make_snapshot(c));
        record.metrics_series.push_back(compute_metrics(c, params));
    };
    record_snapshot(config);

    long iterations = 0;
    long last_recorded = 0;
    int quiet_streak = 0;
    bool steady = false;
    while (iterations < params.max_iters) {
        StepResult result = step(config, params, noise);
        config = std::move(result.config);
        ++iterations;
        quiet_streak = result.max_relative_drift < params.eps_steady ? quiet_streak + 1 : 0;
        const bool done = quiet_streak >= params.steady_window;
        if (snapshot_stride > 0 && iterations % snapshot_stride == 0 && !done) {
            record_snapshot(config);
            last_recorded = iterations;
        }
        if (done) {
            steady = true;
            break;
        }
    }

    if (last_recorded != iterations) record_snapshot(config);
    record.final_config = config;
    record.final_metrics = record.metrics_series.back();
    record.termination.kind = steady ? TerminationReason::Kind::steady_state
                                     : TerminationReason::Kind::max_iterations;
    record.termination.iterations = iterations;
    record.termination.final_time = config.time;
    return record;
}

}  // namespace swarm
