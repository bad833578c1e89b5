#pragma once

#include <cstdint>
#include <vector>

#include "swarm/metrics.hpp"
#include "swarm/params.hpp"
#include "swarm/rng.hpp"
#include "swarm/state.hpp"

namespace swarm {

struct StepResult {
    Configuration config;
    double dt_used = 0.0;            // TU, in (0, dt_max]
    double max_speed = 0.0;          // BL/TU, after capping and noise
    double max_relative_drift = 0.0; // BL/TU, max_i |d(x_i - centroid)/dt|
};

struct TerminationReason {
    enum class Kind { steady_state, max_iterations };
    Kind kind = Kind::max_iterations;
    long iterations = 0;
    double final_time = 0.0;
};

/// Centroid-relative configuration at one recorded time, plus the centroid's
/// lab-frame position so the lab frame stays recoverable.
struct Snapshot {
    double time = 0.0;
    Vec2 centroid_lab;
    std::vector<AgentState> agents;  // positions relative to the centroid
};

struct RunRecord {
    ModelParams params;
    std::uint64_t seed = 0;
    std::vector<Snapshot> snapshots;
    TerminationReason termination;
    Configuration final_config;               // lab frame
    std::vector<MetricsReport> metrics_series; // one per snapshot
    MetricsReport final_metrics;
};

/// One adaptive explicit Euler step: raw velocities, speed cap, direction
/// noise, dt = min(dt_max, disp_cap / max_speed), position update, heading
/// update. `noise` supplies one angle per agent when alpha_noise > 0.
StepResult step(const Configuration& config, const ModelParams& params, StreamRng& noise);

/// N i.i.d. uniform positions on [0, L]^2 (rejecting placements closer than
/// 1e-6 BL to an existing agent), headings +x, zero velocities. Uses
/// params.seed under the documented per-agent stream discipline.
Configuration random_initial(const ModelParams& params);

/// Iterates `step` until the centroid-relative drift stays below eps_steady for
/// steady_window consecutive steps, or until max_iters. Records snapshots every
/// `snapshot_stride` steps (0 = initial and final only) with per-snapshot
/// metrics.
RunRecord run(const Configuration& initial, const ModelParams& params, long snapshot_stride = 0);

}  // namespace swarm
