#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace swarm {

/// How each agent's heading (the axis that orients its sensitivity zones) evolves.
/// `fixed` keeps the initial heading for the whole run: the group travels along a
/// persistent axis, which is the regime the line/vee patterns live in.
/// `velocity` re-aims the heading at the current velocity whenever the agent is
/// moving faster than 1e-6 BL/TU.
enum class HeadingMode { fixed, velocity };

std::string to_string(HeadingMode m);
HeadingMode heading_mode_from_string(std::string_view s);

/// All model and solver knobs. Distances in BL, speeds in BL/TU, angles in degrees.
/// F_a is normalized to 1, so the only force parameter is xi = sqrt(F_r/F_a).
struct ModelParams {
    // model
    int N = 30;                // number of agents
    int n = 1;                 // neighbors considered per zone
    double xi = 10.0;          // comfortable distance, sqrt(F_r/F_a)
    double alpha_a = 360.0;    // attraction cone width
    double alpha_r = 360.0;    // repulsion cone width
    double R_sr = 1.0;         // short-range repulsion disk radius
    double v_max = 10.0;       // speed cap
    double L = 15.0;           // initial square edge
    double alpha_noise = 0.0;  // velocity-direction noise amplitude
    double eps_angle = 3.0;    // AI tolerance

    // solver
    double dt_max = 0.01;       // hard step cap (TU)
    double disp_cap = 0.0;      // per-step displacement cap; 0 = auto 0.2*min(xi, R_sr)
    double eps_steady = 1e-3;   // centroid-relative drift threshold (BL/TU)
    int steady_window = 10;     // consecutive quiet steps required
    long max_iters = 200000;    // iteration cap
    HeadingMode heading_mode = HeadingMode::fixed;

    std::uint64_t seed = 0;

    double effective_disp_cap() const {
        return disp_cap > 0.0 ? disp_cap : 0.2 * (xi < R_sr ? xi : R_sr);
    }

    /// Throws ConfigError on any violated invariant.
    void validate() const;
};

/// Numeric fields addressable by their config-file key (Table-1 symbols plus
/// solver keys). Used by config parsing and sweep specs.
void set_param(ModelParams& p, std::string_view name, double value);
double get_param(const ModelParams& p, std::string_view name);
const std::vector<std::string>& param_names();

}  // namespace swarm
