#pragma once

#include <map>
#include <string>
#include <vector>

#include "swarm/params.hpp"
#include "swarm/state.hpp"

namespace swarm {

struct AngleHistogram {
    double bin_width = 10.0;      // degrees
    std::vector<long> counts;     // bins over (-180, 180], bin k = (-180 + k*w, -180 + (k+1)*w]
};

struct MetricsReport {
    double nnd_mean = 0.0;
    double nnd_variance = 0.0;
    double elongation = 0.0;
    AngleHistogram angle_histogram;
    std::map<double, double> ai_values;  // probe angle (deg) -> percentage
};

/// Mean and population variance of per-agent nearest-neighbor distances.
/// Requires N >= 2 and a non-degenerate configuration.
std::pair<double, double> nnd(const Configuration& config);

/// Transverse/longitudinal extent ratio of the bounding box aligned with the
/// mean heading (+x fallback when the mean heading is below 1e-9). Zero
/// longitudinal extent yields +infinity.
double elongation(const Configuration& config);

/// Signed bearing of each agent's nearest neighbor (ties by index) relative to
/// its own heading, binned over (-180, 180].
AngleHistogram nn_angle_histogram(const Configuration& config, double bin_width);

/// Percentage of agents whose nearest neighbor sits at unsigned bearing within
/// eps_angle of theta.
double alignment_index(const Configuration& config, double theta, double eps_angle);

struct PatternThresholds {
    double line_elongation = 0.3;
    double vee_ai = 25.0;          // percent, probed at alpha_r/2
    double cluster_e_lo = 0.5;
    double cluster_e_hi = 2.0;
};

/// line if e < 0.3; else vee if AI(alpha_r/2) > 25%; else cluster if e in
/// [0.5, 2]; else other.
std::string classify_pattern(const MetricsReport& report, const ModelParams& params,
                             const PatternThresholds& thresholds = {});

/// Full report: NND, elongation, 10-degree rose, AI at probes {30, alpha_r/2}.
MetricsReport compute_metrics(const Configuration& config, const ModelParams& params);

}  // namespace swarm
