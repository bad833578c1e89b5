#include "swarm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swarm/errors.hpp"
#include "swarm/zones.hpp"

namespace swarm {

namespace {

/// Index of agent i's nearest neighbor, ties broken by ascending index.
int nearest_index(const Configuration& config, int i) {
    const int N = config.size();
    double best = std::numeric_limits<double>::infinity();
    int who = -1;
    for (int j = 0; j < N; ++j) {
        if (j == i) continue;
        const double d = norm(config.agents[j].position - config.agents[i].position);
        if (d < best) {
            best = d;
            who = j;
        }
    }
    return who;
}

}  // namespace

std::pair<double, double> nnd(const Configuration& config) {
    if (config.size() < 2) throw ConfigError("nnd requires N >= 2");
    require_non_degenerate(config);
    const int N = config.size();
    std::vector<double> dists(N);
    for (int i = 0; i < N; ++i) {
        const int j = nearest_index(config, i);
        dists[i] = norm(config.agents[j].position - config.agents[i].position);
    }
    double mean = 0.0;
    for (double d : dists) mean += d;
    mean /= N;
    double var = 0.0;
    for (double d : dists) var += (d - mean) * (d - mean);
    var /= N;
    return {mean, var};
}

double elongation(const Configuration& config) {
    Vec2 mean_heading;
    for (const auto& a : config.agents) mean_heading += a.heading;
    Vec2 axis{1.0, 0.0};
    if (norm(mean_heading) >= 1e-9) axis = normalized(mean_heading);
    const Vec2 side = perp(axis);

    double lo_u = std::numeric_limits<double>::infinity(), hi_u = -lo_u;
    double lo_p = lo_u, hi_p = -lo_u;
    for (const auto& a : config.agents) {
        const double u = dot(a.position, axis);
        const double p = dot(a.position, side);
        lo_u = std::min(lo_u, u);
        hi_u = std::max(hi_u, u);
        lo_p = std::min(lo_p, p);
        hi_p = std::max(hi_p, p);
    }
    const double along = hi_u - lo_u;
    const double across = hi_p - lo_p;
    if (along == 0.0) return std::numeric_limits<double>::infinity();
    return across / along;
}

AngleHistogram nn_angle_histogram(const Configuration& config, double bin_width) {
    AngleHistogram hist;
    hist.bin_width = bin_width;
    const int nbins = int(std::ceil(360.0 / bin_width));
    hist.counts.assign(nbins, 0);
    const int N = config.size();
    for (int i = 0; i < N; ++i) {
        const int j = nearest_index(config, i);
        const double b = bearing_deg(config.agents[i], config.agents[j].position);
        // bins are half-open (lo, hi]; atan2 output lies in (-180, 180]
        int k = int(std::ceil((b + 180.0) / bin_width)) - 1;
        k = std::clamp(k, 0, nbins - 1);
        ++hist.counts[k];
    }
    return hist;
}

double alignment_index(const Configuration& config, double theta, double eps_angle) {
    const int N = config.size();
    int count = 0;
    for (int i = 0; i < N; ++i) {
        const int j = nearest_index(config, i);
        const double b = std::abs(bearing_deg(config.agents[i], config.agents[j].position));
        if (std::abs(b - theta) <= eps_angle) ++count;
    }
    return 100.0 * count / N;
}

std::string classify_pattern(const MetricsReport& report, const ModelParams& params,
                             const PatternThresholds& thresholds) {
    if (report.elongation < thresholds.line_elongation) return "line";
    double ai_half = 0.0;
    if (auto it = report.ai_values.find(params.alpha_r / 2.0); it != report.ai_values.end())
        ai_half = it->second;
    if (ai_half > thresholds.vee_ai) return "vee";
    if (report.elongation >= thresholds.cluster_e_lo && report.elongation <= thresholds.cluster_e_hi)
        return "cluster";
    return "other";
}

MetricsReport compute_metrics(const Configuration& config, const ModelParams& params) {
    MetricsReport report;
    std::tie(report.nnd_mean, report.nnd_variance) = nnd(config);
    report.elongation = elongation(config);
    report.angle_histogram = nn_angle_histogram(config, 10.0);
    report.ai_values[30.0] = alignment_index(config, 30.0, params.eps_angle);
    report.ai_values[params.alpha_r / 2.0] =
        alignment_index(config, params.alpha_r / 2.0, params.eps_angle);
    return report;
}

}  // namespace swarm
