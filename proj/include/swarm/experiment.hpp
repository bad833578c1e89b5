#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "swarm/config_io.hpp"
#include "swarm/integrator.hpp"

namespace swarm {

/// mean/variance/min/max across replicates, accumulated in replicate order.
struct Stats {
    double mean = 0.0;
    double variance = 0.0;  // population variance
    double min = 0.0;
    double max = 0.0;
};

Stats stats_over(const std::vector<double>& values);

struct CellSummary {
    int cell_index = 0;
    std::vector<std::pair<std::string, double>> overrides;
    // metric name -> stats across replicates; metrics are nnd_mean,
    // nnd_variance (across-individuals variance), elongation, ai_<probe>
    std::map<std::string, Stats> metrics;
    long steady_runs = 0;
    long capped_runs = 0;
};

struct ExperimentResult {
    std::vector<CellSummary> cells;
};

/// Executes all cells x replicates (optionally on `jobs` threads; the output is
/// independent of scheduling). Per-run records are written under
/// <output_dir>/c<cell>r<rep>/; the summary table goes to
/// <output_dir>/summary.json.
ExperimentResult run_experiment(const ExperimentSpec& spec, int jobs = 1,
                                bool write_records = true);

/// Per-run scalar metrics that feed the summary, in a fixed key order.
std::map<std::string, double> summary_metrics(const MetricsReport& report);

void write_summary_json(const ExperimentResult& result, const ExperimentSpec& spec,
                        const std::filesystem::path& path);

}  // namespace swarm
