#pragma once

#include <filesystem>
#include <string>

#include "swarm/integrator.hpp"

namespace swarm {

/// On-disk layout of one run (all numbers formatted round-trip exact):
///   <dir>/snapshots.csv  run_id,t,agent_id,x,y,heading_x,heading_y
///                        (positions centroid-relative)
///   <dir>/centroid.csv   run_id,t,cx,cy (the centroid's lab-frame path)
///   <dir>/metrics.json   params, seed, termination, final metrics,
///                        per-snapshot metric time series
void write_run_record(const RunRecord& record, const std::filesystem::path& dir,
                      const std::string& run_id);

/// Reads snapshots.csv (any file in the schema above) back into snapshots.
/// Headings are restored as stored; times and agent order preserved.
std::vector<Snapshot> read_snapshots_csv(const std::filesystem::path& file);

/// Metrics of the final snapshot from a metrics.json.
MetricsReport read_final_metrics(const std::filesystem::path& file);

/// Model params and seed from a metrics.json.
ModelParams read_record_params(const std::filesystem::path& file);

/// Plot-ready views of a stored run:
///   scatter.tsv     x y heading_x heading_y  (terminal snapshot)
///   rose.tsv        bin_lo bin_hi count      (terminal nearest-neighbor rose)
///   timeseries.tsv  t nnd_mean nnd_variance elongation ai_<probe>...
void write_plotdata(const std::filesystem::path& run_dir, const std::filesystem::path& out_dir,
                    double bin_width);

std::string format_double(double v);

}  // namespace swarm
