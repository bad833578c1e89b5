#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "swarm/params.hpp"

namespace swarm {

/// One sweep axis. A single name takes one value per cell; several names vary
/// together, one tuple per cell (for paired sweeps like (alpha_r, alpha_a)).
struct SweepEntry {
    std::vector<std::string> names;
    std::vector<std::vector<double>> tuples;  // each tuple holds names.size() values

    static SweepEntry single(std::string name, std::vector<double> values);
    int steps() const { return int(tuples.size()); }
};

/// A batch of runs: cross product of sweep entries times `replicates`.
/// Replicate r of cell c runs with seed = replicate_seed(seed_base, c, r).
struct ExperimentSpec {
    ModelParams base;
    std::vector<SweepEntry> sweep;  // first entry is the outermost loop
    int replicates = 100;
    std::uint64_t seed_base = 0;
    long snapshot_stride = 0;
    std::filesystem::path output_dir = "out";

    void validate() const;
    int cell_count() const;
    /// Base params with cell `c`'s sweep values applied (seed untouched).
    ModelParams cell_params(int c) const;
    /// The (name, value) overrides of cell `c`, in sweep order.
    std::vector<std::pair<std::string, double>> cell_overrides(int c) const;
};

/// Key-value config text with [model], [solver], [experiment], [sweep]
/// sections. Sweep values are comma lists ("1,7,29") or start:step:stop ranges
/// ("2:2:20"); paired axes list several keys and semicolon-separated tuples
/// ("alpha_r, alpha_a = 360,360; 344,351"). Lines starting with # are comments.
ExperimentSpec parse_experiment_file(const std::filesystem::path& path);

/// Reads only the [model]/[solver] sections into `params`.
void apply_config_file(const std::filesystem::path& path, ModelParams& params);

/// Expands "a,b,c" or "start:step:stop" into values.
std::vector<double> parse_value_list(const std::string& text);

}  // namespace swarm
