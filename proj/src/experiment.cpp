#include "swarm/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "swarm/errors.hpp"
#include "swarm/record_io.hpp"

namespace swarm {

using nlohmann::json;

Stats stats_over(const std::vector<double>& values) {
    Stats s;
    if (values.empty()) return s;
    s.min = values.front();
    s.max = values.front();
    double sum = 0.0;
    for (double v : values) {
        sum += v;
        if (v < s.min) s.min = v;
        if (v > s.max) s.max = v;
    }
    s.mean = sum / double(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.variance = sq / double(values.size());
    return s;
}

std::map<std::string, double> summary_metrics(const MetricsReport& report) {
    std::map<std::string, double> out;
    out["nnd_mean"] = report.nnd_mean;
    out["nnd_variance"] = report.nnd_variance;
    out["elongation"] = report.elongation;
    for (const auto& [theta, pct] : report.ai_values) {
        char key[40];
        std::snprintf(key, sizeof(key), "ai_%g", theta);
        out[key] = pct;
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, int jobs, bool write_records) {
    spec.validate();
    const int cells = spec.cell_count();
    const int total = cells * spec.replicates;

    struct RunOutcome {
        std::map<std::string, double> metrics;
        bool steady = false;
    };
    std::vector<RunOutcome> outcomes(total);

    std::atomic<int> next{0};
    const auto worker = [&] {
        while (true) {
            const int idx = next.fetch_add(1);
            if (idx >= total) return;
            const int c = idx / spec.replicates;
            const int r = idx % spec.replicates;
            ModelParams params = spec.cell_params(c);
            params.seed = replicate_seed(spec.seed_base, std::uint32_t(c), std::uint32_t(r));
            const RunRecord record =
                run(random_initial(params), params, spec.snapshot_stride);
            outcomes[idx].metrics = summary_metrics(record.final_metrics);
            outcomes[idx].steady =
                record.termination.kind == TerminationReason::Kind::steady_state;
            if (write_records) {
                char name[40];
                std::snprintf(name, sizeof(name), "c%dr%d", c, r);
                write_run_record(record, spec.output_dir / name, name);
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ExperimentResult result;
    result.cells.resize(cells);
    for (int c = 0; c < cells; ++c) {
        CellSummary& cell = result.cells[c];
        cell.cell_index = c;
        cell.overrides = spec.cell_overrides(c);
        std::map<std::string, std::vector<double>> columns;
        for (int r = 0; r < spec.replicates; ++r) {
            const RunOutcome& o = outcomes[c * spec.replicates + r];
            for (const auto& [key, value] : o.metrics) columns[key].push_back(value);
            (o.steady ? cell.steady_runs : cell.capped_runs) += 1;
        }
        for (const auto& [key, column] : columns) cell.metrics[key] = stats_over(column);
    }

    if (write_records) write_summary_json(result, spec, spec.output_dir / "summary.json");
    return result;
}

void write_summary_json(const ExperimentResult& result, const ExperimentSpec& spec,
                        const std::filesystem::path& path) {
    json j;
    j["replicates"] = spec.replicates;
    j["seed_base"] = spec.seed_base;
    json cells = json::array();
    for (const auto& cell : result.cells) {
        json jc;
        jc["cell_index"] = cell.cell_index;
        json over = json::object();
        for (const auto& [name, value] : cell.overrides) over[name] = value;
        jc["overrides"] = over;
        json metrics = json::object();
        for (const auto& [name, s] : cell.metrics)
            metrics[name] = {
                {"mean", s.mean}, {"variance", s.variance}, {"min", s.min}, {"max", s.max}};
        jc["metrics"] = metrics;
        jc["terminations"] = {{"steady_state", cell.steady_runs},
                              {"max_iterations", cell.capped_runs}};
        cells.push_back(std::move(jc));
    }
    j["cells"] = std::move(cells);
    if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write summary: " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace swarm
