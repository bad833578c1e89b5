#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "swarm/analysis.hpp"
#include "swarm/config_io.hpp"
#include "swarm/errors.hpp"
#include "swarm/experiment.hpp"
#include "swarm/integrator.hpp"
#include "swarm/metrics.hpp"
#include "swarm/presets.hpp"
#include "swarm/record_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct ParamFlags {
    std::optional<std::string> preset_name;
    std::optional<std::string> config_file;
    std::map<std::string, std::optional<double>> values;
    std::optional<std::string> heading_mode;

    // precedence: defaults < preset < config file < explicit flags
    swarm::ModelParams resolve() const {
        swarm::ModelParams params;
        if (preset_name) params = swarm::preset(*preset_name);
        if (config_file) swarm::apply_config_file(*config_file, params);
        for (const auto& [name, value] : values)
            if (value) swarm::set_param(params, name, *value);
        if (heading_mode)
            params.heading_mode = swarm::heading_mode_from_string(*heading_mode);
        return params;
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
    cmd->add_option("--preset", flags.preset_name, "start from a named preset (cluster|line|vee)");
    cmd->add_option("--config", flags.config_file, "key-value config file")
        ->check(CLI::ExistingFile);
    for (const auto& name : swarm::param_names())
        cmd->add_option("--" + name, flags.values[name], "model/solver parameter " + name);
    cmd->add_option("--heading-mode", flags.heading_mode, "fixed|velocity");
}

json verdict_to_json(const swarm::EquilibriumVerdict& verdict, const std::string& scope) {
    json j;
    j["is_filippov_equilibrium"] = verdict.is_filippov_equilibrium;
    j["max_cardinality"] = verdict.max_cardinality;
    j["per_agent_distances"] = verdict.per_agent_distances;
    j["per_agent_cardinality"] = verdict.per_agent_cardinality;
    j["proposition_scope"] = scope;
    return j;
}

std::string scope_note(const swarm::ModelParams& p) {
    if (p.n == 1 && p.alpha_a >= 360.0 && p.alpha_r >= 360.0) return "n=1 isotropic";
    return "outside Proposition scope (stated for n=1 isotropic interactions)";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swarmsim: anisotropic attraction-repulsion group simulator"};
    app.require_subcommand(1);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run one seeded simulation");
    ParamFlags sim_flags;
    add_param_flags(simulate, sim_flags);
    std::uint64_t sim_seed = 0;
    std::string sim_out = "run";
    long sim_stride = 50;
    simulate->add_option("--seed", sim_seed, "RNG seed")->required();
    simulate->add_option("--out", sim_out, "output directory");
    simulate->add_option("--stride", sim_stride, "snapshot stride (0 = first/last only)");

    // batch
    auto* batch = app.add_subcommand("batch", "run a sweep x replicates experiment");
    std::string batch_config;
    std::uint64_t batch_seed = 0;
    std::optional<std::string> batch_out;
    int batch_jobs = int(std::thread::hardware_concurrency());
    batch->add_option("--config", batch_config, "experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
    batch->add_option("--seed", batch_seed, "seed base")->required();
    batch->add_option("--out", batch_out, "override [experiment] output_dir");
    batch->add_option("--jobs", batch_jobs, "worker threads");

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "metrics of a stored run's final state");
    std::string metrics_run;
    std::optional<std::string> metrics_out;
    metrics_cmd->add_option("--run", metrics_run, "run directory (snapshots.csv + metrics.json)")
        ->required()
        ->check(CLI::ExistingDirectory);
    metrics_cmd->add_option("--out", metrics_out, "write JSON here instead of stdout");

    // equilibrium-check
    auto* eq = app.add_subcommand("equilibrium-check",
                                  "verify the distance-xi equilibrium conditions");
    std::optional<std::string> eq_run;
    std::optional<int> eq_rings;
    double eq_spacing = 0.0;
    std::optional<double> eq_xi;
    std::optional<double> eq_eps_dist;
    std::optional<double> eq_eps_tie;
    eq->add_option("--run", eq_run, "run directory to audit");
    eq->add_option("--lattice-rings", eq_rings, "check a generated hex lattice instead");
    eq->add_option("--spacing", eq_spacing, "lattice spacing (with --lattice-rings)");
    eq->add_option("--xi", eq_xi, "comfortable distance (defaults to the run's xi)");
    eq->add_option("--eps-dist", eq_eps_dist,
                   "distance tolerance (default 1e-9; 0.05*xi when auditing a run)");
    eq->add_option("--eps-tie", eq_eps_tie,
                   "equidistance tolerance (default 1e-9; 0.05*xi when auditing a run)");

    // lattice
    auto* lattice_cmd = app.add_subcommand("lattice", "emit a hexagonal lattice configuration");
    int lat_rings = 2;
    double lat_spacing = 1.0;
    std::string lat_out = "lattice.csv";
    lattice_cmd->add_option("--rings", lat_rings, "number of rings")->required();
    lattice_cmd->add_option("--spacing", lat_spacing, "nearest-neighbor distance")->required();
    lattice_cmd->add_option("--out", lat_out, "output CSV");

    // plotdata
    auto* plot = app.add_subcommand("plotdata", "emit plot-ready tables from a stored run");
    std::string plot_run;
    std::string plot_out = "plot";
    double plot_bin = 10.0;
    plot->add_option("--run", plot_run, "run directory")->required()->check(
        CLI::ExistingDirectory);
    plot->add_option("--out", plot_out, "output directory");
    plot->add_option("--bin-width", plot_bin, "rose bin width in degrees");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*simulate) {
            swarm::ModelParams params = sim_flags.resolve();
            params.seed = sim_seed;
            params.validate();
            const swarm::RunRecord record =
                swarm::run(swarm::random_initial(params), params, sim_stride);
            swarm::write_run_record(record, sim_out, "run");
            const bool steady = record.termination.kind ==
                                swarm::TerminationReason::Kind::steady_state;
            std::cout << "terminated: " << (steady ? "steady_state" : "max_iterations")
                      << " after " << record.termination.iterations << " iterations, t="
                      << swarm::format_double(record.termination.final_time) << " TU\n"
                      << "nnd_mean=" << swarm::format_double(record.final_metrics.nnd_mean)
                      << " elongation="
                      << swarm::format_double(record.final_metrics.elongation) << " pattern="
                      << swarm::classify_pattern(record.final_metrics, params) << '\n'
                      << "wrote " << (fs::path(sim_out) / "snapshots.csv").string() << ", "
                      << (fs::path(sim_out) / "metrics.json").string() << '\n';
        } else if (*batch) {
            swarm::ExperimentSpec spec = swarm::parse_experiment_file(batch_config);
            spec.seed_base = batch_seed;
            if (batch_out) spec.output_dir = *batch_out;
            const auto result = swarm::run_experiment(spec, std::max(1, batch_jobs));
            std::cout << "ran " << spec.cell_count() << " cells x " << spec.replicates
                      << " replicates; summary at "
                      << (spec.output_dir / "summary.json").string() << '\n';
        } else if (*metrics_cmd) {
            const auto params = swarm::read_record_params(fs::path(metrics_run) / "metrics.json");
            const auto snapshots =
                swarm::read_snapshots_csv(fs::path(metrics_run) / "snapshots.csv");
            swarm::Configuration config;
            config.agents = snapshots.back().agents;
            config.time = snapshots.back().time;
            const auto report = swarm::compute_metrics(config, params);
            json j;
            j["nnd_mean"] = report.nnd_mean;
            j["nnd_variance"] = report.nnd_variance;
            j["elongation"] = report.elongation;
            for (const auto& [theta, pct] : report.ai_values)
                j["ai"][swarm::format_double(theta)] = pct;
            j["pattern"] = swarm::classify_pattern(report, params);
            if (metrics_out) {
                std::ofstream out(*metrics_out);
                out << j.dump(2) << '\n';
            } else {
                std::cout << j.dump(2) << '\n';
            }
        } else if (*eq) {
            swarm::Configuration config;
            double xi = 0.0;
            double eps_dist = 1e-9, eps_tie = 1e-9;
            std::string scope = "n=1 isotropic";
            if (eq_run) {
                const fs::path dir(*eq_run);
                const auto params = swarm::read_record_params(dir / "metrics.json");
                const auto snapshots = swarm::read_snapshots_csv(dir / "snapshots.csv");
                config.agents = snapshots.back().agents;
                xi = params.xi;
                eps_dist = 0.05 * params.xi;
                eps_tie = 0.05 * params.xi;
                scope = scope_note(params);
            } else if (eq_rings) {
                if (!(eq_spacing > 0)) throw swarm::ConfigError("--spacing required with --lattice-rings");
                config = swarm::hex_lattice(*eq_rings, eq_spacing);
                xi = eq_spacing;
            } else {
                throw swarm::ConfigError("equilibrium-check needs --run or --lattice-rings");
            }
            if (eq_xi) xi = *eq_xi;
            if (eq_eps_dist) eps_dist = *eq_eps_dist;
            if (eq_eps_tie) eps_tie = *eq_eps_tie;
            const auto verdict = swarm::verify_equilibrium(config, xi, eps_dist, eps_tie);
            std::cout << verdict_to_json(verdict, scope).dump(2) << '\n';
        } else if (*lattice_cmd) {
            const swarm::Configuration config = swarm::hex_lattice(lat_rings, lat_spacing);
            std::ofstream out(lat_out);
            if (!out) throw swarm::ConfigError("cannot write " + lat_out);
            out << "run_id,t,agent_id,x,y,heading_x,heading_y\n";
            for (std::size_t i = 0; i < config.agents.size(); ++i) {
                const auto& a = config.agents[i];
                out << "lattice,0," << i << ',' << swarm::format_double(a.position.x) << ','
                    << swarm::format_double(a.position.y) << ','
                    << swarm::format_double(a.heading.x) << ','
                    << swarm::format_double(a.heading.y) << '\n';
            }
            std::cout << "wrote " << config.agents.size() << " agents to " << lat_out << '\n';
        } else if (*plot) {
            swarm::write_plotdata(plot_run, plot_out, plot_bin);
            std::cout << "wrote scatter.tsv, rose.tsv, timeseries.tsv under " << plot_out << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
