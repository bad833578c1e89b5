#include "swarm/record_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "swarm/errors.hpp"

namespace swarm {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json params_to_json(const ModelParams& p) {
    json j;
    for (const auto& name : param_names()) j[name] = get_param(p, name);
    j["heading_mode"] = to_string(p.heading_mode);
    j["seed"] = p.seed;
    return j;
}

json metrics_to_json(const MetricsReport& m) {
    json j;
    j["nnd_mean"] = m.nnd_mean;
    j["nnd_variance"] = m.nnd_variance;
    j["elongation"] = m.elongation;
    json ai = json::object();
    for (const auto& [theta, pct] : m.ai_values) {
        char key[32];
        std::snprintf(key, sizeof(key), "%g", theta);
        ai[key] = pct;
    }
    j["ai"] = ai;
    j["angle_histogram"] = {{"bin_width", m.angle_histogram.bin_width},
                            {"counts", m.angle_histogram.counts}};
    return j;
}

MetricsReport metrics_from_json(const json& j) {
    MetricsReport m;
    m.nnd_mean = j.at("nnd_mean").get<double>();
    m.nnd_variance = j.at("nnd_variance").get<double>();
    m.elongation = j.at("elongation").get<double>();
    for (const auto& [key, value] : j.at("ai").items())
        m.ai_values[std::stod(key)] = value.get<double>();
    m.angle_histogram.bin_width = j.at("angle_histogram").at("bin_width").get<double>();
    m.angle_histogram.counts = j.at("angle_histogram").at("counts").get<std::vector<long>>();
    return m;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path.string());
    return out;
}

}  // namespace

void write_run_record(const RunRecord& record, const std::filesystem::path& dir,
                      const std::string& run_id) {
    std::filesystem::create_directories(dir);

    {
        auto out = open_out(dir / "snapshots.csv");
        out << "run_id,t,agent_id,x,y,heading_x,heading_y\n";
        for (const auto& snap : record.snapshots) {
            for (std::size_t i = 0; i < snap.agents.size(); ++i) {
                const AgentState& a = snap.agents[i];
                out << run_id << ',' << format_double(snap.time) << ',' << i << ','
                    << format_double(a.position.x) << ',' << format_double(a.position.y) << ','
                    << format_double(a.heading.x) << ',' << format_double(a.heading.y) << '\n';
            }
        }
    }
    {
        auto out = open_out(dir / "centroid.csv");
        out << "run_id,t,cx,cy\n";
        for (const auto& snap : record.snapshots)
            out << run_id << ',' << format_double(snap.time) << ','
                << format_double(snap.centroid_lab.x) << ','
                << format_double(snap.centroid_lab.y) << '\n';
    }
    {
        json j;
        j["run_id"] = run_id;
        j["params"] = params_to_json(record.params);
        j["seed"] = record.seed;
        j["termination"] = {
            {"kind", record.termination.kind == TerminationReason::Kind::steady_state
                         ? "steady_state"
                         : "max_iterations"},
            {"iterations", record.termination.iterations},
            {"final_time", record.termination.final_time}};
        j["final_metrics"] = metrics_to_json(record.final_metrics);
        json series = json::array();
        for (std::size_t k = 0; k < record.snapshots.size(); ++k) {
            json entry = metrics_to_json(record.metrics_series[k]);
            entry["t"] = record.snapshots[k].time;
            series.push_back(std::move(entry));
        }
        j["timeseries"] = std::move(series);
        auto out = open_out(dir / "metrics.json");
        out << j.dump(2) << '\n';
    }
}

std::vector<Snapshot> read_snapshots_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open snapshots file: " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty snapshots file: " + file.string());

    std::vector<Snapshot> snapshots;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 7)
            throw ConfigError(file.string() + ":" + std::to_string(lineno) +
                              ": expected 7 columns");
        const double t = std::stod(fields[1]);
        AgentState a;
        a.position = {std::stod(fields[3]), std::stod(fields[4])};
        a.heading = {std::stod(fields[5]), std::stod(fields[6])};
        if (snapshots.empty() || snapshots.back().time != t) {
            Snapshot snap;
            snap.time = t;
            snapshots.push_back(snap);
        }
        snapshots.back().agents.push_back(a);
    }
    if (snapshots.empty()) throw ConfigError("no snapshots in " + file.string());
    return snapshots;
}

MetricsReport read_final_metrics(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open metrics file: " + file.string());
    json j = json::parse(in);
    return metrics_from_json(j.at("final_metrics"));
}

ModelParams read_record_params(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open metrics file: " + file.string());
    json j = json::parse(in);
    ModelParams p;
    const json& jp = j.at("params");
    for (const auto& name : param_names()) set_param(p, name, jp.at(name).get<double>());
    p.heading_mode = heading_mode_from_string(jp.at("heading_mode").get<std::string>());
    p.seed = jp.at("seed").get<std::uint64_t>();
    return p;
}

void write_plotdata(const std::filesystem::path& run_dir, const std::filesystem::path& out_dir,
                    double bin_width) {
    const auto snapshots = read_snapshots_csv(run_dir / "snapshots.csv");
    std::filesystem::create_directories(out_dir);

    Configuration terminal;
    terminal.agents = snapshots.back().agents;
    terminal.time = snapshots.back().time;

    {
        auto out = open_out(out_dir / "scatter.tsv");
        out << "x\ty\theading_x\theading_y\n";
        for (const auto& a : terminal.agents)
            out << format_double(a.position.x) << '\t' << format_double(a.position.y) << '\t'
                << format_double(a.heading.x) << '\t' << format_double(a.heading.y) << '\n';
    }
    {
        const AngleHistogram rose = nn_angle_histogram(terminal, bin_width);
        auto out = open_out(out_dir / "rose.tsv");
        out << "bin_lo\tbin_hi\tcount\n";
        for (std::size_t k = 0; k < rose.counts.size(); ++k) {
            const double lo = -180.0 + double(k) * rose.bin_width;
            const double hi = std::min(lo + rose.bin_width, 180.0);
            out << format_double(lo) << '\t' << format_double(hi) << '\t' << rose.counts[k]
                << '\n';
        }
    }
    {
        std::ifstream in(run_dir / "metrics.json");
        if (!in) throw ConfigError("cannot open " + (run_dir / "metrics.json").string());
        json j = json::parse(in);
        auto out = open_out(out_dir / "timeseries.tsv");
        std::vector<std::string> ai_keys;
        const json& series = j.at("timeseries");
        if (!series.empty())
            for (const auto& [key, value] : series.front().at("ai").items())
                ai_keys.push_back(key);
        out << "t\tnnd_mean\tnnd_variance\telongation";
        for (const auto& key : ai_keys) out << "\tai_" << key;
        out << '\n';
        for (const auto& entry : series) {
            out << format_double(entry.at("t").get<double>()) << '\t'
                << format_double(entry.at("nnd_mean").get<double>()) << '\t'
                << format_double(entry.at("nnd_variance").get<double>()) << '\t'
                << format_double(entry.at("elongation").get<double>());
            for (const auto& key : ai_keys)
                out << '\t' << format_double(entry.at("ai").at(key).get<double>());
            out << '\n';
        }
    }
}

}  // namespace swarm
