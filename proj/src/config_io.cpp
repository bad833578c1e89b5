#include "swarm/config_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "swarm/errors.hpp"

namespace swarm {

SweepEntry SweepEntry::single(std::string name, std::vector<double> values) {
    SweepEntry entry;
    entry.names.push_back(std::move(name));
    for (double v : values) entry.tuples.push_back({v});
    return entry;
}

void ExperimentSpec::validate() const {
    base.validate();
    if (replicates < 1) throw ConfigError("replicates must be >= 1");
    if (snapshot_stride < 0) throw ConfigError("snapshot_stride must be >= 0");
    for (const auto& entry : sweep) {
        if (entry.names.empty()) throw ConfigError("sweep entry without parameter names");
        if (entry.tuples.empty())
            throw ConfigError("sweep over '" + entry.names.front() + "' has no values");
        ModelParams probe = base;
        for (const auto& tuple : entry.tuples) {
            if (tuple.size() != entry.names.size())
                throw ConfigError("sweep over '" + entry.names.front() +
                                  "' has a tuple of the wrong arity");
            for (std::size_t k = 0; k < entry.names.size(); ++k)
                set_param(probe, entry.names[k], tuple[k]);  // rejects unknown names
        }
    }
    for (int c = 0; c < cell_count(); ++c) cell_params(c).validate();
}

int ExperimentSpec::cell_count() const {
    int count = 1;
    for (const auto& entry : sweep) count *= entry.steps();
    return count;
}

ModelParams ExperimentSpec::cell_params(int c) const {
    ModelParams p = base;
    for (const auto& [name, value] : cell_overrides(c)) set_param(p, name, value);
    return p;
}

std::vector<std::pair<std::string, double>> ExperimentSpec::cell_overrides(int c) const {
    std::vector<std::pair<std::string, double>> out;
    int stride = cell_count();
    for (const auto& entry : sweep) {
        stride /= entry.steps();
        const int idx = (c / stride) % entry.steps();
        for (std::size_t k = 0; k < entry.names.size(); ++k)
            out.emplace_back(entry.names[k], entry.tuples[idx][k]);
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, const std::string& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse number '" + text + "' in " + where);
    }
}

struct ConfigLine {
    std::string section;
    std::string key;
    std::string value;
};

std::vector<ConfigLine> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::vector<ConfigLine> lines;
    std::string section;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        lines.push_back({section, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
    }
    return lines;
}

void apply_model_line(ModelParams& params, const ConfigLine& line) {
    if (line.key == "heading_mode") {
        params.heading_mode = heading_mode_from_string(line.value);
        return;
    }
    if (line.key == "seed") {
        params.seed = std::stoull(line.value);
        return;
    }
    set_param(params, line.key, parse_double(line.value, "key " + line.key));
}

}  // namespace

std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        std::istringstream ss(text);
        std::string part;
        std::vector<double> parts;
        while (std::getline(ss, part, ':'))
            parts.push_back(parse_double(trim(part), "range '" + text + "'"));
        if (parts.size() != 3 || parts[1] == 0.0)
            throw ConfigError("range must be start:step:stop with step != 0: " + text);
        const double start = parts[0], step = parts[1], stop = parts[2];
        const long count = std::lround(std::floor((stop - start) / step + 1e-9)) + 1;
        for (long k = 0; k < count; ++k) values.push_back(start + step * double(k));
        return values;
    }
    std::istringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        values.push_back(parse_double(trim(part), "list '" + text + "'"));
    return values;
}

void apply_config_file(const std::filesystem::path& path, ModelParams& params) {
    for (const auto& line : read_lines(path)) {
        if (line.section == "model" || line.section == "solver" || line.section.empty())
            apply_model_line(params, line);
    }
}

ExperimentSpec parse_experiment_file(const std::filesystem::path& path) {
    ExperimentSpec spec;
    for (const auto& line : read_lines(path)) {
        if (line.section == "model" || line.section == "solver" || line.section.empty()) {
            apply_model_line(spec.base, line);
        } else if (line.section == "experiment") {
            if (line.key == "replicates")
                spec.replicates = int(parse_double(line.value, "replicates"));
            else if (line.key == "seed_base")
                spec.seed_base = std::stoull(line.value);
            else if (line.key == "snapshot_stride")
                spec.snapshot_stride = long(parse_double(line.value, "snapshot_stride"));
            else if (line.key == "output_dir")
                spec.output_dir = line.value;
            else
                throw ConfigError("unknown [experiment] key: " + line.key);
        } else if (line.section == "sweep") {
            SweepEntry entry;
            std::istringstream keys(line.key);
            std::string name;
            while (std::getline(keys, name, ',')) entry.names.push_back(trim(name));
            if (entry.names.size() == 1) {
                for (double v : parse_value_list(line.value)) entry.tuples.push_back({v});
            } else {
                std::istringstream groups(line.value);
                std::string group;
                while (std::getline(groups, group, ';'))
                    entry.tuples.push_back(parse_value_list(trim(group)));
            }
            spec.sweep.push_back(std::move(entry));
        } else {
            throw ConfigError("unknown config section: [" + line.section + "]");
        }
    }
    return spec;
}

}  // namespace swarm
