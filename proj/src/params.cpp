#include "swarm/params.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "swarm/errors.hpp"

namespace swarm {

std::string to_string(HeadingMode m) {
    return m == HeadingMode::fixed ? "fixed" : "velocity";
}

HeadingMode heading_mode_from_string(std::string_view s) {
    if (s == "fixed") return HeadingMode::fixed;
    if (s == "velocity") return HeadingMode::velocity;
    throw ConfigError("unknown heading_mode: " + std::string(s));
}

namespace {

struct FieldAccess {
    std::function<double(const ModelParams&)> get;
    std::function<void(ModelParams&, double)> set;
};

const std::map<std::string, FieldAccess, std::less<>>& field_table() {
    static const std::map<std::string, FieldAccess, std::less<>> table = {
        {"N", {[](const ModelParams& p) { return double(p.N); },
               [](ModelParams& p, double v) { p.N = int(std::llround(v)); }}},
        {"n", {[](const ModelParams& p) { return double(p.n); },
               [](ModelParams& p, double v) { p.n = int(std::llround(v)); }}},
        {"xi", {[](const ModelParams& p) { return p.xi; },
                [](ModelParams& p, double v) { p.xi = v; }}},
        {"alpha_a", {[](const ModelParams& p) { return p.alpha_a; },
                     [](ModelParams& p, double v) { p.alpha_a = v; }}},
        {"alpha_r", {[](const ModelParams& p) { return p.alpha_r; },
                     [](ModelParams& p, double v) { p.alpha_r = v; }}},
        {"R_sr", {[](const ModelParams& p) { return p.R_sr; },
                  [](ModelParams& p, double v) { p.R_sr = v; }}},
        {"v_max", {[](const ModelParams& p) { return p.v_max; },
                   [](ModelParams& p, double v) { p.v_max = v; }}},
        {"L", {[](const ModelParams& p) { return p.L; },
               [](ModelParams& p, double v) { p.L = v; }}},
        {"alpha_noise", {[](const ModelParams& p) { return p.alpha_noise; },
                         [](ModelParams& p, double v) { p.alpha_noise = v; }}},
        {"eps_angle", {[](const ModelParams& p) { return p.eps_angle; },
                       [](ModelParams& p, double v) { p.eps_angle = v; }}},
        {"dt_max", {[](const ModelParams& p) { return p.dt_max; },
                    [](ModelParams& p, double v) { p.dt_max = v; }}},
        {"disp_cap", {[](const ModelParams& p) { return p.disp_cap; },
                      [](ModelParams& p, double v) { p.disp_cap = v; }}},
        {"eps_steady", {[](const ModelParams& p) { return p.eps_steady; },
                        [](ModelParams& p, double v) { p.eps_steady = v; }}},
        {"steady_window", {[](const ModelParams& p) { return double(p.steady_window); },
                           [](ModelParams& p, double v) { p.steady_window = int(std::llround(v)); }}},
        {"max_iters", {[](const ModelParams& p) { return double(p.max_iters); },
                       [](ModelParams& p, double v) { p.max_iters = std::llround(v); }}},
    };
    return table;
}

}  // namespace

void ModelParams::validate() const {
    std::ostringstream bad;
    if (N < 2) bad << "N must be >= 2 (got " << N << "); ";
    if (n < 1 || n > N - 1) bad << "n must be in [1, N-1] (got " << n << "); ";
    if (!(xi > 0)) bad << "xi must be > 0; ";
    if (!(alpha_a > 0 && alpha_a <= 360)) bad << "alpha_a must be in (0, 360]; ";
    if (!(alpha_r > 0 && alpha_r <= 360)) bad << "alpha_r must be in (0, 360]; ";
    if (!(R_sr > 0)) bad << "R_sr must be > 0; ";
    if (!(v_max > 0)) bad << "v_max must be > 0; ";
    if (!(L > 0)) bad << "L must be > 0; ";
    if (!(alpha_noise >= 0 && alpha_noise <= 360)) bad << "alpha_noise must be in [0, 360]; ";
    if (!(eps_angle > 0)) bad << "eps_angle must be > 0; ";
    if (!(dt_max > 0)) bad << "dt_max must be > 0; ";
    if (disp_cap < 0) bad << "disp_cap must be >= 0; ";
    if (!(eps_steady > 0)) bad << "eps_steady must be > 0; ";
    if (steady_window < 1) bad << "steady_window must be >= 1; ";
    if (max_iters < 0) bad << "max_iters must be >= 0; ";
    const std::string msg = bad.str();
    if (!msg.empty()) throw ConfigError("invalid parameters: " + msg);
}

void set_param(ModelParams& p, std::string_view name, double value) {
    const auto& table = field_table();
    auto it = table.find(name);
    if (it == table.end()) throw ConfigError("unknown parameter: " + std::string(name));
    it->second.set(p, value);
}

double get_param(const ModelParams& p, std::string_view name) {
    const auto& table = field_table();
    auto it = table.find(name);
    if (it == table.end()) throw ConfigError("unknown parameter: " + std::string(name));
    return it->second.get(p);
}

const std::vector<std::string>& param_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : field_table()) out.push_back(k);
        return out;
    }();
    return names;
}

}  // namespace swarm
