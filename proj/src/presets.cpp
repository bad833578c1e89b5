#include "swarm/presets.hpp"

#include "swarm/errors.hpp"

namespace swarm {

ModelParams preset(const std::string& name) {
    ModelParams p;
    if (name == "cluster") {
        p.N = 60;
        p.n = 1;
        p.xi = 10.0;
        p.alpha_a = 360.0;
        p.alpha_r = 360.0;
    } else if (name == "line") {
        p.N = 30;
        p.n = 7;
        p.xi = 10.0;
        p.alpha_a = 180.0;
        p.alpha_r = 40.0;
        p.max_iters = 30000;
    } else if (name == "vee") {
        p.N = 30;
        p.n = 7;
        p.xi = 13.0;
        p.alpha_a = 360.0;
        p.alpha_r = 60.0;
        p.v_max = 10.0;
        p.max_iters = 30000;
    } else {
        throw ConfigError("unknown preset: " + name);
    }
    return p;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"cluster", "line", "vee"};
    return names;
}

}  // namespace swarm
