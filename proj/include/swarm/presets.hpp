#pragma once

#include <string>
#include <vector>

#include "swarm/params.hpp"

namespace swarm {

/// Named parameter sets for the three reference patterns. The pattern-defining
/// values are pinned; the remaining fields carry the project defaults
/// (R_sr=1, L=15, alpha_noise=0, solver defaults).
///   cluster: N=60, n=1,  xi=10, alpha_a=360, alpha_r=360
///   line:    N=30, n=7,  xi=10, alpha_a=180, alpha_r=40
///   vee:     N=30, n=7,  xi=13, alpha_a=360, alpha_r=60, v_max=10
ModelParams preset(const std::string& name);

const std::vector<std::string>& preset_names();

}  // namespace swarm
