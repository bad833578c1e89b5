#pragma once

#include "swarm/state.hpp"
#include "swarm/vec.hpp"

namespace swarm {

// Sensitivity-zone membership. A cone of width alpha spans alpha/2 on each side
// of the heading; the boundary counts as inside (closed zones, with a 1e-9 deg
// slack so exact-boundary constructions are not lost to rounding).

/// Bearing of `other_position` seen from `focal`, relative to its heading.
/// Signed, in (-180, 180]. Throws DegenerateConfigError on coincident positions.
double bearing_deg(const AgentState& focal, Vec2 other_position);

bool in_attraction_zone(const AgentState& focal, Vec2 other_position, double alpha_a);

/// Union of the short-range disk (distance <= R_sr) and the frontal cone.
bool in_repulsion_zone(const AgentState& focal, Vec2 other_position, double alpha_r, double R_sr);

}  // namespace swarm
