#include "swarm/zones.hpp"

#include "swarm/errors.hpp"

namespace swarm {

namespace {
// Slack for closed-boundary membership; far below any angle the model can
// distinguish but enough to absorb atan2 rounding on constructed boundaries.
constexpr double kAngleSlackDeg = 1e-9;
}  // namespace

double bearing_deg(const AgentState& focal, Vec2 other_position) {
    const Vec2 offset = other_position - focal.position;
    if (norm(offset) <= 1e-12)
        throw DegenerateConfigError("bearing undefined: coincident positions");
    return signed_angle_deg(focal.heading, offset);
}

bool in_attraction_zone(const AgentState& focal, Vec2 other_position, double alpha_a) {
    if (alpha_a >= 360.0) {
        const Vec2 offset = other_position - focal.position;
        if (norm(offset) <= 1e-12)
            throw DegenerateConfigError("zone membership undefined: coincident positions");
        return true;
    }
    const Vec2 offset = other_position - focal.position;
    if (norm(offset) <= 1e-12)
        throw DegenerateConfigError("zone membership undefined: coincident positions");
    return angle_between_deg(focal.heading, offset) <= alpha_a / 2.0 + kAngleSlackDeg;
}

bool in_repulsion_zone(const AgentState& focal, Vec2 other_position, double alpha_r, double R_sr) {
    const Vec2 offset = other_position - focal.position;
    const double dist = norm(offset);
    if (dist <= 1e-12)
        throw DegenerateConfigError("zone membership undefined: coincident positions");
    if (dist <= R_sr) return true;
    if (alpha_r >= 360.0) return true;
    return angle_between_deg(focal.heading, offset) <= alpha_r / 2.0 + kAngleSlackDeg;
}

}  // namespace swarm
