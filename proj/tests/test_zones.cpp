#include <doctest.h>

#include <cmath>

#include "swarm/errors.hpp"
#include "swarm/zones.hpp"

using namespace swarm;

namespace {
AgentState facing_x(Vec2 pos = {0, 0}) {
    AgentState a;
    a.position = pos;
    a.heading = {1.0, 0.0};
    return a;
}
}  // namespace

TEST_CASE("attraction cone membership") {
    const AgentState focal = facing_x();
    CHECK(in_attraction_zone(focal, {1, 0}, 40.0));
    CHECK(in_attraction_zone(focal, {0, 1}, 180.0));       // 90 deg on the boundary
    CHECK_FALSE(in_attraction_zone(focal, {0, 1}, 179.9)); // just outside
    CHECK(in_attraction_zone(focal, {-1, 0}, 360.0));      // isotropic sees everything
    CHECK_FALSE(in_attraction_zone(focal, {-1, 0}, 359.0));
}

TEST_CASE("repulsion zone is disk union cone") {
    const AgentState focal = facing_x();
    CHECK(in_repulsion_zone(focal, {0, -0.5}, 60.0, 1.0));   // inside the disk
    CHECK_FALSE(in_repulsion_zone(focal, {0, -5}, 60.0, 1.0));

    // bearing exactly alpha_r/2: boundary counts as inside, and matches a
    // direct angle computation
    const double c = 5.0 * std::cos(deg_to_rad(30.0));
    const double s = -5.0 * std::sin(deg_to_rad(30.0));
    const double direct = rad_to_deg(std::acos(c / std::hypot(c, s)));
    CHECK(direct == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(in_repulsion_zone(focal, {c, s}, 60.0, 1.0));
    CHECK_FALSE(in_repulsion_zone(focal, {c, s}, 59.0, 1.0));
}

TEST_CASE("coincident positions are degenerate") {
    const AgentState focal = facing_x({2, 3});
    CHECK_THROWS_AS((void)in_attraction_zone(focal, {2, 3}, 180.0), DegenerateConfigError);
    CHECK_THROWS_AS((void)in_repulsion_zone(focal, {2, 3}, 180.0, 1.0), DegenerateConfigError);
    CHECK_THROWS_AS((void)bearing_deg(focal, {2, 3}), DegenerateConfigError);
}

TEST_CASE("bearing sign convention") {
    const AgentState focal = facing_x();
    CHECK(bearing_deg(focal, {0, 1}) == doctest::Approx(90.0));
    CHECK(bearing_deg(focal, {0, -1}) == doctest::Approx(-90.0));
    CHECK(bearing_deg(focal, {-1, 0}) == doctest::Approx(180.0));
}

TEST_CASE("zone membership is rotation covariant") {
    const AgentState focal = facing_x();
    const Vec2 other{3.0, 1.2};
    for (double theta : {10.0, 45.0, 133.7, 260.0}) {
        AgentState rotated_focal;
        rotated_focal.position = rotated(focal.position, deg_to_rad(theta));
        rotated_focal.heading = rotated(focal.heading, deg_to_rad(theta));
        const Vec2 rotated_other = rotated(other, deg_to_rad(theta));
        for (double alpha : {30.0, 60.0, 172.0, 359.0})
            CHECK(in_attraction_zone(focal, other, alpha) ==
                  in_attraction_zone(rotated_focal, rotated_other, alpha));
    }
}
