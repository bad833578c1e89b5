#include <doctest.h>

#include <cmath>

#include "swarm/integrator.hpp"
#include "swarm/neighbors.hpp"
#include "swarm/velocity.hpp"
#include "test_util.hpp"

using namespace swarm;

TEST_CASE("pair at distance xi does not move") {
    ModelParams p;
    p.N = 2;
    p.n = 1;
    p.xi = 4.0;
    Configuration config = test::collinear_config({0.0, 4.0});
    StreamRng noise(0, kNoiseStream);
    const StepResult result = step(config, p, noise);
    CHECK(result.max_speed == 0.0);
    CHECK(result.config.agents[0].position == Vec2{0.0, 0.0});
    CHECK(result.config.agents[1].position == Vec2{4.0, 0.0});
    CHECK(result.dt_used == p.dt_max);
    CHECK(result.max_relative_drift == 0.0);
}

TEST_CASE("speed cap preserves direction") {
    ModelParams p;
    p.N = 2;
    p.n = 1;
    p.xi = 5.0;
    p.v_max = 10.0;
    // d = 105: raw speed = 105 - 25/105, far beyond the cap
    Configuration config = test::collinear_config({0.0, 105.0});
    StreamRng noise(0, kNoiseStream);
    const StepResult result = step(config, p, noise);
    CHECK(result.max_speed == doctest::Approx(10.0).epsilon(1e-12));
    const Vec2 applied = result.config.agents[0].velocity;
    CHECK(applied.x == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(applied.y == 0.0);
}

TEST_CASE("dt follows the displacement cap") {
    ModelParams p;
    p.N = 2;
    p.n = 1;
    p.xi = 5.0;
    p.v_max = 1000.0;
    p.dt_max = 1.0;
    p.disp_cap = 0.5;  // = 0.1 * xi
    Configuration config = test::collinear_config({0.0, 10.0});  // speeds 1.5*xi = 7.5
    StreamRng noise(0, kNoiseStream);
    const StepResult result = step(config, p, noise);
    CHECK(result.dt_used == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
}

TEST_CASE("noise only rotates, within alpha_noise") {
    ModelParams p;
    p.N = 8;
    p.n = 3;
    p.xi = 2.0;
    p.alpha_noise = 17.0;
    p.seed = 5;
    const Configuration config = test::random_config(17, p.N);

    // reference velocities: field + cap, no noise
    auto expected = velocity_field(config, select_neighbors(config, p), p);
    for (auto& v : expected) {
        const double speed = norm(v);
        if (speed > p.v_max) v = v * (p.v_max / speed);
    }

    StreamRng noise(p.seed, kNoiseStream);
    const StepResult result = step(config, p, noise);
    for (int i = 0; i < p.N; ++i) {
        const Vec2 applied = result.config.agents[i].velocity;
        CHECK(norm(applied) == doctest::Approx(norm(expected[i])).epsilon(1e-12));
        if (norm(expected[i]) > 1e-12)
            CHECK(angle_between_deg(expected[i], applied) <= p.alpha_noise + 1e-9);
    }
}

TEST_CASE("per-step displacement never exceeds the cap") {
    ModelParams p;
    p.N = 10;
    p.n = 2;
    p.xi = 6.0;
    p.seed = 3;
    p.alpha_noise = 5.0;
    Configuration config = test::random_config(23, p.N);
    StreamRng noise(p.seed, kNoiseStream);
    for (int k = 0; k < 200; ++k) {
        const StepResult result = step(config, p, noise);
        CHECK(result.dt_used <= p.dt_max);
        CHECK(result.dt_used * result.max_speed <= p.effective_disp_cap() * (1 + 1e-12));
        config = result.config;
    }
}

TEST_CASE("max_iters = 0 terminates immediately") {
    ModelParams p;
    p.N = 2;
    p.n = 1;
    p.max_iters = 0;
    const RunRecord record = run(test::collinear_config({0.0, 3.0}), p);
    CHECK(record.termination.kind == TerminationReason::Kind::max_iterations);
    CHECK(record.termination.iterations == 0);
    CHECK(record.snapshots.size() == 1);
}

TEST_CASE("two-body distance follows the closed form") {
    // d(t)^2 = xi^2 + (d0^2 - xi^2) exp(-4t) for the mutually-nearest pair
    ModelParams p;
    p.N = 2;
    p.n = 1;
    p.xi = 5.0;
    p.v_max = 1000.0;
    p.disp_cap = 0.05 * p.xi;
    Configuration config = test::collinear_config({0.0, 9.0});
    StreamRng noise(0, kNoiseStream);
    const double u0 = 81.0;
    const double xi2 = 25.0;
    while (config.time < 1.0) {
        config = step(config, p, noise).config;
        const double u = norm_sq(config.agents[1].position - config.agents[0].position);
        const double exact = xi2 + (u0 - xi2) * std::exp(-4.0 * config.time);
        CHECK(std::abs(u - exact) / exact < 0.01);
    }
}

TEST_CASE("two-body run settles at the comfortable distance") {
    ModelParams p;
    p.N = 2;
    p.n = 1;
    p.xi = 5.0;
    const RunRecord record = run(test::collinear_config({0.0, 9.0}), p);
    CHECK(record.termination.kind == TerminationReason::Kind::steady_state);
    const double d = norm(record.final_config.agents[1].position -
                          record.final_config.agents[0].position);
    CHECK(std::abs(d - 5.0) < 1e-3);
}

TEST_CASE("runs are deterministic given (initial, params, seed)") {
    ModelParams p;
    p.N = 8;
    p.n = 3;
    p.xi = 4.0;
    p.alpha_a = 200.0;
    p.alpha_r = 120.0;
    p.alpha_noise = 5.0;
    p.seed = 77;
    p.max_iters = 500;
    const Configuration initial = random_initial(p);
    const RunRecord a = run(initial, p, 10);
    const RunRecord b = run(initial, p, 10);
    CHECK(a.termination.iterations == b.termination.iterations);
    CHECK(a.termination.final_time == b.termination.final_time);
    REQUIRE(a.snapshots.size() == b.snapshots.size());
    for (std::size_t s = 0; s < a.snapshots.size(); ++s)
        for (int i = 0; i < p.N; ++i) {
            CHECK(a.snapshots[s].agents[i].position == b.snapshots[s].agents[i].position);
            CHECK(a.snapshots[s].agents[i].heading == b.snapshots[s].agents[i].heading);
        }
}

TEST_CASE("close pairs separate: min distance below xi is non-decreasing") {
    // noise-free, n=1, isotropic, default disp_cap = 0.2*min(xi, R_sr)
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        ModelParams p;
        p.N = 2 + int(seed % 2);  // two- and three-agent instances
        p.n = 1;
        p.xi = 2.0 + double(seed % 7);
        Configuration config = test::random_config(seed + 100, p.N, 1.5 * p.xi);
        StreamRng noise(0, kNoiseStream);
        for (int k = 0; k < 150; ++k) {
            const double before = min_pair_distance(config);
            config = step(config, p, noise).config;
            if (before < p.xi) CHECK(min_pair_distance(config) >= before * (1 - 1e-12));
        }
    }
}

TEST_CASE("velocity heading mode re-aims moving agents") {
    ModelParams p;
    p.N = 2;
    p.n = 1;
    p.xi = 1.0;
    p.heading_mode = HeadingMode::velocity;
    Configuration config = test::collinear_config({0.0, 0.0});
    config.agents[1].position = {0.0, 5.0};  // attraction pulls agent 0 along +y
    StreamRng noise(0, kNoiseStream);
    const StepResult result = step(config, p, noise);
    CHECK(result.config.agents[0].heading.y == doctest::Approx(1.0));

    // fixed mode keeps the initial axis
    p.heading_mode = HeadingMode::fixed;
    const StepResult fixed_result = step(config, p, noise);
    CHECK(fixed_result.config.agents[0].heading == Vec2{1.0, 0.0});
}

TEST_CASE("crystal run reaches NND close to xi") {
    ModelParams p;
    p.N = 30;
    p.n = 1;
    p.xi = 10.0;
    p.seed = 4;
    const RunRecord record = run(random_initial(p), p);
    CHECK(record.termination.kind == TerminationReason::Kind::steady_state);
    CHECK(record.final_metrics.nnd_mean == doctest::Approx(10.0).epsilon(0.05));
}
