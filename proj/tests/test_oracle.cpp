#include <cmath>

#include "doctest.h"
#include "sho/errors.hpp"
#include "sho/oracle.hpp"
#include "sho/solver.hpp"

using sho::ModelSpec;
using sho::OracleConfig;

TEST_CASE("effective potential assembles all terms") {
    ModelSpec m;
    m.alpha = 4.0;
    m.lambda = 2.0;
    m.B = 9.0;
    CHECK(sho::effective_potential(m, 0.0, 2.0) ==
          doctest::Approx(9.0 * 4.0 + 2.0 / 16.0).epsilon(1e-14));
    // A_extra adds a centrifugal-like term.
    CHECK(sho::effective_potential(m, 3.0, 2.0) ==
          doctest::Approx(9.0 * 4.0 + 2.0 / 16.0 + 0.75).epsilon(1e-14));
    // N = 2, l = 0: Lambda = -1/2 gives the attractive -1/(4x^2) correction.
    ModelSpec flat;
    flat.N = 2;
    flat.lambda = 0.0;
    CHECK(sho::effective_potential(flat, 0.0, 2.0) ==
          doctest::Approx(4.0 - 0.25 / 4.0).epsilon(1e-14));
    CHECK_THROWS_AS(sho::effective_potential(m, 0.0, 0.0), sho::DomainError);
    CHECK_THROWS_AS(sho::effective_potential(m, 0.0, -1.0), sho::DomainError);
}

TEST_CASE("half-line oscillator levels are 4k+3") {
    ModelSpec m;  // lambda = 0, B = 1: Dirichlet at 0 keeps the odd states
    for (int level = 0; level <= 2; ++level) {
        OracleConfig cfg;
        cfg.x_min = 1e-6;
        cfg.x_max = 9.0;
        cfg.steps = 30000;
        cfg.tolerance = 1e-12;
        cfg.energy_bracket = {4.0 * level + 2.0, 4.0 * level + 4.0};
        const sho::OracleResult r = sho::shoot_eigenvalue(m, level, cfg);
        CHECK(r.node_count == level);
        CHECK(r.richardson_estimate == doctest::Approx(4.0 * level + 3.0).epsilon(1e-9));
    }
}

TEST_CASE("exactly solvable auxiliary potential is recovered") {
    // alpha = 2, lambda = 2: E_n = 2(2n + 1 + (1/2)sqrt(9)) = 4n + 5.
    ModelSpec m;
    m.alpha = 2.0;
    m.lambda = 2.0;
    for (int level = 0; level <= 1; ++level) {
        const OracleConfig cfg = sho::make_default_config(m, level);
        const sho::OracleResult r = sho::shoot_eigenvalue(m, level, cfg);
        CHECK(r.node_count == level);
        CHECK(r.richardson_estimate == doctest::Approx(4.0 * level + 5.0).epsilon(1e-8));
        // Richardson must not be worse than the raw grid value here.
        const double exact = 4.0 * level + 5.0;
        CHECK(std::fabs(r.richardson_estimate - exact) <=
              std::fabs(r.energy - exact) + 1e-12);
    }
}

TEST_CASE("default config straddles the variational bound") {
    ModelSpec m;
    m.alpha = 2.0;
    m.lambda = 2.0;
    const OracleConfig cfg = sho::make_default_config(m, 0);
    CHECK(cfg.energy_bracket.first < 5.0);
    CHECK(cfg.energy_bracket.second > 5.0);
    CHECK(cfg.x_min > 0.0);
    CHECK(cfg.x_max > cfg.x_min);
    CHECK(cfg.steps >= 100);
}

TEST_CASE("three-dimensional s states match the half-line problem") {
    ModelSpec m;
    m.N = 3;
    m.lambda = 1.0;
    m.alpha = 2.0;
    // Lambda = 0: the radial problem is literally the 1-D spiked problem.
    ModelSpec half = m;
    half.N = 1;
    const sho::OracleResult r3 =
        sho::shoot_eigenvalue(m, 0, sho::make_default_config(m, 0));
    const sho::OracleResult r1 =
        sho::shoot_eigenvalue(half, 0, sho::make_default_config(half, 0));
    CHECK(r3.richardson_estimate == doctest::Approx(r1.richardson_estimate).epsilon(1e-10));
}

TEST_CASE("planar ground state agrees with the variational bound") {
    ModelSpec m;
    m.N = 2;
    m.alpha = 2.0;
    m.lambda = 1.0;
    const sho::OracleResult r = sho::shoot_eigenvalue(m, 0, sho::make_default_config(m, 0));
    // alpha = 2 in N dimensions is exactly solvable through gamma_N:
    // E_0 = 2 gamma_N(lambda) with Lambda = -1/2.
    const double exact = 2.0 * sho::gk_gamma_nd(1.0, -0.5);
    CHECK(r.richardson_estimate == doctest::Approx(exact).epsilon(1e-8));
}

TEST_CASE("bracket that does not straddle the level throws") {
    ModelSpec m;
    OracleConfig cfg;
    cfg.x_min = 1e-6;
    cfg.x_max = 9.0;
    cfg.steps = 20000;
    cfg.energy_bracket = {0.1, 0.4};  // far below E_3 = 15
    CHECK_THROWS_AS(sho::shoot_eigenvalue(m, 3, cfg), sho::BracketError);
}

TEST_CASE("config validation rejects malformed input") {
    ModelSpec m;
    OracleConfig cfg;
    cfg.energy_bracket = {2.0, 4.0};
    cfg.x_min = -1.0;
    CHECK_THROWS_AS(sho::shoot_eigenvalue(m, 0, cfg), sho::DomainError);
    cfg.x_min = 1e-3;
    cfg.steps = 10;
    CHECK_THROWS_AS(sho::shoot_eigenvalue(m, 0, cfg), sho::DomainError);
    cfg.steps = 20000;
    ModelSpec bad;
    bad.lambda = -1.0;
    CHECK_THROWS_AS(sho::shoot_eigenvalue(bad, 0, cfg), sho::DomainError);
}

TEST_CASE("badly scaled grid raises StiffnessError") {
    // A strong alpha = 6 spike sampled from deep inside the forbidden region
    // with a coarse grid makes 1 - T collapse at the first steps.
    ModelSpec m;
    m.alpha = 6.0;
    m.lambda = 1000.0;
    OracleConfig cfg;
    cfg.x_min = 1e-6;
    cfg.x_max = 8.0;
    cfg.steps = 200;
    cfg.energy_bracket = {10.0, 14.0};
    CHECK_THROWS_AS(sho::shoot_eigenvalue(m, 0, cfg), sho::StiffnessError);
}

TEST_CASE("richardson sharpens a coarse grid") {
    ModelSpec m;  // half-line oscillator, E_0 = 3
    OracleConfig cfg;
    cfg.x_min = 1e-5;
    cfg.x_max = 8.0;
    cfg.steps = 900;
    cfg.tolerance = 1e-12;
    cfg.energy_bracket = {2.2, 3.7};
    const sho::OracleResult r = sho::shoot_eigenvalue(m, 0, cfg);
    CHECK(std::fabs(r.richardson_estimate - 3.0) < std::fabs(r.energy - 3.0));
    CHECK(std::fabs(r.richardson_estimate - 3.0) < 1e-7);
}
