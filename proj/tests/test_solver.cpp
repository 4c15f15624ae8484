#include <cmath>

#include "doctest.h"
#include "sho/errors.hpp"
#include "sho/matrix.hpp"
#include "sho/solver.hpp"

using sho::ModelSpec;

TEST_CASE("A lower bound by validity inversion") {
    ModelSpec m;
    m.alpha = 1.0;
    CHECK(sho::A_lower_bound(m) == 0.0);
    m.alpha = 2.0;
    CHECK(sho::A_lower_bound(m) == 0.0);
    m.alpha = 4.0;
    CHECK(sho::A_lower_bound(m) == doctest::Approx(0.75).epsilon(1e-15));
    m.alpha = 6.0;
    CHECK(sho::A_lower_bound(m) == doctest::Approx(3.75).epsilon(1e-15));
    m.N = 2;  // Lambda = -1/2, w = 0
    m.alpha = 4.0;
    CHECK(sho::A_lower_bound(m) == doctest::Approx(1.0).epsilon(1e-15));
    m.N = 3;  // Lambda = 0, w = 1/4: same as 1-D
    CHECK(sho::A_lower_bound(m) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("alpha = 2 at D = 1 is exact with A* = lambda") {
    ModelSpec m;
    m.alpha = 2.0;
    m.lambda = 10.0;
    const sho::SpectrumResult r = sho::minimize_over_A(m, 1, 0);
    CHECK(r.optimal_A == doctest::Approx(10.0).epsilon(1e-8));
    const double exact = 2.0 * (1.0 + 0.5 * std::sqrt(41.0));
    CHECK(r.eigenvalues[0] == doctest::Approx(exact).epsilon(1e-12));
    CHECK(r.D_used == 1);
    CHECK(r.evaluations > 0);
    CHECK(!r.boundary_A);
}

TEST_CASE("bounds tighten monotonically with D") {
    ModelSpec m;
    m.alpha = 4.0;
    m.lambda = 1.0;
    double prev = sho::minimize_over_A(m, 1, 0).eigenvalues[0];
    for (int D : {2, 4, 8, 16}) {
        const double cur = sho::minimize_over_A(m, D, 0).eigenvalues[0];
        CHECK(cur <= prev + 1e-13);
        prev = cur;
    }
}

TEST_CASE("optimized bound never exceeds fixed-A bounds") {
    ModelSpec m;
    m.alpha = 4.0;
    m.lambda = 2.0;
    const double best = sho::minimize_over_A(m, 8, 0).eigenvalues[0];
    for (double A : {1.0, 2.0, 3.0, 5.0}) {
        const double fixed = sho::solve_spectrum(m, 8, false, A).eigenvalues[0];
        CHECK(best <= fixed + 1e-12);
    }
}

TEST_CASE("Cauchy interlacing for nested principal submatrices") {
    ModelSpec m;
    m.alpha = 4.0;
    m.lambda = 1.0;
    const double A = 2.0;
    const std::vector<double> big = sho::solve_spectrum(m, 7, false, A).eigenvalues;
    const std::vector<double> small = sho::solve_spectrum(m, 6, false, A).eigenvalues;
    for (int k = 0; k < 6; ++k) {
        CHECK(big[k] <= small[k] + 1e-12);
        CHECK(small[k] <= big[k + 1] + 1e-12);
    }
}

TEST_CASE("level argument minimizes the requested eigenvalue") {
    ModelSpec m;
    m.alpha = 4.0;
    m.lambda = 5.0;
    const sho::SpectrumResult r1 = sho::minimize_over_A(m, 10, 1);
    const sho::SpectrumResult r0 = sho::minimize_over_A(m, 10, 0);
    // The level-1 optimized bound is at least as tight for E_1.
    CHECK(r1.eigenvalues[1] <= r0.eigenvalues[1] + 1e-10);
    CHECK_THROWS_AS(sho::minimize_over_A(m, 3, 5), sho::DomainError);
}

TEST_CASE("boundary flag set when the infimum sits at the validity edge") {
    // lambda = 0 with alpha = 4 keeps the A > 3/4 validity floor but removes
    // the spike penalty, so the objective decreases all the way to the edge.
    ModelSpec m;
    m.alpha = 4.0;
    m.lambda = 0.0;
    const sho::SpectrumResult r = sho::minimize_over_A(m, 6, 0);
    CHECK(r.boundary_A);
    CHECK(r.optimal_A >= sho::A_lower_bound(m));
    // Still a genuine upper bound for the pure oscillator ground state at 3.
    CHECK(r.eigenvalues[0] > 3.0);
}

TEST_CASE("solve_spectrum requires a concrete A when not optimizing") {
    ModelSpec m;
    CHECK_THROWS_AS(sho::solve_spectrum(m, 4, false, std::nullopt), sho::DomainError);
    m.alpha = 4.0;
    // fixed A below the validity bound must be rejected, not silently used.
    CHECK_THROWS_AS(sho::solve_spectrum(m, 4, false, 0.0), sho::DomainError);
}

TEST_CASE("convergence schedule is increasing and capped at 100") {
    const std::vector<int>& s = sho::convergence_schedule();
    REQUIRE(!s.empty());
    CHECK(s.front() == 1);
    CHECK(s.back() == 100);
    for (size_t i = 1; i < s.size(); ++i) CHECK(s[i] > s[i - 1]);
}

TEST_CASE("converge_to_digits reaches a published-grade value") {
    ModelSpec m;
    m.alpha = 1.0;
    m.lambda = 1.0;
    // The alpha = 1 spike tightens like a slow power of D; five digits is
    // what the default schedule can certify (six needs D well past 100).
    const sho::SpectrumResult r = sho::converge_to_digits(m, 5, 0);
    CHECK(!r.not_converged);
    CHECK(r.converged_digits == 5);
    CHECK(r.eigenvalues[0] == doctest::Approx(4.057888).epsilon(1e-5));
}

TEST_CASE("converge_to_digits reports exhaustion honestly") {
    ModelSpec m;
    m.alpha = 4.0;
    m.lambda = 0.01;
    const sho::SpectrumResult r = sho::converge_to_digits(m, 10, 0, 3);
    CHECK(r.not_converged);
    CHECK(r.D_used == 3);
    CHECK(r.converged_digits < 10);
}

TEST_CASE("digit argument validation") {
    ModelSpec m;
    CHECK_THROWS_AS(sho::converge_to_digits(m, 0, 0), sho::DomainError);
    CHECK_THROWS_AS(sho::converge_to_digits(m, 13, 0), sho::DomainError);
}
