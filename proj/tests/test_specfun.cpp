#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "sho/errors.hpp"
#include "sho/specfun.hpp"

using Rat = boost::multiprecision::cpp_rational;

namespace {

Rat rat_pochhammer(const Rat& a, long k) {
    Rat p = 1;
    for (long i = 0; i < k; ++i) p *= a + i;
    return p;
}

Rat rat_factorial(long k) {
    Rat p = 1;
    for (long i = 2; i <= k; ++i) p *= i;
    return p;
}

double to_d(const Rat& r) { return r.convert_to<double>(); }

// Brute-force rational partial sum of pFq at unit argument.
Rat rat_pfq_partial(const std::vector<Rat>& nums, const std::vector<Rat>& dens, long terms) {
    Rat sum = 0;
    for (long k = 0; k < terms; ++k) {
        Rat t = 1;
        for (const Rat& a : nums) t *= rat_pochhammer(a, k);
        bool zero = (t == 0);
        for (const Rat& b : dens) t /= rat_pochhammer(b, k);
        t /= rat_factorial(k);
        sum += t;
        if (zero) break; // series terminated
    }
    return sum;
}

}  // namespace

TEST_CASE("pochhammer matches exact rational products") {
    const std::vector<Rat> bases = {Rat(3, 2), Rat(11, 4), Rat(-5, 2), Rat(7)};
    for (const Rat& a : bases) {
        for (long k = 0; k <= 25; ++k) {
            const Rat exact = rat_pochhammer(a, k);
            const double got = sho::pochhammer(to_d(a), k).value();
            CHECK(got == doctest::Approx(to_d(exact)).epsilon(1e-13));
        }
    }
}

TEST_CASE("pochhammer crossing zero gives an exact zero") {
    CHECK(sho::pochhammer(-3.0, 5).is_zero());
    CHECK(sho::pochhammer(-3.0, 4).is_zero());   // (-3)(-2)(-1)(0)
    CHECK(!sho::pochhammer(-3.0, 3).is_zero());  // (-3)(-2)(-1) = -6
    CHECK(sho::pochhammer(-3.0, 3).value() == doctest::Approx(-6.0));
    CHECK(sho::pochhammer_value(-3.0, 3) == doctest::Approx(-6.0));
    CHECK(sho::pochhammer(2.5, 0).value() == doctest::Approx(1.0));
}

TEST_CASE("terminating 1F1 matches the rational series") {
    const Rat b(5, 2);
    const Rat z(13, 8);
    for (long n = 0; n <= 10; ++n) {
        Rat exact = 0;
        for (long k = 0; k <= n; ++k) {
            Rat zk = 1;
            for (long j = 0; j < k; ++j) zk *= z;
            exact += rat_pochhammer(Rat(-n), k) * zk / (rat_pochhammer(b, k) * rat_factorial(k));
        }
        const double got = sho::hyp1f1_terminating(n, to_d(b), to_d(z));
        CHECK(got == doctest::Approx(to_d(exact)).epsilon(1e-12));
    }
}

TEST_CASE("1F1 with a vanishing denominator mid-series throws") {
    // b = -2 kills (b)_k at k = 3 while the series of n = 5 is still running.
    CHECK_THROWS_AS(sho::hyp1f1_terminating(5, -2.0, 1.0), sho::DomainError);
}

TEST_CASE("2F1 at unit argument: series and Chu-Vandermonde agree") {
    const Rat b(7, 3);
    const Rat c(9, 2);
    for (long m = 0; m <= 10; ++m) {
        const Rat series = rat_pfq_partial({Rat(-m), b}, {c}, m + 1);
        const Rat closed = rat_pochhammer(c - b, m) / rat_pochhammer(c, m);
        REQUIRE(series == closed); // exact rational identity
        const double got = sho::hyp2f1_unit(m, to_d(b), to_d(c));
        CHECK(got == doctest::Approx(to_d(closed)).epsilon(1e-12));
    }
}

TEST_CASE("terminating 3F2 matches the rational series") {
    const Rat a2(3, 2), a3(7, 4), b1(5, 2), b2(9, 4);
    for (long m = 0; m <= 8; ++m) {
        const Rat exact = rat_pfq_partial({Rat(-m), a2, a3}, {b1, b2}, m + 1);
        const double got = sho::hyp3f2_unit_terminating(m, to_d(a2), to_d(a3), to_d(b1), to_d(b2));
        CHECK(got == doctest::Approx(to_d(exact)).epsilon(1e-12));
    }
}

TEST_CASE("3F2 early termination on a numerator zero") {
    // a3 = -1 truncates the sum at k = 1 regardless of m.
    const double got = sho::hyp3f2_unit_terminating(6, 2.5, -1.0, 3.5, 4.25);
    const Rat exact = rat_pfq_partial({Rat(-6), Rat(5, 2), Rat(-1)}, {Rat(7, 2), Rat(17, 4)}, 7);
    CHECK(got == doctest::Approx(to_d(exact)).epsilon(1e-13));
}

TEST_CASE("3F2 denominator zero under a live numerator throws") {
    CHECK_THROWS_AS(sho::hyp3f2_unit_terminating(8, 0.5, 0.75, -3.0, 2.5), sho::DomainError);
}

TEST_CASE("pFq partial sums match the rational oracle") {
    const std::vector<Rat> nums = {Rat(5, 2), Rat(3, 2)};
    const std::vector<Rat> dens = {Rat(7, 2), Rat(9, 4)};
    std::vector<double> dn = {2.5, 1.5}, dd = {3.5, 2.25};
    for (long K : {1L, 5L, 30L}) {
        const Rat exact = rat_pfq_partial(nums, dens, K);
        const double got = sho::hyp_pfq_partial(dn, dd, K);
        CHECK(got == doctest::Approx(to_d(exact)).epsilon(1e-12));
    }
}

TEST_CASE("pFq partial sum telescopes exactly for 2F1(3,1;5;1)") {
    // (3)_k (1)_k / ((5)_k k!) = 12/((k+3)(k+4)), so the K-term partial sum
    // telescopes to 4 - 12/(K+3), with full sum 4 (Gauss value).
    for (long K : {1L, 10L, 1000L}) {
        const double got = sho::hyp_pfq_partial({3.0, 1.0}, {5.0}, K);
        const double exact = 4.0 - 12.0 / static_cast<double>(K + 3);
        CHECK(got == doctest::Approx(exact).epsilon(1e-12));
    }
}

TEST_CASE("pFq plateau on a fast series converges to e-1") {
    // sum_k (1)_k / ((2)_k k!) = sum_k 1/(k+1)! = e - 1.
    const sho::PfqPlateau p = sho::hyp_pfq_plateau({1.0}, {2.0});
    CHECK(p.converged);
    CHECK(p.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("pFq plateau reports the partial value on a slow series") {
    // 2F1(3,1;5;1) tail decays like 12/k^2: the plateau criterion is out of
    // reach for any sane budget, and the partial value must telescope.
    const long budget = 20000;
    const sho::PfqPlateau p = sho::hyp_pfq_plateau({3.0, 1.0}, {5.0}, budget);
    CHECK(!p.converged);
    CHECK(p.terms_used >= budget - 1);
    CHECK(p.terms_used <= budget + 1);
    const double exact = 4.0 - 12.0 / static_cast<double>(p.terms_used + 3);
    CHECK(p.value == doctest::Approx(exact).epsilon(1e-10));
}
