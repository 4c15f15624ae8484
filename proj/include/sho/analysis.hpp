#pragma once

#include <optional>

#include "sho/basis.hpp"

namespace sho {

// Slow/fast classification boundary for the alpha = 4, 1-D analysis.
inline constexpr double kLambdaCritical = 1.25;

// Sentinel for convergence_sum_alpha4: evaluate the infinite-sum closed form.
inline constexpr long kInfiniteD = -1;

enum class Regime { slow, fast };

struct ConvergenceReport {
    double perturbation_E = 0.0;       // perturbation-like estimate at the given D
    double sum_partial = 0.0;          // finite-D value of the three-series sum
    std::optional<double> sum_closed;  // infinite-sum closed form, gamma > 3 only
    double lambda_of_gamma = 0.0;      // stationarity relation evaluated at gamma
    Regime regime = Regime::slow;      // fast iff lambda > 5/4
};

// E0 + lambda<0|x^-alpha|0> - A<0|x^-2|0>
//    - sum_{n=1}^{D} |<0|lambda x^-alpha - A x^-2|n>|^2 / (E_n - E_0).
// Throws DomainError outside 2*gamma > alpha or on D < 1.
double perturbation_estimate(const ModelSpec& model, const BasisContext& ctx,
                             int D);

// The alpha = 4 second-order sum:
//   (1/4) [Gamma(g-2)/Gamma(g)]^2 [ lambda^2 S1 + 2 lambda q S2 + q^2 S3 ],
//   q = lambda - A(g-2),  S1 = sum (n+1)!/(g)_n, S2 = S1/n terms, S3 = S1/n^2,
// summed for n = 1..D. With D = kInfiniteD the closed form
//   (1/(2g)) [Gamma(g-2)/Gamma(g)]^2 [ lambda^2 2F1(3,1;g+1;1)
//       + 2 lambda q 3F2(3,1,1;2,g+1;1) + q^2 4F3(3,1,1,1;2,2,g+1;1) ]
// is evaluated by series plateau detection (the series are summed until the
// relative term drops below 1e-15 or the term budget runs out; near gamma = 3
// the tail decays too slowly for full double accuracy).
// A enters through ctx.A. Throws DomainError (finite D, gamma <= 2) or
// DivergenceError (infinite D, gamma <= 3).
double convergence_sum_alpha4(const BasisContext& ctx, double lambda, long D);

// lambda(gamma) = (gamma-2)^2 (4(gamma-1)^2 - 1) / (4(2 gamma - 3)),
// the alpha = 4, D = 1 stationarity relation. The generic form works for any
// field type (exact rationals included); the double wrapper adds the domain
// check. DomainError at gamma <= 3/2.
template <typename Number>
Number lambda_of_gamma_generic(const Number& gamma) {
    const Number gm1 = gamma - 1;
    const Number gm2 = gamma - 2;
    return gm2 * gm2 * (4 * gm1 * gm1 - 1) / (4 * (2 * gamma - 3));
}

double lambda_of_gamma(double gamma);

// |dE0/dA| at the D = 1 minimizer (central finite difference), for alpha = 4,
// B = 1, N = 1. Also cross-checks lambda_of_gamma(gamma(A*)) against the
// model's lambda to relative 1e-6 unless the minimizer stopped at the validity
// boundary; ConvergenceError on mismatch.
double stationarity_check_D1(const ModelSpec& model);

// Assembles the full report (alpha = 4 only; sum_closed present when the
// context's gamma exceeds 3).
ConvergenceReport analyze_convergence(const ModelSpec& model,
                                      const BasisContext& ctx, int D);

}  // namespace sho
