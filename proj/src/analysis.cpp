#include "sho/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "sho/errors.hpp"
#include "sho/matrix.hpp"
#include "sho/solver.hpp"
#include "sho/specfun.hpp"

namespace sho {

double perturbation_estimate(const ModelSpec& model, const BasisContext& ctx,
                             int D) {
    if (D < 1) throw DomainError("perturbation_estimate: D must be positive");
    if (2.0 * ctx.gamma <= model.alpha)
        throw DomainError("perturbation_estimate: requires 2*gamma > alpha");

    const double e0 = gk_energy(ctx, 0);
    const bool spike = model.lambda != 0.0;
    const bool aux = ctx.A != 0.0;

    double first = 0.0;
    if (spike) first += model.lambda * matelem_x_pow(ctx, model.alpha, 0, 0);
    if (aux) first -= ctx.A * matelem_alpha2(ctx, 0, 0);

    double sum = 0.0;
    for (int n = 1; n <= D; ++n) {
        double me = 0.0;
        if (spike) me += model.lambda * matelem_x_pow(ctx, model.alpha, 0, n);
        if (aux) me -= ctx.A * matelem_alpha2(ctx, 0, n);
        sum += me * me / (gk_energy(ctx, n) - e0);
    }
    return e0 + first - sum;
}

double convergence_sum_alpha4(const BasisContext& ctx, double lambda, long D) {
    const double g = ctx.gamma;
    if (D == kInfiniteD) {
        if (g <= 3.0)
            throw DivergenceError(
                "convergence_sum_alpha4: the infinite sum requires gamma > 3");
    } else {
        if (D < 1)
            throw DomainError("convergence_sum_alpha4: D must be positive");
        if (g <= 2.0)
            throw DomainError("convergence_sum_alpha4: requires gamma > 2");
    }

    const double q = lambda - ctx.A * (g - 2.0);
    // Gamma(g-2)/Gamma(g) = 1/((g-1)(g-2))
    const double gr = 1.0 / ((g - 1.0) * (g - 2.0));
    const double pref2 = gr * gr;

    if (D == kInfiniteD) {
        const long budget = 5000000;
        const double f1 = hyp_pfq_plateau({3.0, 1.0}, {g + 1.0}, budget).value;
        const double f2 =
            hyp_pfq_plateau({3.0, 1.0, 1.0}, {2.0, g + 1.0}, budget).value;
        const double f3 =
            hyp_pfq_plateau({3.0, 1.0, 1.0, 1.0}, {2.0, 2.0, g + 1.0}, budget)
                .value;
        return pref2 / (2.0 * g) *
               (lambda * lambda * f1 + 2.0 * lambda * q * f2 + q * q * f3);
    }

    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    double t = 2.0 / g;  // n = 1 term of S1: 2!/(g)_1
    for (long n = 1; n <= D; ++n) {
        const double dn = static_cast<double>(n);
        s1 += t;
        s2 += t / dn;
        s3 += t / (dn * dn);
        t *= (dn + 2.0) / (g + dn);
    }
    return 0.25 * pref2 *
           (lambda * lambda * s1 + 2.0 * lambda * q * s2 + q * q * s3);
}

double lambda_of_gamma(double gamma) {
    if (gamma <= 1.5)
        throw DomainError("lambda_of_gamma: requires gamma > 3/2");
    return lambda_of_gamma_generic(gamma);
}

double stationarity_check_D1(const ModelSpec& model) {
    if (model.alpha != 4.0 || model.B != 1.0 || model.N != 1)
        throw DomainError(
            "stationarity_check_D1: requires alpha = 4, B = 1, N = 1");

    const SpectrumResult r = minimize_over_A(model, 1, 0);
    const double astar = r.optimal_A;
    const double a_min = A_lower_bound(model);
    double delta = 1e-5 * (1.0 + astar);
    if (astar - delta <= a_min) delta = 0.45 * (astar - a_min);

    double deriv;
    if (r.boundary_A || delta <= 0.0) {
        const double d = std::max(delta, 1e-7 * (1.0 + astar));
        const double ep = solve_spectrum(model, 1, false, astar + d).eigenvalues[0];
        deriv = (ep - r.eigenvalues[0]) / d;
    } else {
        const double ep =
            solve_spectrum(model, 1, false, astar + delta).eigenvalues[0];
        const double em =
            solve_spectrum(model, 1, false, astar - delta).eigenvalues[0];
        deriv = (ep - em) / (2.0 * delta);
        const double predicted = lambda_of_gamma(gk_gamma_1d(astar));
        const double rel = std::fabs(predicted - model.lambda) /
                           std::max(std::fabs(model.lambda), 1e-300);
        if (rel > 1e-6)
            throw ConvergenceError(
                "stationarity_check_D1: minimizer inconsistent with the "
                "stationarity relation (relative deviation " +
                std::to_string(rel) + ")");
    }
    return std::fabs(deriv);
}

ConvergenceReport analyze_convergence(const ModelSpec& model,
                                      const BasisContext& ctx, int D) {
    if (model.alpha != 4.0)
        throw DomainError("analyze_convergence: defined for alpha = 4 only");

    ConvergenceReport rep;
    rep.perturbation_E = perturbation_estimate(model, ctx, D);
    rep.sum_partial = convergence_sum_alpha4(ctx, model.lambda, D);
    if (ctx.gamma > 3.0)
        rep.sum_closed = convergence_sum_alpha4(ctx, model.lambda, kInfiniteD);
    rep.lambda_of_gamma = lambda_of_gamma(ctx.gamma);
    rep.regime = model.lambda > kLambdaCritical ? Regime::fast : Regime::slow;
    return rep;
}

}  // namespace sho
