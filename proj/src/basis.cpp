#include "sho/basis.hpp"

#include <cmath>
#include <sstream>

#include "sho/errors.hpp"
#include "sho/specfun.hpp"

namespace sho {

double angular_Lambda(const ModelSpec& model) {
    return model.l + 0.5 * (model.N - 3);
}

double gk_gamma_1d(double A) {
    return 1.0 + 0.5 * std::sqrt(1.0 + 4.0 * A);
}

double gk_gamma_nd(double A, double Lambda) {
    return 1.0 + std::sqrt(A + (Lambda + 0.5) * (Lambda + 0.5));
}

BasisContext make_context(const ModelSpec& model, double A, int D) {
    if (!(model.B > 0.0)) throw DomainError("make_context: B must be positive");
    if (!(A >= 0.0)) throw DomainError("make_context: A must be non-negative");
    if (D < 1) throw DomainError("make_context: D must be at least 1");
    BasisContext ctx;
    ctx.A = A;
    ctx.beta = std::sqrt(model.B);
    ctx.D = D;
    if (model.N == 1) {
        ctx.gamma = gk_gamma_1d(A);
    } else {
        ctx.gamma = gk_gamma_nd(A, angular_Lambda(model));
    }
    return ctx;
}

double gk_energy(const BasisContext& ctx, int n) {
    return 2.0 * ctx.beta * (2.0 * n + ctx.gamma);
}

LegacyParams gk_convert_legacy(double V0, double a) {
    if (!(V0 > 0.0) || !(a > 0.0))
        throw DomainError("gk_convert_legacy: V0 and a must be positive");
    return {V0 * a * a, V0 / (a * a)};
}

double gk_energy_legacy(double V0, double a, int n) {
    if (!(V0 > 0.0) || !(a > 0.0))
        throw DomainError("gk_energy_legacy: V0 and a must be positive");
    const double sv = std::sqrt(V0);
    return (4.0 / a) * sv *
           (n + 0.5 + 0.25 * (std::sqrt(1.0 + 4.0 * V0 * a * a) - 2.0 * a * sv));
}

LogScaledValue norm_constant(const BasisContext& ctx, int n) {
    if (!(ctx.gamma > 0.0)) throw DomainError("norm_constant: gamma must be positive");
    // C_n^2 = 2 beta^gamma (gamma)_n / (n! Gamma(gamma))
    const double log_cn2 = std::log(2.0) + ctx.gamma * std::log(ctx.beta) +
                           pochhammer(ctx.gamma, n).log_magnitude -
                           std::lgamma(n + 1.0) - std::lgamma(ctx.gamma);
    return LogScaledValue{0.5 * log_cn2, +1};
}

double eval_wavefunction(const BasisContext& ctx, int n, double x) {
    if (!(x > 0.0)) {
        std::ostringstream msg;
        msg << "eval_wavefunction: x must be positive, got " << x;
        throw DomainError(msg.str());
    }
    const double z = ctx.beta * x * x;
    const double f = hyp1f1_terminating(n, ctx.gamma, z);
    const LogScaledValue cn = norm_constant(ctx, n);
    double log_mag = cn.log_magnitude + (ctx.gamma - 0.5) * std::log(x) - 0.5 * z;
    int sign = (n % 2 == 0) ? +1 : -1;
    if (f == 0.0) return 0.0;
    if (f < 0.0) sign = -sign;
    log_mag += std::log(std::fabs(f));
    return sign * std::exp(log_mag);
}

} // namespace sho
