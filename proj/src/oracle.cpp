#include "sho/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sho/errors.hpp"
#include "sho/solver.hpp"

namespace sho {

double effective_potential(const ModelSpec& model, double A_extra, double x) {
    if (x <= 0.0) throw DomainError("effective_potential: x must be positive");
    double v = model.B * x * x + A_extra / (x * x);
    if (model.lambda != 0.0) v += model.lambda * std::pow(x, -model.alpha);
    if (model.N >= 2) {
        const double L = angular_Lambda(model);
        v += L * (L + 1.0) / (x * x);
    }
    return v;
}

namespace {

constexpr double kRescaleLimit = 1e250;

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// One outward + one inward sweep at fixed energy.
struct ShootOutcome {
    int nodes = 0;           // sign changes of the outward solution
    double mismatch = 0.0;   // Numerov cusp residual at the matching index
    bool mismatch_valid = false;
};

// Small-x exponent p(p-1) = c of the regular solution when no alpha > 2 spike
// dominates: c collects the 1/x^2 coefficients (lambda enters only at alpha = 2).
double small_x_power(const ModelSpec& model) {
    double c = 0.0;
    if (model.alpha == 2.0) c += model.lambda;
    if (model.N >= 2) {
        const double L = angular_Lambda(model);
        c += L * (L + 1.0);
    }
    return 0.5 + std::sqrt(std::max(0.0, c + 0.25));
}

// WKB action of the dominant spike term for alpha > 2, measured from x upward.
double spike_action(double lambda, double alpha, double x) {
    return 2.0 * std::sqrt(lambda) / (alpha - 2.0) *
           std::pow(x, -0.5 * (alpha - 2.0));
}

class NumerovGrid {
public:
    NumerovGrid(const ModelSpec& model, const OracleConfig& cfg)
        : model_(model),
          n_(cfg.steps),
          x0_(cfg.x_min),
          h_((cfg.x_max - cfg.x_min) / static_cast<double>(cfg.steps)),
          v_(static_cast<size_t>(cfg.steps) + 1) {
        for (long i = 0; i <= n_; ++i)
            v_[static_cast<size_t>(i)] = effective_potential(model_, 0.0, x(i));
        spike_seed_ = model_.lambda > 0.0 && model_.alpha > 2.0;
        power_ = spike_seed_ ? 0.0 : small_x_power(model_);
    }

    double x(long i) const { return x0_ + h_ * static_cast<double>(i); }

    ShootOutcome shoot(double E) const {
        const double c = h_ * h_ / 12.0;
        auto T = [&](long i) { return c * (v_[static_cast<size_t>(i)] - E); };

        // Matching index: outer classical turning point (last grid point with
        // V <= E), clamped away from both ends.
        long m = -1;
        for (long i = n_; i >= 0; --i) {
            if (v_[static_cast<size_t>(i)] <= E) {
                m = i;
                break;
            }
        }
        const bool have_turn = m >= 0;
        m = std::clamp(m, static_cast<long>(3), n_ - 3);

        ShootOutcome out;

        // Outward sweep over the full grid; counts nodes (discrete Sturm count
        // of eigenvalues below E) and records u at m-1, m for the matching.
        double u0 = 1.0, u1;
        if (spike_seed_) {
            u1 = std::exp(spike_action(model_.lambda, model_.alpha, x(0)) -
                          spike_action(model_.lambda, model_.alpha, x(1)));
        } else {
            u1 = std::pow(x(1) / x(0), power_);
        }
        double out_mm1 = 0.0, out_m = 0.0;
        int prev_sign = sgn(u0);
        double t0 = T(0), t1 = T(1);
        check_stiff(t0, 0);
        check_stiff(t1, 1);
        if (m == 1) out_mm1 = u0;  // unreachable after clamping, kept for safety
        for (long i = 1; i < n_; ++i) {
            const double t2 = T(i + 1);
            check_stiff(t2, i + 1);
            const double u2 =
                ((2.0 + 10.0 * t1) * u1 - (1.0 - t0) * u0) / (1.0 - t2);
            if (!std::isfinite(u2))
                throw StiffnessError(
                    "shoot_eigenvalue: outward solution lost at x = " +
                    std::to_string(x(i + 1)) +
                    "; increase x_min or the step count");
            const int s = sgn(u2);
            if (s != 0 && prev_sign != 0 && s == -prev_sign) ++out.nodes;
            if (s != 0) prev_sign = s;
            if (i + 1 == m - 1) out_mm1 = u2;
            if (i + 1 == m) out_m = u2;
            u0 = u1;
            u1 = u2;
            t0 = t1;
            t1 = t2;
            if (std::fabs(u1) > kRescaleLimit) {
                const double scale = 1.0 / std::fabs(u1);
                u0 *= scale;
                u1 *= scale;
                if (i + 1 == m - 1) out_mm1 *= scale;  // keep the pair coherent
            }
        }

        if (!have_turn) return out;  // E below the well: nodes = 0, no matching

        // Inward sweep from the Dirichlet end down to m, recording u at m+1, m.
        double w2 = 0.0, w1 = 1e-8;  // u(x_n) = 0, arbitrary scale at n-1
        double in_mp1 = (m + 1 == n_ - 1) ? w1 : 0.0;
        double in_m = 0.0;
        for (long i = n_ - 2; i >= m; --i) {
            const double ti = T(i);
            check_stiff(ti, i);
            const double w0 =
                ((2.0 + 10.0 * T(i + 1)) * w1 - (1.0 - T(i + 2)) * w2) /
                (1.0 - ti);
            if (!std::isfinite(w0))
                throw StiffnessError(
                    "shoot_eigenvalue: inward solution lost at x = " +
                    std::to_string(x(i)) +
                    "; increase x_min or the step count");
            if (i == m + 1) in_mp1 = w0;
            if (i == m) in_m = w0;
            w2 = w1;
            w1 = w0;
            if (std::fabs(w1) > kRescaleLimit) {
                const double scale = 1.0 / std::fabs(w1);
                w1 *= scale;
                w2 *= scale;
                if (i == m + 1) in_mp1 *= scale;
            }
        }

        if (out_m != 0.0 && in_m != 0.0) {
            // Cusp residual of the Numerov recurrence at m with both branches
            // normalized to u(m) = 1; zero exactly at an eigenvalue, and its
            // sign tracks the log-derivative mismatch u'_out/u_out - u'_in/u_in.
            out.mismatch = (1.0 - T(m - 1)) * (out_mm1 / out_m) +
                           (1.0 - T(m + 1)) * (in_mp1 / in_m) -
                           (2.0 + 10.0 * T(m));
            out.mismatch_valid = std::isfinite(out.mismatch);
        }
        return out;
    }

private:
    static void check_stiff(double t, long i) {
        if (1.0 - t <= 0.05)
            throw StiffnessError(
                "shoot_eigenvalue: grid too stiff at index " + std::to_string(i) +
                " (h^2 V / 12 = " + std::to_string(t) +
                "); increase x_min or the step count");
    }

    ModelSpec model_;
    long n_;
    double x0_;
    double h_;
    std::vector<double> v_;
    bool spike_seed_ = false;
    double power_ = 1.0;
};

// Node-count bisection isolates the level, then bisection driven by the sign
// of the matching mismatch (with the node count as ground truth whenever the
// two disagree, e.g. near a pole of the log-derivative) refines to `tol`.
double bisect_level(const NumerovGrid& grid, int level, double lo, double hi,
                    double tol, int* nodes_out) {
    ShootOutcome a = grid.shoot(lo);
    ShootOutcome b = grid.shoot(hi);
    if (a.nodes > level || b.nodes < level + 1)
        throw BracketError(
            "shoot_eigenvalue: bracket [" + std::to_string(lo) + ", " +
            std::to_string(hi) + "] does not straddle level " +
            std::to_string(level) + " (node counts " + std::to_string(a.nodes) +
            ", " + std::to_string(b.nodes) + ")");
    while ((a.nodes != level || b.nodes != level + 1) && hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        ShootOutcome o = grid.shoot(mid);
        if (o.nodes >= level + 1) {
            hi = mid;
            b = o;
        } else {
            lo = mid;
            a = o;
        }
    }
    int below_sign = 0;
    if (a.mismatch_valid && b.mismatch_valid) {
        const int sa = sgn(a.mismatch);
        if (sa != 0 && sa == -sgn(b.mismatch)) below_sign = sa;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        ShootOutcome o = grid.shoot(mid);
        bool below = o.nodes <= level;
        if (below_sign != 0 && o.mismatch_valid && sgn(o.mismatch) != 0) {
            const bool below_mismatch = sgn(o.mismatch) == below_sign;
            if (below_mismatch != below)
                below_sign = 0;  // mismatch hit a pole; fall back to nodes
            else
                below = below_mismatch;
        }
        if (below) {
            lo = mid;
            a = o;
        } else {
            hi = mid;
            b = o;
        }
    }
    if (nodes_out) *nodes_out = a.nodes;
    return 0.5 * (lo + hi);
}

void validate_config(const ModelSpec& model, int level, const OracleConfig& cfg) {
    if (level < 0) throw DomainError("shoot_eigenvalue: level must be >= 0");
    if (model.B <= 0.0) throw DomainError("shoot_eigenvalue: B must be positive");
    if (model.lambda < 0.0)
        throw DomainError("shoot_eigenvalue: lambda must be >= 0");
    if (!(cfg.x_min > 0.0) || !(cfg.x_max > cfg.x_min))
        throw DomainError("shoot_eigenvalue: need 0 < x_min < x_max");
    if (cfg.steps < 100)
        throw DomainError("shoot_eigenvalue: need at least 100 steps");
    if (!(cfg.tolerance > 0.0))
        throw DomainError("shoot_eigenvalue: tolerance must be positive");
}

}  // namespace

OracleConfig make_default_config(const ModelSpec& model, int level) {
    if (level < 0)
        throw DomainError("make_default_config: level must be >= 0");
    const int D = std::max(20, level + 8);
    const SpectrumResult var = minimize_over_A(model, D, level);
    const double e_var = var.eigenvalues[static_cast<size_t>(level)];

    OracleConfig cfg;
    cfg.energy_bracket = {e_var - std::max(0.5, 0.02 * std::fabs(e_var)),
                          e_var + std::max(0.01, 1e-6 * std::fabs(e_var))};
    cfg.x_max = std::sqrt((cfg.energy_bracket.second + 40.0) / model.B);
    const double beta = std::sqrt(model.B);
    cfg.x_min = 1e-3 / std::sqrt(beta);
    cfg.steps = 40000;
    cfg.tolerance = 1e-9;

    // Raise x_min until the Numerov parameter h^2 V / 12 at the inner edge is
    // small; the trimmed region is deep inside the forbidden zone.
    for (int iter = 0; iter < 400; ++iter) {
        const double h = (cfg.x_max - cfg.x_min) / static_cast<double>(cfg.steps);
        const double t = h * h * effective_potential(model, 0.0, cfg.x_min) / 12.0;
        if (t <= 0.25) break;
        cfg.x_min *= 1.2;
    }
    if (model.lambda > 0.0 && model.alpha > 2.0 &&
        spike_action(model.lambda, model.alpha, cfg.x_min) < 14.0)
        throw StiffnessError(
            "make_default_config: inner cutoff cannot suppress the spike; "
            "increase steps");
    return cfg;
}

OracleResult shoot_eigenvalue(const ModelSpec& model, int level,
                              const OracleConfig& config) {
    validate_config(model, level, config);

    NumerovGrid coarse(model, config);
    int nodes = 0;
    const double e1 =
        bisect_level(coarse, level, config.energy_bracket.first,
                     config.energy_bracket.second, config.tolerance, &nodes);

    OracleConfig doubled = config;
    doubled.steps *= 2;
    NumerovGrid fine(model, doubled);
    const double e2 =
        bisect_level(fine, level, config.energy_bracket.first,
                     config.energy_bracket.second, config.tolerance, nullptr);

    OracleResult result;
    result.energy = e1;
    result.node_count = nodes;
    result.config_used = config;
    result.richardson_estimate = e2 + (e2 - e1) / 15.0;
    return result;
}

}  // namespace sho
