#pragma once

#include <utility>

#include "sho/basis.hpp"

namespace sho {

// Shooting-method configuration. Lengths are in the model's own units.
struct OracleConfig {
    double x_min = 1e-3;   // inner cutoff (the potential is singular at 0)
    double x_max = 10.0;   // outer cutoff
    long steps = 40000;    // grid intervals between x_min and x_max
    std::pair<double, double> energy_bracket{0.0, 0.0};  // must straddle the level
    double tolerance = 1e-9;  // absolute energy tolerance of the refinement
};

struct OracleResult {
    double energy = 0.0;  // converged eigenvalue on the config_used grid
    int node_count = 0;   // interior nodes of the converged solution
    OracleConfig config_used;
    double richardson_estimate = 0.0;  // E2 + (E2 - E1)/15 from a halved-step rerun
};

// Full radial potential B x^2 + lambda / x^alpha + A_extra / x^2, plus the
// centrifugal term Lambda(Lambda+1)/x^2 for N >= 2.
double effective_potential(const ModelSpec& model, double A_extra, double x);

// Bracket and cutoffs suitable for `level`, seeded by a quick variational bound.
OracleConfig make_default_config(const ModelSpec& model, int level);

// Numerov outward/inward shooting. Node-count bisection isolates the level,
// then the sign of the log-derivative mismatch at the outer classical turning
// point drives the refinement; a doubled-step rerun gives the Richardson value.
OracleResult shoot_eigenvalue(const ModelSpec& model, int level,
                              const OracleConfig& config);

}  // namespace sho
