#ifndef SHO_MATRIX_HPP
#define SHO_MATRIX_HPP

#include <string>
#include <vector>

#include "sho/basis.hpp"

namespace sho {

// Dense symmetric D x D matrix of H in the auxiliary basis, together with the
// context it was built in. Row-major storage.
struct HamiltonianMatrix {
    int dim = 0;
    std::vector<double> entries;
    BasisContext ctx;
    ModelSpec model;

    double at(int m, int n) const { return entries[static_cast<size_t>(m) * dim + n]; }
    double& at(int m, int n) { return entries[static_cast<size_t>(m) * dim + n]; }
};

// <psi_m | x^-alpha | psi_n> for general alpha via the terminating 3F2 form:
//   (-1)^{m+n} beta^{alpha/2} ((alpha/2)_nn/(gamma)_nn) (Gamma(gamma-alpha/2)/Gamma(gamma))
//     * sqrt((gamma)_nn (gamma)_mm / (nn! mm!))
//     * 3F2(-mm, gamma-alpha/2, 1-alpha/2; gamma, 1-alpha/2-nn; 1)
// with (mm, nn) = (min, max)(m, n); the operator is symmetric, and the
// canonical ordering keeps the even-alpha truncation free of 0/0 terms.
// Requires 2*gamma > alpha (DomainError otherwise).
double matelem_x_pow(const BasisContext& ctx, double alpha, int m, int n);

// Closed form for alpha = 2 (gamma > 1):
//   (-1)^{m+n} beta (Gamma(gamma-1)/Gamma(gamma)) sqrt(mm! (gamma)_nn... )
// with the radical in its symmetric (min, max) arrangement.
double matelem_alpha2(const BasisContext& ctx, int m, int n);

// Closed form for alpha = 4 (gamma > 2), bracket gamma*(|n-m|+1) + 2*min(m,n).
double matelem_alpha4(const BasisContext& ctx, int m, int n);

// Closed form for alpha = 6 (gamma > 3), three-term bracket at (max, min).
double matelem_alpha6(const BasisContext& ctx, int m, int n);

// Full Hamiltonian H_mn = 2 beta (2n+gamma) delta_mn
//                         + lambda <m|x^-alpha|n> - A <m|x^-2|n>.
// For alpha = 2 exactly the (lambda - A) coefficient is folded into a single
// matelem_alpha2 call, avoiding the cancellation near the optimal A ~ lambda.
// Even alpha dispatches to the closed forms. For non-even alpha, entries are
// certified by evaluating BOTH index orderings of the general formula (both
// are valid there) and comparing; disagreement beyond 1e-10 relative raises
// AsymmetryError. The stored matrix is exactly symmetric.
HamiltonianMatrix build_hamiltonian(const ModelSpec& model, const BasisContext& ctx);

// Plain-text dump: one row per line, 17 significant digits.
std::string matrix_to_text(const HamiltonianMatrix& H);

// JSON dump with keys {"dim", "entries" (row-major), "ctx", "model"}.
std::string matrix_to_json(const HamiltonianMatrix& H);

} // namespace sho

#endif
