#ifndef SHO_SOLVER_HPP
#define SHO_SOLVER_HPP

#include <optional>
#include <vector>

#include "sho/matrix.hpp"

namespace sho {

// Result of a diagonalization / minimization / convergence run.
// eigenvalues are ascending upper bounds E_0..E_{D-1} at the reported A.
// boundary_A flags a minimization that ran into the A_min validity boundary
// (reported, not an error). not_converged flags a converge_to_digits run that
// exhausted its D schedule.
struct SpectrumResult {
    std::vector<double> eigenvalues;
    double optimal_A = 0.0;
    int D_used = 0;
    int converged_digits = 0;
    long evaluations = 0;
    bool boundary_A = false;
    bool not_converged = false;
};

// All eigenvalues of the real symmetric matrix, ascending.
// Throws ConvergenceError if the reduction fails.
std::vector<double> eigen_symmetric(const HamiltonianMatrix& H);

// Smallest admissible A for the model: validity 2*gamma > alpha translates to
//   A > (alpha/2 - 1)^2 - w,  w = 1/4 (N = 1) or (Lambda + 1/2)^2 (N >= 2),
// clamped at 0.
double A_lower_bound(const ModelSpec& model);

// Minimizes the level-th eigenvalue of the D x D matrix over A in
// (A_lower_bound, inf): geometric bracket expansion from
// A0 = max(A_min + 1e-6, lambda^(2/alpha)), then golden-section to width
// 1e-8*(1+A). Returns the full spectrum at the minimizer.
// Throws DomainError when level >= D.
SpectrumResult minimize_over_A(const ModelSpec& model, int D, int level = 0);

// Spectrum at fixed A, or optimized for `level` when optimize_A is set.
SpectrumResult solve_spectrum(const ModelSpec& model, int D, bool optimize_A,
                              std::optional<double> fixed_A = std::nullopt,
                              int level = 0);

// Runs solve_spectrum over the increasing D schedule
// {1,2,3,5,7,10,15,20,30,40,60,80,100} (clipped to D_max) until two successive
// schedule points agree to |dE| < 0.5*10^-digits on the requested level.
// Sets not_converged if the schedule is exhausted first.
SpectrumResult converge_to_digits(const ModelSpec& model, int digits, int level = 0,
                                  int D_max = 100);

// The D schedule used by converge_to_digits (exposed for tests and the CLI).
const std::vector<int>& convergence_schedule();

} // namespace sho

#endif
