#ifndef SHO_ERRORS_HPP
#define SHO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sho {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters outside the validity region of a formula (e.g. 2*gamma <= alpha,
// or a denominator Pochhammer vanishing while the numerator is nonzero).
struct DomainError : Error {
    using Error::Error;
};

// Independently evaluated H_mn and H_nm disagree beyond tolerance.
struct AsymmetryError : Error {
    using Error::Error;
};

// Shooting: node counts at the bracket ends do not straddle the target level.
struct BracketError : Error {
    using Error::Error;
};

// Shooting: the recurrence blew up before the matching point (step too large
// or inner cutoff too deep into the singular region).
struct StiffnessError : Error {
    using Error::Error;
};

// Iterative eigenvalue reduction failed to converge.
struct ConvergenceError : Error {
    using Error::Error;
};

// Infinite-sum request where the series does not converge (gamma <= 3).
struct DivergenceError : Error {
    using Error::Error;
};

} // namespace sho

#endif
