#ifndef SHO_SPECFUN_HPP
#define SHO_SPECFUN_HPP

#include <vector>

#include "sho/logscaled.hpp"

namespace sho {

// Rising factorial (a)_k = a(a+1)...(a+k-1) as a log-scaled value.
// Total function: a zero factor gives an exact zero (sign 0), e.g.
// (-3)_5 = 0 because the product crosses 0.
LogScaledValue pochhammer(double a, long k);

// Convenience: pochhammer as a plain double (may overflow for large k).
double pochhammer_value(double a, long k);

// Terminating confluent series 1F1(-n; b; z) = sum_{k=0..n} (-n)_k z^k/((b)_k k!).
// Throws DomainError when a denominator Pochhammer vanishes before the series
// terminates (b in {0,-1,...,-(n-1)}).
double hyp1f1_terminating(long n, double b, double z);

// Gauss series at unit argument, terminating numerator: 2F1(-m, b; c; 1).
// Chu-Vandermonde closed form (c-b)_m / (c)_m.
// Throws DomainError on vanishing (c)_m.
double hyp2f1_unit(long m, double b, double c);

// Terminating 3F2 at unit argument:
//   3F2(-m, a2, a3; b1, b2; 1) = sum_k (-m)_k (a2)_k (a3)_k / ((b1)_k (b2)_k k!).
// Summation stops at the first k where a numerator Pochhammer is exactly zero
// (either k = m+1, or earlier when a3 is a non-positive integer; the even
// alpha truncation). A denominator zero at an index whose running numerator is
// still nonzero is a DomainError, never a silent skip.
double hyp3f2_unit_terminating(long m, double a2, double a3, double b1, double b2);

// Same sum with roundoff bookkeeping: `peak` is the largest |term| the
// summation passed through (the leading 1 included) and `terms` the count
// actually added. terms * eps * peak bounds the cancellation error of the
// result, which is what certifies (or disqualifies) a value when two
// evaluation orders of the same quantity are compared.
struct Hyp3f2Trace {
    double value = 0.0;
    double peak = 1.0;
    long terms = 1;
};
Hyp3f2Trace hyp3f2_unit_traced(long m, double a2, double a3, double b1, double b2);

// Partial sum of a generalized pFq at unit argument: `terms` leading terms of
// sum_k prod_i (num_i)_k / (prod_j (den_j)_k k!).
// If a numerator hits an exact zero the series has terminated and the partial
// sum equals the full sum. Throws DomainError on a denominator zero within the
// requested range while the numerator is nonzero.
double hyp_pfq_partial(const std::vector<double>& numerators,
                       const std::vector<double>& denominators,
                       long terms);

// Plateau evaluation of the same series: sum until the relative term size
// drops below `rel_tol` or `max_terms` is reached.
struct PfqPlateau {
    double value = 0.0;
    long terms_used = 0;
    bool converged = false; // true iff the term-size criterion was met
};
PfqPlateau hyp_pfq_plateau(const std::vector<double>& numerators,
                           const std::vector<double>& denominators,
                           long max_terms = 1000000,
                           double rel_tol = 1e-15);

} // namespace sho

#endif
