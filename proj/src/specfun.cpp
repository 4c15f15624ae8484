#include "sho/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "sho/errors.hpp"

namespace sho {

namespace {

// a + j == 0 for some integer j in [0, k)?
bool pochhammer_has_zero_factor(double a, long k) {
    if (k <= 0) return false;
    if (a != std::floor(a)) return false;
    return a <= 0.0 && a > -static_cast<double>(k);
}

} // namespace

LogScaledValue pochhammer(double a, long k) {
    if (k == 0) return LogScaledValue::one();
    if (pochhammer_has_zero_factor(a, k)) return LogScaledValue::zero();
    if (a > 0.0) {
        // Gamma(a+k)/Gamma(a), both arguments positive.
        return LogScaledValue{std::lgamma(a + k) - std::lgamma(a), +1};
    }
    // Negative or zero base with no zero crossing: accumulate the k factors
    // directly with sign tracking. Only small k reaches this branch in
    // practice (series numerators), so O(k) is fine.
    double log_mag = 0.0;
    int sign = +1;
    for (long j = 0; j < k; ++j) {
        const double f = a + static_cast<double>(j);
        log_mag += std::log(std::fabs(f));
        if (f < 0.0) sign = -sign;
    }
    return {log_mag, sign};
}

double pochhammer_value(double a, long k) {
    return pochhammer(a, k).value();
}

double hyp1f1_terminating(long n, double b, double z) {
    double sum = 1.0;
    double term = 1.0;
    for (long k = 0; k < n; ++k) {
        const double numer = (-static_cast<double>(n) + k) * z;
        if (numer == 0.0) return sum; // (-n)_k hit zero: series terminated
        const double denom = (b + k) * (k + 1);
        if (b + k == 0.0) {
            std::ostringstream msg;
            msg << "1F1(-" << n << ";" << b << ";z): denominator (b)_k vanishes at k="
                << (k + 1);
            throw DomainError(msg.str());
        }
        term *= numer / denom;
        sum += term;
    }
    return sum;
}

double hyp2f1_unit(long m, double b, double c) {
    if (pochhammer_has_zero_factor(c, m)) {
        std::ostringstream msg;
        msg << "2F1(-" << m << "," << b << ";" << c << ";1): (c)_m vanishes";
        throw DomainError(msg.str());
    }
    const LogScaledValue ratio = pochhammer(c - b, m) / pochhammer(c, m);
    return ratio.value();
}

double hyp3f2_unit_terminating(long m, double a2, double a3, double b1, double b2) {
    return hyp3f2_unit_traced(m, a2, a3, b1, b2).value;
}

Hyp3f2Trace hyp3f2_unit_traced(long m, double a2, double a3, double b1, double b2) {
    Hyp3f2Trace out;
    out.value = 1.0;
    double term = 1.0;
    // (-m)_k guarantees termination at k = m+1; a3 being a non-positive
    // integer truncates earlier (the even-alpha case). Numerator zeros are
    // checked before denominators so that a 0-term after termination never
    // turns into a spurious 0/0.
    for (long k = 0; k <= m; ++k) {
        const double f1 = -static_cast<double>(m) + k;
        const double f2 = a2 + k;
        const double f3 = a3 + k;
        const double numer = f1 * f2 * f3;
        if (numer == 0.0) return out;
        const double g1 = b1 + k;
        const double g2 = b2 + k;
        if (g1 == 0.0 || g2 == 0.0) {
            std::ostringstream msg;
            msg << "3F2(-" << m << "," << a2 << "," << a3 << ";" << b1 << "," << b2
                << ";1): denominator vanishes at k=" << (k + 1)
                << " with nonzero numerator";
            throw DomainError(msg.str());
        }
        term *= numer / (g1 * g2 * (k + 1));
        out.value += term;
        out.peak = std::max(out.peak, std::fabs(term));
        ++out.terms;
    }
    return out;
}

namespace {

// Shared forward recurrence for pFq partial sums, Kahan-compensated.
// `flat` reports that the series either terminated exactly (numerator zero)
// or met the relative-term stopping rule.
double pfq_partial_sum(const std::vector<double>& num, const std::vector<double>& den,
                       long terms, double rel_tol, bool use_rel_stop,
                       long* terms_used, bool* plateaued) {
    double sum = 1.0;
    double comp = 0.0; // Kahan compensation
    double term = 1.0;
    long added = 1;    // terms included so far (the leading 1)
    bool flat = false;
    for (long k = 0; added < terms; ++k) {
        double numer = 1.0;
        for (double a : num) numer *= a + k;
        if (numer == 0.0) {
            // Terminating numerator: the partial sum equals the full sum.
            flat = true;
            break;
        }
        double denom = k + 1.0;
        for (double b : den) {
            if (b + k == 0.0) {
                std::ostringstream msg;
                msg << "pFq: denominator parameter " << b << " vanishes at term "
                    << (k + 1) << " with nonzero numerator";
                throw DomainError(msg.str());
            }
            denom *= b + k;
        }
        term *= numer / denom;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        ++added;
        if (use_rel_stop && std::fabs(term) < rel_tol * std::fabs(sum)) {
            flat = true;
            break;
        }
    }
    if (terms_used) *terms_used = added;
    if (plateaued) *plateaued = flat;
    return sum;
}

} // namespace

double hyp_pfq_partial(const std::vector<double>& numerators,
                       const std::vector<double>& denominators, long terms) {
    if (terms < 1) throw DomainError("pFq partial sum needs at least one term");
    return pfq_partial_sum(numerators, denominators, terms, 0.0, false, nullptr,
                           nullptr);
}

PfqPlateau hyp_pfq_plateau(const std::vector<double>& numerators,
                           const std::vector<double>& denominators, long max_terms,
                           double rel_tol) {
    PfqPlateau r;
    r.value = pfq_partial_sum(numerators, denominators, max_terms, rel_tol, true,
                              &r.terms_used, &r.converged);
    return r;
}

} // namespace sho
