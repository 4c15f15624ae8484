#ifndef SHO_LOGSCALED_HPP
#define SHO_LOGSCALED_HPP

#include <cmath>
#include <limits>

namespace sho {

// Sign-and-log representation: value = sign * exp(log_magnitude).
// sign = 0 encodes an exact zero (log_magnitude ignored).
// Keeps Pochhammer/gamma ratios finite where (gamma)_n and n! overflow a
// double (n ~ 80 and beyond).
struct LogScaledValue {
    double log_magnitude = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static LogScaledValue zero() { return {}; }

    static LogScaledValue one() { return {0.0, +1}; }

    static LogScaledValue from_value(double v) {
        if (v == 0.0) return zero();
        return {std::log(std::fabs(v)), v > 0 ? +1 : -1};
    }

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_magnitude);
    }

    bool is_zero() const { return sign == 0; }

    LogScaledValue operator*(const LogScaledValue& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {log_magnitude + o.log_magnitude, sign * o.sign};
    }

    LogScaledValue operator/(const LogScaledValue& o) const {
        // Division by exact zero is the caller's bug; surface it as inf.
        if (sign == 0) return zero();
        return {log_magnitude - o.log_magnitude, sign * o.sign};
    }

    LogScaledValue& operator*=(const LogScaledValue& o) { return *this = *this * o; }
    LogScaledValue& operator/=(const LogScaledValue& o) { return *this = *this / o; }

    // sqrt of a non-negative value; caller guarantees sign >= 0.
    LogScaledValue sqrt() const {
        if (sign == 0) return zero();
        return {0.5 * log_magnitude, +1};
    }
};

// log|Gamma(x)| with the sign of Gamma(x), for x off the poles.
// Gamma is positive on (0,inf) and alternates sign on the negative unit
// intervals: sign = (-1)^ceil(-x) for x < 0 non-integer.
inline LogScaledValue log_gamma_signed(double x) {
    if (x > 0.0) return {std::lgamma(x), +1};
    // std::lgamma returns log|Gamma| for negative non-integer arguments.
    const double c = std::ceil(-x);
    const int sign = (static_cast<long long>(c) % 2 == 0) ? +1 : -1;
    return {std::lgamma(x), sign};
}

} // namespace sho

#endif
