#ifndef LEVIFLAT_LOG_COMPLEX_HPP
#define LEVIFLAT_LOG_COMPLEX_HPP

#include <complex>

namespace leviflat {

using Complex = std::complex<double>;

/// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

/// Complex value stored as (log of modulus, argument).  Keeps quantities
/// like 2^(n^2) exact in the exponent where an ordinary double would
/// overflow.  Zero is the unique state logmag = -inf, arg = 0 and is
/// absorbing under multiplication.
class LogComplex {
public:
    /// Zero.
    LogComplex() = default;

    /// Normalizes arg into (-pi, pi]; logmag = -inf forces the zero state.
    LogComplex(double logmag, double arg);

    static LogComplex one() { return LogComplex(0.0, 0.0); }
    static LogComplex from(Complex z);

    double logmag() const { return logmag_; }
    double arg() const { return arg_; }
    bool is_zero() const;

    /// Conversion back to an ordinary complex.  Throws log_overflow_error
    /// if the modulus exceeds the double range.
    Complex to_complex() const;

    LogComplex pow(long long k) const;
    LogComplex conj() const;
    LogComplex operator-() const;

    friend LogComplex operator*(const LogComplex& a, const LogComplex& b);
    /// Log-domain sum: the smaller term is scaled into the range of the
    /// larger one, so the result stays valid far outside double range.
    friend LogComplex operator+(const LogComplex& a, const LogComplex& b);

private:
    double logmag_ = -std::numeric_limits<double>::infinity();
    double arg_ = 0.0;
};

} // namespace leviflat

#endif
