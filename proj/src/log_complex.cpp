#include "leviflat/log_complex.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "leviflat/errors.hpp"

namespace leviflat {

namespace {
constexpr double kPi = std::numbers::pi;
const double kMaxLog = std::log(std::numeric_limits<double>::max());
} // namespace

double wrap_angle(double a)
{
    double r = std::remainder(a, 2.0 * kPi); // lands in [-pi, pi]
    if (r <= -kPi)
        r += 2.0 * kPi;
    return r;
}

LogComplex::LogComplex(double logmag, double arg)
{
    if (std::isinf(logmag) && logmag < 0) {
        // canonical zero
        logmag_ = logmag;
        arg_ = 0.0;
    } else {
        logmag_ = logmag;
        arg_ = wrap_angle(arg);
    }
}

LogComplex LogComplex::from(Complex z)
{
    if (z == Complex(0.0, 0.0))
        return LogComplex();
    return LogComplex(std::log(std::abs(z)), std::arg(z));
}

bool LogComplex::is_zero() const
{
    return std::isinf(logmag_) && logmag_ < 0;
}

Complex LogComplex::to_complex() const
{
    if (is_zero())
        return Complex(0.0, 0.0);
    if (logmag_ > kMaxLog)
        throw log_overflow_error(logmag_,
            "LogComplex modulus exceeds double range (logmag = " + std::to_string(logmag_) + ")");
    return std::polar(std::exp(logmag_), arg_);
}

LogComplex LogComplex::pow(long long k) const
{
    if (is_zero())
        return LogComplex();
    return LogComplex(logmag_ * static_cast<double>(k), arg_ * static_cast<double>(k));
}

LogComplex LogComplex::conj() const
{
    if (is_zero())
        return LogComplex();
    return LogComplex(logmag_, -arg_);
}

LogComplex LogComplex::operator-() const
{
    if (is_zero())
        return LogComplex();
    return LogComplex(logmag_, arg_ + kPi);
}

LogComplex operator*(const LogComplex& a, const LogComplex& b)
{
    if (a.is_zero() || b.is_zero())
        return LogComplex();
    return LogComplex(a.logmag_ + b.logmag_, a.arg_ + b.arg_);
}

LogComplex operator+(const LogComplex& a, const LogComplex& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const LogComplex& hi = (a.logmag_ >= b.logmag_) ? a : b;
    const LogComplex& lo = (a.logmag_ >= b.logmag_) ? b : a;
    // |lo/hi| <= 1, so the ratio is representable as an ordinary complex.
    Complex ratio = std::polar(std::exp(lo.logmag_ - hi.logmag_), lo.arg_ - hi.arg_);
    Complex s = 1.0 + ratio;
    if (s == Complex(0.0, 0.0))
        return LogComplex();
    return hi * LogComplex::from(s);
}

} // namespace leviflat
