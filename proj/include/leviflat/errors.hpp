#ifndef LEVIFLAT_ERRORS_HPP
#define LEVIFLAT_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace leviflat {

/// Evaluation was requested exactly at an excluded singular point.
class singular_point_error : public std::domain_error {
public:
    singular_point_error(std::complex<double> point, const std::string& what)
        : std::domain_error(what), point_(point) {}
    std::complex<double> point() const { return point_; }

private:
    std::complex<double> point_;
};

/// Evaluation point is within one node spacing of the integration curve.
class near_curve_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A log-domain magnitude left the range representable by double.
/// Carries the offending natural-log magnitude.
class log_overflow_error : public std::range_error {
public:
    log_overflow_error(double logmag, const std::string& what)
        : std::range_error(what), logmag_(logmag) {}
    double logmag() const { return logmag_; }

private:
    double logmag_;
};

/// Reality check on the real axis failed; names the offending axis point.
class reality_check_error : public std::domain_error {
public:
    reality_check_error(double axis_point, const std::string& what)
        : std::domain_error(what), axis_point_(axis_point) {}
    double axis_point() const { return axis_point_; }

private:
    double axis_point_;
};

} // namespace leviflat

#endif
