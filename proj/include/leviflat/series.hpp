#ifndef LEVIFLAT_SERIES_HPP
#define LEVIFLAT_SERIES_HPP

#include <functional>
#include <string>
#include <vector>

#include "leviflat/log_complex.hpp"

namespace leviflat {

/// Rule n -> (point -> LogComplex) with an explicit set of excluded
/// singular points.  Evaluation at a singular point throws
/// singular_point_error rather than producing a NaN.
struct CoefficientFamily {
    std::function<LogComplex(int, Complex)> rule;
    std::vector<Complex> singular_points;

    LogComplex operator()(int n, Complex w) const;
};

/// a_0(w) = w, a_n(w) = (i/(w-i))^(n^2) for n >= 1, computed as
/// n^2 log(i/(w-i)) in the log domain.  Singular at w = i.
LogComplex eval_a(int n, Complex w);

/// b_n(w) = (1/2)(a_n(w) + a_n(-w)) - (i/2)(a_n(w) - a_n(-w)), n >= 1.
/// Real-valued on the real axis.  Singular at w = i and w = -i.
LogComplex eval_b(int n, Complex w);

CoefficientFamily family_a();
CoefficientFamily family_b();

/// a_n = ratio^n; handy reference family for the radius estimator.
CoefficientFamily geometric_family(double ratio);

/// Tail-window root estimate of the radius of convergence:
/// 1 / max_{ceil(N/2) <= n <= N} |a_n(w)|^(1/n), in the log domain.
/// Returns +infinity when every sampled coefficient is zero.
double radius_estimate(const CoefficientFamily& family, Complex w, int N);

/// Sup norms of coefficient extensions: k strictly increasing, both norms
/// positive and finite.
struct NormTable {
    struct Entry {
        int k;
        double norm_gamma;
        double norm_w;
    };
    std::vector<Entry> entries;

    void validate() const;
    void write_csv(const std::string& path) const;
    static NormTable read_csv(const std::string& path);
};

enum class GrowthTrend { bounded, diverging };

struct GrowthFit {
    double c_estimate;
    GrowthTrend trend;
};

/// C_estimate = max_k (norm_W/norm_gamma)^(1/k); the trend is diverging
/// when the per-k ratio grows by more than a factor 2 from the first to
/// the last k.
GrowthFit growth_fit(const NormTable& table);

/// conj(f(conj z)) for Im z < 0, after checking that f is real on the
/// real axis at Re z (|Im f(Re z)| <= tol, else reality_check_error).
Complex schwarz_reflect(const std::function<Complex(Complex)>& f, Complex z,
                        double tol = 1e-8);

} // namespace leviflat

#endif
