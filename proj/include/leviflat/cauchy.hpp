#ifndef LEVIFLAT_CAUCHY_HPP
#define LEVIFLAT_CAUCHY_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leviflat/curve.hpp"
#include "leviflat/log_complex.hpp"

namespace leviflat {

/// Boundary data aligned node-for-node with a SampledCurve.
struct BoundaryFunction {
    std::vector<Complex> samples;
};

BoundaryFunction sample_boundary(const SampledCurve& curve,
                                 const std::function<Complex(Complex)>& f);

/// Cutoff applied to the density in curve-parameter units;
/// std::nullopt means the constant 1.
using Cutoff = std::optional<CutoffWindow>;

// Conventions used throughout this module: kernel 1/(zeta - z),
// counterclockwise orientation, jump F+ - F- = + chi*f.  The "+" side is
// the interior of a closed curve and the upper half-plane for a real-axis
// segment traversed left to right.

/// (1/2 pi i) integral of chi(zeta) f(zeta) / (zeta - z) d zeta by the
/// composite trapezoid rule.  Requires z farther from the curve than one
/// local node spacing (near_curve_error otherwise, pointing to
/// plemelj_boundary_values).
Complex cauchy_transform(const SampledCurve& curve, const Cutoff& chi,
                         const BoundaryFunction& f, Complex z);

/// One-sided boundary values at a curve node: computes the principal
/// value P by singularity subtraction (the smooth extension value
/// chi(z0) f(z0) is removed from the numerator, the regularized kernel is
/// integrated, and the analytic correction for the subtracted part is
/// added back), then returns F+- = P +- chi(z0) f(z0)/2.
///
/// `param` must coincide with a curve node and lie on the cutoff plateau;
/// with chi absent the curve must be closed.
std::pair<Complex, Complex> plemelj_boundary_values(const SampledCurve& curve,
                                                    const Cutoff& chi,
                                                    const BoundaryFunction& f,
                                                    double param);

struct JumpReport {
    std::vector<double> evaluation_points;
    std::vector<Complex> plus_values;
    std::vector<Complex> minus_values;
    std::vector<double> jump_residuals; // |plus - minus - chi*f| pointwise
    double max_residual = 0.0;

    void write_csv(const std::string& path) const;
};

/// Verifies the jump identity F+ - F- = chi*f numerically: the plus value
/// comes from the node-aligned subtracted rule above, the minus value
/// from an independent principal value on the half-shifted grid (the pole
/// sits mid-cell there, so no subtraction is involved).  The residual is
/// the genuine disagreement between the two quadratures.
JumpReport jump_residual(const SampledCurve& curve, const Cutoff& chi,
                         const BoundaryFunction& f, std::span<const double> points);

enum class ExtensionVerdict { inside_only, outside_only, both, neither };

std::string_view to_string(ExtensionVerdict v);

/// Decides from the Fourier coefficients of uniform unit-circle samples
/// whether the data is the boundary value of a function holomorphic
/// inside, outside (constant allowed), both, or neither.  Sample count
/// must be a power of two >= 64.
ExtensionVerdict extension_classify(const BoundaryFunction& circle_samples, double tol);

/// |contour integral of G(c) dc| over a closed loop by the trapezoid
/// rule; a near-zero value certifies holomorphy of G inside the loop at
/// quadrature accuracy.
double morera_loop_integral(const std::function<Complex(Complex)>& G,
                            const SampledCurve& loop);

} // namespace leviflat

#endif
