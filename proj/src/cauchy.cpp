#include "leviflat/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "leviflat/csv.hpp"
#include "leviflat/errors.hpp"
#include "leviflat/fourier.hpp"

namespace leviflat {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);

struct KahanComplex {
    Complex sum{0.0, 0.0};
    Complex carry{0.0, 0.0};
    void add(Complex x)
    {
        const Complex y = x - carry;
        const Complex t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double chi_value(const Cutoff& chi, double param)
{
    return chi ? (*chi)(param) : 1.0;
}

void check_alignment(const SampledCurve& curve, const BoundaryFunction& f)
{
    if (f.samples.size() != curve.size())
        throw std::invalid_argument("boundary function length differs from the curve");
    for (const Complex& v : f.samples) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("boundary function samples must be finite");
    }
}

std::vector<Complex> density(const SampledCurve& curve, const Cutoff& chi,
                             const BoundaryFunction& f)
{
    std::vector<Complex> g(curve.size());
    for (std::size_t j = 0; j < curve.size(); ++j)
        g[j] = chi_value(chi, curve.params[j]) * f.samples[j];
    return g;
}

// Fourth-order central difference of g with respect to the parameter.
Complex fd4_derivative(const std::vector<Complex>& g, const SampledCurve& curve,
                       std::size_t k, double h)
{
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.size());
    if (!curve.closed && (k < 2 || static_cast<std::ptrdiff_t>(k) + 2 >= n))
        throw std::domain_error("evaluation point too close to the curve endpoints");
    auto at = [&](std::ptrdiff_t off) -> Complex {
        std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(k) + off;
        if (curve.closed)
            idx = (idx % n + n) % n;
        return g[static_cast<std::size_t>(idx)];
    };
    return (at(-2) - 8.0 * at(-1) + 8.0 * at(+1) - at(+2)) / (12.0 * h);
}

// Node-aligned principal value with singularity subtraction: the
// regularized integrand has a removable singularity at the node, whose
// limit is the parameter derivative of the density.
Complex pv_subtracted(const SampledCurve& curve, const Cutoff& chi,
                      const BoundaryFunction& f, std::size_t k)
{
    const double h = curve.spacing();
    const std::vector<Complex> g = density(curve, chi, f);
    const std::vector<double> w = curve.trapezoid_weights();
    const Complex z0 = curve.nodes[k];
    const Complex g0 = g[k];

    KahanComplex acc;
    for (std::size_t j = 0; j < curve.size(); ++j) {
        if (j == k)
            continue;
        acc.add(w[j] * (g[j] - g0) * curve.tangents[j] / (curve.nodes[j] - z0));
    }
    acc.add(w[k] * fd4_derivative(g, curve, k, h));

    Complex p = acc.sum / kTwoPiI;
    if (curve.closed) {
        // PV of the plain kernel over a smooth closed curve is pi*i
        p += 0.5 * g0;
    } else {
        const Complex a = curve.nodes.front();
        const Complex b = curve.nodes.back();
        p += g0 * std::log((b - z0) / (z0 - a)) / kTwoPiI;
    }
    return p;
}

// Six-point Lagrange interpolation of samples at half-integer positions;
// used to move open-arc boundary data onto cell midpoints.
std::vector<Complex> lagrange_midpoints(const std::vector<Complex>& v)
{
    const std::size_t n = v.size();
    std::vector<Complex> out(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::size_t s = (j >= 2) ? j - 2 : 0;
        s = std::min(s, n - 6);
        const double x = static_cast<double>(j) + 0.5;
        Complex sum(0.0, 0.0);
        for (std::size_t m = 0; m < 6; ++m) {
            double weight = 1.0;
            const double xm = static_cast<double>(s + m);
            for (std::size_t q = 0; q < 6; ++q) {
                if (q == m)
                    continue;
                const double xq = static_cast<double>(s + q);
                weight *= (x - xq) / (xm - xq);
            }
            sum += weight * v[s + m];
        }
        out[j] = sum;
    }
    return out;
}

// Quadrature data on the half-shifted grid: every original node falls
// exactly mid-cell, so the raw kernel can be summed without subtraction.
struct HalfGridPv {
    std::vector<Complex> nodes;
    std::vector<Complex> numerators; // weight * density * tangent
};

HalfGridPv build_half_grid(const SampledCurve& curve, const Cutoff& chi,
                           const BoundaryFunction& f)
{
    const double h = curve.spacing();
    HalfGridPv hg;
    if (curve.closed) {
        hg.nodes = resample_half_step(curve.nodes);
        const std::vector<Complex> tang = resample_half_step(curve.tangents);
        const std::vector<Complex> fs = resample_half_step(f.samples);
        hg.numerators.resize(curve.size());
        for (std::size_t j = 0; j < curve.size(); ++j) {
            const double p = curve.params[j] + 0.5 * h;
            hg.numerators[j] = h * chi_value(chi, p) * fs[j] * tang[j];
        }
    } else {
        // composite midpoint over the N-1 cells
        const std::vector<Complex> fs = lagrange_midpoints(f.samples);
        hg.nodes.resize(curve.size() - 1);
        hg.numerators.resize(curve.size() - 1);
        for (std::size_t j = 0; j + 1 < curve.size(); ++j) {
            hg.nodes[j] = 0.5 * (curve.nodes[j] + curve.nodes[j + 1]);
            const Complex tang = 0.5 * (curve.tangents[j] + curve.tangents[j + 1]);
            const double p = curve.params[j] + 0.5 * h;
            hg.numerators[j] = h * chi_value(chi, p) * fs[j] * tang;
        }
    }
    return hg;
}

Complex pv_half_grid(const HalfGridPv& hg, Complex z0)
{
    KahanComplex acc;
    for (std::size_t j = 0; j < hg.nodes.size(); ++j)
        acc.add(hg.numerators[j] / (hg.nodes[j] - z0));
    return acc.sum / kTwoPiI;
}

void check_plemelj_preconditions(const SampledCurve& curve, const Cutoff& chi,
                                 double param)
{
    if (!chi && !curve.closed)
        throw std::domain_error(
            "open-curve boundary values require a cutoff window (chi == 1 is only valid on closed curves)");
    if (chi && !chi->on_plateau(param))
        throw std::domain_error(
            "jump formula is only accurate on the cutoff plateau; param is outside it");
}

} // namespace

BoundaryFunction sample_boundary(const SampledCurve& curve,
                                 const std::function<Complex(Complex)>& f)
{
    BoundaryFunction b;
    b.samples.resize(curve.size());
    for (std::size_t j = 0; j < curve.size(); ++j)
        b.samples[j] = f(curve.nodes[j]);
    return b;
}

Complex cauchy_transform(const SampledCurve& curve, const Cutoff& chi,
                         const BoundaryFunction& f, Complex z)
{
    check_alignment(curve, f);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("evaluation point must be finite");

    std::size_t jmin = 0;
    double dmin = std::abs(curve.nodes[0] - z);
    for (std::size_t j = 1; j < curve.size(); ++j) {
        const double d = std::abs(curve.nodes[j] - z);
        if (d < dmin) {
            dmin = d;
            jmin = j;
        }
    }
    const std::size_t jnext = (jmin + 1 < curve.size()) ? jmin + 1 : (curve.closed ? 0 : jmin - 1);
    const double local_spacing = std::abs(curve.nodes[jnext] - curve.nodes[jmin]);
    if (dmin <= local_spacing)
        throw near_curve_error(
            "evaluation point is within one node spacing of the curve; "
            "use plemelj_boundary_values for on-curve values");

    const std::vector<double> w = curve.trapezoid_weights();
    KahanComplex acc;
    for (std::size_t j = 0; j < curve.size(); ++j) {
        const Complex gj = chi_value(chi, curve.params[j]) * f.samples[j];
        acc.add(w[j] * gj * curve.tangents[j] / (curve.nodes[j] - z));
    }
    return acc.sum / kTwoPiI;
}

std::pair<Complex, Complex> plemelj_boundary_values(const SampledCurve& curve,
                                                    const Cutoff& chi,
                                                    const BoundaryFunction& f,
                                                    double param)
{
    check_alignment(curve, f);
    check_plemelj_preconditions(curve, chi, param);
    const std::size_t k = curve.node_index_at(param);
    const Complex g0 = chi_value(chi, curve.params[k]) * f.samples[k];
    const Complex p = pv_subtracted(curve, chi, f, k);
    return {p + 0.5 * g0, p - 0.5 * g0};
}

void JumpReport::write_csv(const std::string& path) const
{
    CsvWriter out(path);
    out.row({"param", "re_plus", "im_plus", "re_minus", "im_minus", "residual"});
    for (std::size_t i = 0; i < evaluation_points.size(); ++i) {
        out.row({CsvWriter::cell(evaluation_points[i]),
                 CsvWriter::cell(plus_values[i].real()), CsvWriter::cell(plus_values[i].imag()),
                 CsvWriter::cell(minus_values[i].real()), CsvWriter::cell(minus_values[i].imag()),
                 CsvWriter::cell(jump_residuals[i])});
    }
}

JumpReport jump_residual(const SampledCurve& curve, const Cutoff& chi,
                         const BoundaryFunction& f, std::span<const double> points)
{
    check_alignment(curve, f);
    if (curve.closed && !is_power_of_two(curve.size()))
        throw std::invalid_argument(
            "closed-curve jump residuals need a power-of-two node count");

    const HalfGridPv hg = build_half_grid(curve, chi, f);

    JumpReport report;
    for (const double p : points) {
        const auto [plus, minus_aligned] = plemelj_boundary_values(curve, chi, f, p);
        (void)minus_aligned;
        const std::size_t k = curve.node_index_at(p);
        const Complex g0 = chi_value(chi, curve.params[k]) * f.samples[k];
        const Complex minus = pv_half_grid(hg, curve.nodes[k]) - 0.5 * g0;
        const double residual = std::abs(plus - minus - g0);
        report.evaluation_points.push_back(p);
        report.plus_values.push_back(plus);
        report.minus_values.push_back(minus);
        report.jump_residuals.push_back(residual);
        report.max_residual = std::max(report.max_residual, residual);
    }
    return report;
}

std::string_view to_string(ExtensionVerdict v)
{
    switch (v) {
    case ExtensionVerdict::inside_only: return "inside_only";
    case ExtensionVerdict::outside_only: return "outside_only";
    case ExtensionVerdict::both: return "both";
    case ExtensionVerdict::neither: return "neither";
    }
    return "neither";
}

ExtensionVerdict extension_classify(const BoundaryFunction& circle_samples, double tol)
{
    const std::size_t n = circle_samples.samples.size();
    if (n < 64 || !is_power_of_two(n))
        throw std::invalid_argument("classifier needs a power-of-two sample count >= 64");
    if (!(tol > 0.0))
        throw std::invalid_argument("classifier tolerance must be positive");

    const std::vector<Complex> c = fourier_coefficients(circle_samples.samples);
    double max_all = 0.0;
    for (const Complex& x : c)
        max_all = std::max(max_all, std::abs(x));
    if (max_all == 0.0)
        return ExtensionVerdict::both; // constant zero

    double max_neg = 0.0; // frequencies k < 0 live at indices m >= N/2
    double max_pos = 0.0; // frequencies k > 0 live at indices 1..N/2-1
    for (std::size_t m = 1; m < n; ++m) {
        const double mag = std::abs(c[m]);
        if (m < n / 2)
            max_pos = std::max(max_pos, mag);
        else
            max_neg = std::max(max_neg, mag);
    }
    const bool inside_ok = max_neg <= tol * max_all;
    const bool outside_ok = max_pos <= tol * max_all;
    if (inside_ok && outside_ok)
        return ExtensionVerdict::both;
    if (inside_ok)
        return ExtensionVerdict::inside_only;
    if (outside_ok)
        return ExtensionVerdict::outside_only;
    return ExtensionVerdict::neither;
}

double morera_loop_integral(const std::function<Complex(Complex)>& G,
                            const SampledCurve& loop)
{
    if (!loop.closed)
        throw std::invalid_argument("morera loop must be a closed curve");
    const std::vector<double> w = loop.trapezoid_weights();
    KahanComplex acc;
    for (std::size_t j = 0; j < loop.size(); ++j) {
        const Complex v = G(loop.nodes[j]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error("loop integrand is not finite at a loop node");
        acc.add(w[j] * v * loop.tangents[j]);
    }
    return std::abs(acc.sum);
}

} // namespace leviflat
