#include "leviflat/curve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace leviflat {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

double SampledCurve::spacing() const
{
    if (params.size() < 2)
        throw std::invalid_argument("curve needs at least two nodes");
    const double h = params[1] - params[0];
    for (std::size_t j = 1; j + 1 < params.size(); ++j) {
        if (std::abs(params[j + 1] - params[j] - h) > 1e-9 * std::abs(h))
            throw std::invalid_argument("curve parameter grid is not uniform");
    }
    return h;
}

std::vector<double> SampledCurve::trapezoid_weights() const
{
    const std::size_t n = params.size();
    std::vector<double> w(n);
    if (closed) {
        // cyclic rule: params wrap with the stored period
        for (std::size_t j = 0; j < n; ++j) {
            const double next = (j + 1 < n) ? params[j + 1] : params[0] + period;
            const double prev = (j > 0) ? params[j - 1] : params[n - 1] - period;
            w[j] = 0.5 * (next - prev);
        }
    } else {
        w[0] = 0.5 * (params[1] - params[0]);
        for (std::size_t j = 1; j + 1 < n; ++j)
            w[j] = 0.5 * (params[j + 1] - params[j - 1]);
        w[n - 1] = 0.5 * (params[n - 1] - params[n - 2]);
    }
    return w;
}

std::size_t SampledCurve::node_index_at(double param) const
{
    const double scale = std::max(1.0, std::abs(params.back()));
    for (std::size_t j = 0; j < params.size(); ++j) {
        if (std::abs(params[j] - param) <= 1e-9 * scale)
            return j;
    }
    throw std::invalid_argument("parameter " + std::to_string(param)
        + " does not coincide with a curve node");
}

void SampledCurve::validate() const
{
    if (nodes.size() != params.size() || nodes.size() != tangents.size())
        throw std::invalid_argument("curve node/param/tangent lengths differ");
    if (nodes.size() < 2)
        throw std::invalid_argument("curve needs at least two nodes");
    for (std::size_t j = 0; j + 1 < params.size(); ++j) {
        if (!(params[j] < params[j + 1]))
            throw std::invalid_argument("curve parameters must be strictly increasing");
        if (nodes[j] == nodes[j + 1])
            throw std::invalid_argument("curve nodes must be pairwise distinct");
    }
    if (closed) {
        if (period <= params.back() - params.front())
            throw std::invalid_argument("closed curve period must exceed the parameter span");
        if (nodes.front() == nodes.back())
            throw std::invalid_argument("closed curve must not repeat its first node");
    }
    for (const Complex& z : nodes) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("curve nodes must be finite");
    }
}

SampledCurve make_circle(double radius, int node_count)
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("circle radius must be positive and finite");
    if (node_count < 8)
        throw std::invalid_argument("circle needs at least 8 nodes");

    SampledCurve c;
    c.closed = true;
    c.period = 2.0 * kPi;
    c.orientation = Orientation::counterclockwise;
    c.nodes.resize(node_count);
    c.tangents.resize(node_count);
    c.params.resize(node_count);
    for (int j = 0; j < node_count; ++j) {
        const double theta = 2.0 * kPi * j / node_count;
        const Complex e = std::polar(1.0, theta);
        c.params[j] = theta;
        c.nodes[j] = radius * e;
        c.tangents[j] = Complex(0.0, 1.0) * radius * e;
    }
    c.validate();
    return c;
}

SampledCurve make_segment(double a, double b, int node_count)
{
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("segment requires finite a < b");
    if (node_count < 8)
        throw std::invalid_argument("segment needs at least 8 nodes");

    SampledCurve c;
    c.closed = false;
    c.orientation = Orientation::as_parameterized;
    c.nodes.resize(node_count);
    c.tangents.resize(node_count);
    c.params.resize(node_count);
    const double h = (b - a) / (node_count - 1);
    for (int j = 0; j < node_count; ++j) {
        const double x = a + h * j;
        c.params[j] = x;
        c.nodes[j] = Complex(x, 0.0);
        c.tangents[j] = Complex(1.0, 0.0);
    }
    c.params.back() = b; // exact endpoint
    c.nodes.back() = Complex(b, 0.0);
    c.validate();
    return c;
}

namespace {

// exp(-1/u) for u > 0, 0 otherwise; the standard C-infinity bump factor.
double bump_edge(double u)
{
    return (u > 0.0) ? std::exp(-1.0 / u) : 0.0;
}

} // namespace

CutoffWindow::CutoffWindow(double center, double inner_radius, double outer_radius)
    : center_(center), inner_(inner_radius), outer_(outer_radius)
{
    if (!(0.0 < inner_radius) || !(inner_radius < outer_radius))
        throw std::invalid_argument("cutoff needs 0 < inner_radius < outer_radius");
}

double CutoffWindow::operator()(double x) const
{
    const double d = std::abs(x - center_);
    if (d <= inner_)
        return 1.0;
    if (d >= outer_)
        return 0.0;
    const double u = (outer_ - d) / (outer_ - inner_); // 1 at the plateau edge, 0 outside
    const double e1 = bump_edge(u);
    const double e2 = bump_edge(1.0 - u);
    return e1 / (e1 + e2);
}

bool CutoffWindow::on_plateau(double x) const
{
    return std::abs(x - center_) <= inner_;
}

} // namespace leviflat
