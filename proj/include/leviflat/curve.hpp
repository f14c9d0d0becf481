#ifndef LEVIFLAT_CURVE_HPP
#define LEVIFLAT_CURVE_HPP

#include <cstddef>
#include <vector>

#include "leviflat/log_complex.hpp"

namespace leviflat {

enum class Orientation { counterclockwise, as_parameterized };

/// Oriented plane curve sampled at strictly increasing parameter values.
/// Tangents are the exact derivative of the parameterization at each node;
/// they make the composite trapezoid rule spectrally accurate on smooth
/// closed curves.
struct SampledCurve {
    std::vector<Complex> nodes;
    std::vector<Complex> tangents;
    std::vector<double> params;
    bool closed = false;
    double period = 0.0; // parameter period, closed curves only
    Orientation orientation = Orientation::as_parameterized;

    std::size_t size() const { return nodes.size(); }

    /// Uniform parameter step.  Throws if the sampling is not uniform;
    /// the factories below always produce uniform grids.
    double spacing() const;

    /// Trapezoid quadrature weights over the parameter (cyclic when closed).
    std::vector<double> trapezoid_weights() const;

    /// Index of the node whose parameter equals `param` (within a small
    /// relative tolerance).  Throws std::invalid_argument otherwise.
    std::size_t node_index_at(double param) const;

    /// Checks node/param/tangent alignment and ordering invariants.
    void validate() const;
};

/// Circle of given radius about the origin, counterclockwise, node j at
/// parameter theta_j = 2*pi*j/node_count.  Rejects node_count < 8.
SampledCurve make_circle(double radius, int node_count);

/// Straight segment [a, b] on the real axis with node_count equispaced
/// nodes including both endpoints.  Rejects node_count < 8 or a >= b.
SampledCurve make_segment(double a, double b, int node_count);

/// Smooth cutoff in curve-parameter units: exactly 1 on
/// [center - inner, center + inner], exactly 0 outside
/// [center - outer, center + outer], exp-based bump transition between.
class CutoffWindow {
public:
    CutoffWindow(double center, double inner_radius, double outer_radius);

    double operator()(double x) const;
    bool on_plateau(double x) const;

    double center() const { return center_; }
    double inner_radius() const { return inner_; }
    double outer_radius() const { return outer_; }

private:
    double center_;
    double inner_;
    double outer_;
};

} // namespace leviflat

#endif
