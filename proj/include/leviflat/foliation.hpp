#ifndef LEVIFLAT_FOLIATION_HPP
#define LEVIFLAT_FOLIATION_HPP

#include <functional>
#include <utility>
#include <vector>

#include "leviflat/grid.hpp"
#include "leviflat/log_complex.hpp"

namespace leviflat {

/// One-real-parameter family of complex lines {w = b0(t) + g(t) z}.
struct LineFamilyHypersurface {
    std::function<Complex(double)> b0;
    std::function<Complex(double)> g;

    Complex leaf_point(double t, Complex z) const { return b0(t) + g(t) * z; }
};

/// The family indexed by n >= 1 with slope g_n(t) = exp(-1/t^(2n)) and
/// base point b0(t) = t; its slope extends holomorphically to the upper
/// half-plane.
struct HalfPlaneFamily {
    int n;
    explicit HalfPlaneFamily(int n_);
};

/// Boundary-value form of the family: b0(t) = t, g(t) = exp(-1/t^(2n))
/// continued by 0 at t = 0.
LineFamilyHypersurface line_family(const HalfPlaneFamily& family);

/// exp(-eta^(-2n)) in log-domain form, valid for Im eta > 0 and for real
/// nonzero eta (continuous boundary values of the upper-half-plane
/// branch).  eta = 0 is an essential singularity.
LogComplex g_n(const HalfPlaneFamily& family, Complex eta);

/// psi(zeta, eta) = (zeta, eta + g_n(eta) zeta).  Overflow of the second
/// coordinate raises log_overflow_error carrying the log magnitude.
std::pair<Complex, Complex> psi(const HalfPlaneFamily& family, Complex zeta, Complex eta);

/// The unique zeta* with psi(zeta*, eta) on the center leaf {w = 0}:
/// zeta* = -eta / g_n(eta); |zeta*| = |eta| exp(Re eta^(-2n)).
LogComplex leaf_center_intersection(const HalfPlaneFamily& family, Complex eta);

/// Membership in the region H_{n,eps} cut to {t < delta}, decided in the
/// log domain: 0 < theta < pi, t < delta, and
/// log t + cos(2n theta)/t^(2n) < log eps (strict).
bool h_membership(const HalfPlaneFamily& family, double eps, double delta,
                  double t, double theta);

/// Distinguished rays of the sector decomposition.  On alpha/beta rays
/// cos(2n theta) vanishes identically and on mu rays it equals 1; the
/// ray forms evaluate with those exact angular factors (the rounded
/// angles themselves would be amplified by t^(-2n) at small t).
enum class SectorRay { alpha, beta, mu };

bool h_membership_on_ray(const HalfPlaneFamily& family, double eps, double delta,
                         double t, SectorRay ray);

/// alpha_k = pi/(4n) + k pi/n, beta_k = 3 pi/(4n) + k pi/n,
/// mu_k = k pi/n, for k = 0..n-1.
struct SectorAngles {
    explicit SectorAngles(int n);
    std::vector<double> alphas;
    std::vector<double> betas;
    std::vector<double> mus;
};

/// Radial profile f_h(t) = t exp(h / t^(2n)) controlling which rays meet
/// the region; defined for h in [-1, 1], t > 0.
double f_h(int n, double h, double t);

/// Location of the minimum of f_h for h > 0: (2 n h)^(1/(2n)).
double critical_t(int n, double h);

/// Membership threshold (2n)^(1/(2n)) exp(1/(2n)): the mu rays miss the
/// region exactly when eps is below it.
double eps_threshold(int n);

/// Occupancy of the region over the grid; cell (i, j) holds
/// h_membership at (t_i, theta_j).  Requires the grid radii inside (0, delta).
RegionMask build_region(const HalfPlaneFamily& family, double eps, double delta,
                        const PolarGrid& grid);

/// flood_label component count of build_region's mask.
int count_components(const HalfPlaneFamily& family, double eps, double delta,
                     const PolarGrid& grid);

} // namespace leviflat

#endif
