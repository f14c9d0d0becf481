#ifndef LEVIFLAT_GRID_HPP
#define LEVIFLAT_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace leviflat {

/// Polar sampling grid: log-spaced radii t in (0, delta], uniform angles
/// theta in the open interval (0, pi).
struct PolarGrid {
    std::vector<double> t_values;
    std::vector<double> theta_values;

    std::size_t nt() const { return t_values.size(); }
    std::size_t ntheta() const { return theta_values.size(); }

    void validate() const;
};

/// Cell-centered grid: nt log-spaced t values strictly inside
/// (t_min, t_max), ntheta angles strictly inside (0, pi) with half-cell
/// insets at both ends.
PolarGrid make_polar_grid(std::size_t nt, std::size_t ntheta, double t_min, double t_max);

/// Boolean occupancy over a PolarGrid with component labels.
/// Row-major storage: row = t index, column = theta index.
struct RegionMask {
    PolarGrid grid;
    std::vector<std::uint8_t> occupancy;
    std::vector<std::int32_t> labels;

    explicit RegionMask(PolarGrid g);

    std::size_t index(std::size_t i, std::size_t j) const { return i * grid.ntheta() + j; }
    bool occupied(std::size_t i, std::size_t j) const { return occupancy[index(i, j)] != 0; }
    std::int32_t label(std::size_t i, std::size_t j) const { return labels[index(i, j)]; }
};

/// Labels the 4-connected components of the occupancy (no wrap-around in
/// either index), numbering them by first occurrence in row-major scan
/// order.  Returns the component count.
int flood_label(RegionMask& mask);

} // namespace leviflat

#endif
