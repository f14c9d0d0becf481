#include "leviflat/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leviflat {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

void PolarGrid::validate() const
{
    if (t_values.empty() || theta_values.empty())
        throw std::invalid_argument("polar grid must be nonempty");
    if (!(t_values.front() > 0.0))
        throw std::invalid_argument("polar grid radii must be positive");
    for (std::size_t i = 0; i + 1 < t_values.size(); ++i)
        if (!(t_values[i] < t_values[i + 1]))
            throw std::invalid_argument("polar grid radii must be strictly increasing");
    if (!(theta_values.front() > 0.0) || !(theta_values.back() < kPi))
        throw std::invalid_argument("polar grid angles must lie strictly inside (0, pi)");
    for (std::size_t j = 0; j + 1 < theta_values.size(); ++j)
        if (!(theta_values[j] < theta_values[j + 1]))
            throw std::invalid_argument("polar grid angles must be strictly increasing");
}

PolarGrid make_polar_grid(std::size_t nt, std::size_t ntheta, double t_min, double t_max)
{
    if (nt == 0 || ntheta == 0)
        throw std::invalid_argument("polar grid sizes must be positive");
    if (!(0.0 < t_min) || !(t_min < t_max))
        throw std::invalid_argument("polar grid requires 0 < t_min < t_max");

    PolarGrid g;
    g.t_values.resize(nt);
    g.theta_values.resize(ntheta);
    const double lo = std::log(t_min);
    const double hi = std::log(t_max);
    for (std::size_t i = 0; i < nt; ++i)
        g.t_values[i] = std::exp(lo + (static_cast<double>(i) + 0.5) * (hi - lo) / static_cast<double>(nt));
    for (std::size_t j = 0; j < ntheta; ++j)
        g.theta_values[j] = kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(ntheta);
    g.validate();
    return g;
}

RegionMask::RegionMask(PolarGrid g)
    : grid(std::move(g)),
      occupancy(grid.nt() * grid.ntheta(), 0),
      labels(grid.nt() * grid.ntheta(), 0)
{
    grid.validate();
}

int flood_label(RegionMask& mask)
{
    const std::size_t nt = mask.grid.nt();
    const std::size_t nth = mask.grid.ntheta();
    std::fill(mask.labels.begin(), mask.labels.end(), 0);

    std::int32_t next_label = 0;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t j = 0; j < nth; ++j) {
            const std::size_t start = mask.index(i, j);
            if (!mask.occupancy[start] || mask.labels[start] != 0)
                continue;
            ++next_label;
            mask.labels[start] = next_label;
            stack.push_back(start);
            while (!stack.empty()) {
                const std::size_t cur = stack.back();
                stack.pop_back();
                const std::size_t ci = cur / nth;
                const std::size_t cj = cur % nth;
                const std::size_t nbrs[4] = {
                    (ci > 0) ? cur - nth : cur,
                    (ci + 1 < nt) ? cur + nth : cur,
                    (cj > 0) ? cur - 1 : cur,
                    (cj + 1 < nth) ? cur + 1 : cur,
                };
                for (std::size_t nb : nbrs) {
                    if (nb != cur && mask.occupancy[nb] && mask.labels[nb] == 0) {
                        mask.labels[nb] = next_label;
                        stack.push_back(nb);
                    }
                }
            }
        }
    }
    return next_label;
}

} // namespace leviflat
