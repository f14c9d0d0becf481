#include "leviflat/pgm.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace leviflat {

namespace {

void write_pgm(const RegionMask& mask, const std::string& path,
               const std::string& comment, const std::vector<std::uint8_t>& pixels)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << "P5\n# " << comment << "\n"
        << mask.grid.ntheta() << " " << mask.grid.nt() << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
}

} // namespace

void write_pgm_occupancy(const RegionMask& mask, const std::string& path,
                         const std::string& comment)
{
    std::vector<std::uint8_t> pixels(mask.occupancy.size());
    std::transform(mask.occupancy.begin(), mask.occupancy.end(), pixels.begin(),
                   [](std::uint8_t o) { return o ? std::uint8_t(255) : std::uint8_t(0); });
    write_pgm(mask, path, comment, pixels);
}

void write_pgm_labels(const RegionMask& mask, const std::string& path,
                      const std::string& comment)
{
    const std::int32_t max_label =
        mask.labels.empty() ? 0 : *std::max_element(mask.labels.begin(), mask.labels.end());
    std::vector<std::uint8_t> pixels(mask.labels.size(), 0);
    if (max_label > 0) {
        for (std::size_t k = 0; k < mask.labels.size(); ++k)
            pixels[k] = static_cast<std::uint8_t>(mask.labels[k] * 255 / max_label);
    }
    write_pgm(mask, path, comment, pixels);
}

} // namespace leviflat
