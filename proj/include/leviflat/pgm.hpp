#ifndef LEVIFLAT_PGM_HPP
#define LEVIFLAT_PGM_HPP

#include <string>

#include "leviflat/grid.hpp"

namespace leviflat {

/// Binary PGM (P5), width = theta index, height = t index, row i = t_i.
/// The comment line is written verbatim after the magic number.
void write_pgm_occupancy(const RegionMask& mask, const std::string& path,
                         const std::string& comment);

/// Labels scaled to gray levels: floor(label * 255 / max_label), 0 = empty.
void write_pgm_labels(const RegionMask& mask, const std::string& path,
                      const std::string& comment);

} // namespace leviflat

#endif
