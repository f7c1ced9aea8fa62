#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssdwt/grid.hpp"

namespace ssdwt {

// Binary PGM (P5). Header tokens may be separated by any whitespace and
// interleaved with '#' comment lines. maxval > 255 means two bytes per
// sample, big-endian.
sample_grid read_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pgm(const sample_grid& grid);

sample_grid load_pgm_file(const std::string& path);
void save_pgm_file(const std::string& path, const sample_grid& grid);

} // namespace ssdwt
