#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "fusebench/raster.hpp"

// PGM (P2/P5) and PPM (P3/P6) reading and writing. Header comments are
// accepted; binary samples wider than 8 bits are big-endian. Writers always
// emit the binary variants and quantise by rounding half away from zero and
// clamping to [0, maxval].
namespace fusebench::netpbm {

inline constexpr int kMaxMaxval = 65535;

Band decode_pgm(std::span<const std::uint8_t> bytes);
MultibandImage decode_ppm(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_pgm(const Band& band, int maxval);
std::vector<std::uint8_t> encode_ppm(const MultibandImage& img, int maxval);

Band read_pgm(const std::filesystem::path& path);
MultibandImage read_ppm(const std::filesystem::path& path);

void write_pgm(const Band& band, const std::filesystem::path& path, int maxval);
void write_ppm(const MultibandImage& img, const std::filesystem::path& path, int maxval);

// The integer a real sample becomes on disk.
std::uint32_t quantize(double sample, int maxval);

}  // namespace fusebench::netpbm
