#pragma once

#include <filesystem>

#include "irfocus/frame.hpp"

namespace irfocus {

/// Writes a binary PGM (P5), maxval 65535, big-endian 16-bit samples.
void write_pgm(const ThermalFrame& frame, const std::filesystem::path& path);

/// Reads a binary PGM written by write_pgm. Rejects any maxval other than
/// 65535; errors name the offending header field.
ThermalFrame read_pgm(const std::filesystem::path& path);

} // namespace irfocus
