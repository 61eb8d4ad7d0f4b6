#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irfocus/errors.hpp"

namespace irfocus {

/// A single radiometric image: row-major 16-bit counts, (x, y) = (column,
/// row) with the origin at the top-left corner. Immutable after construction;
/// safe to share across threads.
class ThermalFrame {
public:
    ThermalFrame(int width, int height, std::vector<std::uint16_t> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    /// Bounds-checked pixel access.
    std::uint16_t at(int x, int y) const;

    const std::vector<std::uint16_t>& pixels() const noexcept { return pixels_; }

    bool operator==(const ThermalFrame&) const = default;

private:
    int width_;
    int height_;
    std::vector<std::uint16_t> pixels_;
};

struct StackMetadata {
    double ambient_c = 0.0;
    double object_temp_c = 0.0;
    std::string label;
};

/// An ordered focus sweep: one frame per lens ring position, positions in
/// millimeters and strictly increasing, all frames the same size.
class FocusStack {
public:
    FocusStack(std::vector<ThermalFrame> frames, std::vector<double> positions_mm,
               StackMetadata metadata);

    const std::vector<ThermalFrame>& frames() const noexcept { return frames_; }
    const std::vector<double>& positions_mm() const noexcept { return positions_mm_; }
    const StackMetadata& metadata() const noexcept { return metadata_; }
    std::size_t size() const noexcept { return frames_.size(); }

private:
    std::vector<ThermalFrame> frames_;
    std::vector<double> positions_mm_;
    StackMetadata metadata_;
};

/// Builds a frame from plain integers, rejecting values outside [0, 65535].
ThermalFrame frame_from_values(int width, int height, const std::vector<int>& values);

/// Linear remap so the darkest pixel reads 0 and the brightest 65535,
/// rounding half-up. A constant frame maps to all zeros, which keeps the
/// focus measure of a featureless frame at exactly 0.
ThermalFrame normalize_frame(const ThermalFrame& frame);

} // namespace irfocus
