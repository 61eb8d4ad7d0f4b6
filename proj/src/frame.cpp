#include "irfocus/frame.hpp"

#include <algorithm>
#include <cmath>

namespace irfocus {

ThermalFrame::ThermalFrame(int width, int height, std::vector<std::uint16_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width_ <= 0 || height_ <= 0) {
        throw SizeError("frame dimensions must be positive, got " + std::to_string(width_) +
                        "x" + std::to_string(height_));
    }
    const std::size_t expected = static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
    if (pixels_.size() != expected) {
        throw SizeError("pixel count " + std::to_string(pixels_.size()) + " does not match " +
                        std::to_string(width_) + "x" + std::to_string(height_));
    }
}

std::uint16_t ThermalFrame::at(int x, int y) const {
    if (x < 0 || x >= width_ || y < 0 || y >= height_) {
        throw BoundsError("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") outside " + std::to_string(width_) + "x" + std::to_string(height_));
    }
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
}

FocusStack::FocusStack(std::vector<ThermalFrame> frames, std::vector<double> positions_mm,
                       StackMetadata metadata)
    : frames_(std::move(frames)), positions_mm_(std::move(positions_mm)),
      metadata_(std::move(metadata)) {
    if (frames_.empty()) {
        throw EmptyError("focus stack needs at least one frame");
    }
    if (frames_.size() != positions_mm_.size()) {
        throw SizeError("stack has " + std::to_string(frames_.size()) + " frames but " +
                        std::to_string(positions_mm_.size()) + " positions");
    }
    for (std::size_t i = 1; i < positions_mm_.size(); ++i) {
        if (!(positions_mm_[i] > positions_mm_[i - 1])) {
            throw RangeError("stack positions must be strictly increasing");
        }
    }
    for (const ThermalFrame& f : frames_) {
        if (f.width() != frames_.front().width() || f.height() != frames_.front().height()) {
            throw SizeError("all frames in a stack must share dimensions");
        }
    }
}

ThermalFrame frame_from_values(int width, int height, const std::vector<int>& values) {
    if (width <= 0 || height <= 0) {
        throw SizeError("frame dimensions must be positive, got " + std::to_string(width) + "x" +
                        std::to_string(height));
    }
    const std::size_t expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (values.size() != expected) {
        throw SizeError("expected " + std::to_string(expected) + " values, got " +
                        std::to_string(values.size()));
    }
    std::vector<std::uint16_t> px(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] > 65535) {
            throw RangeError("pixel value " + std::to_string(values[i]) +
                             " outside [0, 65535] at index " + std::to_string(i));
        }
        px[i] = static_cast<std::uint16_t>(values[i]);
    }
    return ThermalFrame(width, height, std::move(px));
}

ThermalFrame normalize_frame(const ThermalFrame& frame) {
    const auto& px = frame.pixels();
    const auto [lo_it, hi_it] = std::minmax_element(px.begin(), px.end());
    const std::uint16_t lo = *lo_it;
    const std::uint16_t hi = *hi_it;

    std::vector<std::uint16_t> out(px.size(), 0);
    if (hi != lo) {
        const double span = static_cast<double>(hi) - static_cast<double>(lo);
        for (std::size_t i = 0; i < px.size(); ++i) {
            const double mapped = (static_cast<double>(px[i]) - lo) * 65535.0 / span;
            out[i] = static_cast<std::uint16_t>(std::floor(mapped + 0.5));
        }
    }
    return ThermalFrame(frame.width(), frame.height(), std::move(out));
}

} // namespace irfocus
