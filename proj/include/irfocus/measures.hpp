#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "irfocus/frame.hpp"

namespace irfocus {

/// Knobs of the sum-modified-Laplacian focus measure. A window half-width of
/// nullopt means the sum runs over the whole valid region, yielding one
/// scalar per frame.
struct SmlParams {
    int step = 1;
    double threshold_t = 0.0;
    std::optional<int> window_w = std::nullopt;
};

/// Focus-measure value per lens position.
struct FocusCurve {
    std::vector<double> positions_mm;
    std::vector<double> values;
    std::string label;
};

struct BestFocus {
    std::size_t index = 0;
    double position_mm = 0.0;
};

/// Peak shape summary of a focus curve. fwhm_mm is absent when the curve
/// never drops below half the peak on one side or the other.
struct CurveStats {
    double peak_value = 0.0;
    double peak_position_mm = 0.0;
    std::size_t peak_index = 0;
    double median_value = 0.0;
    double peak_to_median = 0.0;
    std::optional<double> fwhm_mm;
};

/// Windowed per-pixel SML values; cells whose window is not fully inside the
/// valid region are empty.
struct SmlMap {
    int width = 0;
    int height = 0;
    std::vector<std::optional<double>> cells;

    const std::optional<double>& at(int x, int y) const {
        return cells[static_cast<std::size_t>(y) * width + x];
    }
};

/// Absolute second differences in x and y at (x, y) with the given pixel
/// spacing, computed in exact integer arithmetic. Both neighbors must be
/// in bounds.
double modified_laplacian(const ThermalFrame& frame, int x, int y, int step = 1);

/// Thresholded sum of modified-Laplacian values over every in-bounds pixel.
double sml_global(const ThermalFrame& frame, const SmlParams& params = {});

/// Per-pixel SML over square windows of half-width params.window_w.
SmlMap sml_map(const ThermalFrame& frame, const SmlParams& params);

/// One sml_global value per frame of the stack, each frame normalized first.
FocusCurve focus_curve(const FocusStack& stack, const SmlParams& params = {});

/// Index and position of the curve maximum; ties go to the smaller position.
BestFocus best_focus(const FocusCurve& curve);

CurveStats curve_stats(const FocusCurve& curve);

} // namespace irfocus
