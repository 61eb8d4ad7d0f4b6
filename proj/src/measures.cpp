#include "irfocus/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>

namespace irfocus {

namespace {

std::int64_t ml_at(const std::vector<std::uint16_t>& px, int w, int x, int y, int step) {
    const auto v = [&](int xx, int yy) -> std::int64_t {
        return px[static_cast<std::size_t>(yy) * w + xx];
    };
    const std::int64_t dx = 2 * v(x, y) - v(x - step, y) - v(x + step, y);
    const std::int64_t dy = 2 * v(x, y) - v(x, y - step) - v(x, y + step);
    return std::abs(dx) + std::abs(dy);
}

void validate_params(const SmlParams& params) {
    if (params.step < 1) {
        throw RangeError("step must be >= 1, got " + std::to_string(params.step));
    }
    if (params.threshold_t < 0.0) {
        throw RangeError("threshold must be >= 0");
    }
    if (params.window_w && *params.window_w < 0) {
        throw RangeError("window half-width must be >= 0");
    }
}

} // namespace

double modified_laplacian(const ThermalFrame& frame, int x, int y, int step) {
    if (step < 1) {
        throw RangeError("step must be >= 1, got " + std::to_string(step));
    }
    const int w = frame.width();
    const int h = frame.height();
    if (x < step || x > w - 1 - step || y < step || y > h - 1 - step) {
        throw BoundsError("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") has no step-" + std::to_string(step) + " neighborhood in " +
                          std::to_string(w) + "x" + std::to_string(h));
    }
    return static_cast<double>(ml_at(frame.pixels(), w, x, y, step));
}

double sml_global(const ThermalFrame& frame, const SmlParams& params) {
    validate_params(params);
    const int w = frame.width();
    const int h = frame.height();
    const int step = params.step;
    if (w < 2 * step + 1 || h < 2 * step + 1) {
        throw SizeError("frame " + std::to_string(w) + "x" + std::to_string(h) +
                        " too small for step " + std::to_string(step));
    }
    const auto& px = frame.pixels();
    std::int64_t sum = 0;
    for (int y = step; y <= h - 1 - step; ++y) {
        for (int x = step; x <= w - 1 - step; ++x) {
            const std::int64_t ml = ml_at(px, w, x, y, step);
            if (static_cast<double>(ml) >= params.threshold_t) {
                sum += ml;
            }
        }
    }
    return static_cast<double>(sum);
}

SmlMap sml_map(const ThermalFrame& frame, const SmlParams& params) {
    validate_params(params);
    if (!params.window_w) {
        throw std::invalid_argument("sml_map needs a finite window half-width");
    }
    const int w = frame.width();
    const int h = frame.height();
    const int step = params.step;
    const int win = *params.window_w;
    // A pixel needs its whole (2W+1)^2 window inside the valid ML region.
    if (w < 2 * (step + win) + 1 || h < 2 * (step + win) + 1) {
        throw SizeError("frame " + std::to_string(w) + "x" + std::to_string(h) +
                        " too small for step " + std::to_string(step) + ", window " +
                        std::to_string(win));
    }

    const auto& px = frame.pixels();
    SmlMap map;
    map.width = w;
    map.height = h;
    map.cells.assign(static_cast<std::size_t>(w) * h, std::nullopt);

    const int lo = step + win;
    for (int y = lo; y <= h - 1 - lo; ++y) {
        for (int x = lo; x <= w - 1 - lo; ++x) {
            std::int64_t sum = 0;
            for (int j = y - win; j <= y + win; ++j) {
                for (int i = x - win; i <= x + win; ++i) {
                    const std::int64_t ml = ml_at(px, w, i, j, step);
                    if (static_cast<double>(ml) >= params.threshold_t) {
                        sum += ml;
                    }
                }
            }
            map.cells[static_cast<std::size_t>(y) * w + x] = static_cast<double>(sum);
        }
    }
    return map;
}

FocusCurve focus_curve(const FocusStack& stack, const SmlParams& params) {
    FocusCurve curve;
    curve.positions_mm = stack.positions_mm();
    curve.values.reserve(stack.size());
    for (const ThermalFrame& frame : stack.frames()) {
        curve.values.push_back(sml_global(normalize_frame(frame), params));
    }
    curve.label = stack.metadata().label;
    return curve;
}

BestFocus best_focus(const FocusCurve& curve) {
    if (curve.values.empty()) {
        throw EmptyError("best_focus on an empty curve");
    }
    if (curve.values.size() != curve.positions_mm.size()) {
        throw SizeError("curve has " + std::to_string(curve.values.size()) + " values but " +
                        std::to_string(curve.positions_mm.size()) + " positions");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < curve.values.size(); ++i) {
        const bool higher = curve.values[i] > curve.values[best];
        const bool tie_closer = curve.values[i] == curve.values[best] &&
                                curve.positions_mm[i] < curve.positions_mm[best];
        if (higher || tie_closer) {
            best = i;
        }
    }
    return BestFocus{best, curve.positions_mm[best]};
}

namespace {

double median_of(std::vector<double> v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    if (n % 2 == 1) {
        return v[mid];
    }
    const double upper = v[mid];
    const double lower = *std::max_element(v.begin(), v.begin() + mid);
    return 0.5 * (lower + upper);
}

// Position where the segment (p0,v0)-(p1,v1) crosses `level`.
double crossing(double p0, double v0, double p1, double v1, double level) {
    return p0 + (level - v0) / (v1 - v0) * (p1 - p0);
}

} // namespace

CurveStats curve_stats(const FocusCurve& curve) {
    if (curve.values.empty()) {
        throw EmptyError("curve_stats on an empty curve");
    }
    const BestFocus peak = best_focus(curve);
    const auto& vals = curve.values;
    const auto& pos = curve.positions_mm;

    CurveStats stats;
    stats.peak_index = peak.index;
    stats.peak_position_mm = peak.position_mm;
    stats.peak_value = vals[peak.index];
    stats.median_value = median_of(vals);
    stats.peak_to_median = stats.peak_value / std::max(stats.median_value, 1e-12);

    // Full width at half maximum: walk outward from the peak to the first
    // sample below half level on each side, interpolating linearly.
    const double half = 0.5 * stats.peak_value;
    std::optional<double> left;
    for (std::size_t i = peak.index; i-- > 0;) {
        if (vals[i] < half) {
            left = crossing(pos[i], vals[i], pos[i + 1], vals[i + 1], half);
            break;
        }
    }
    std::optional<double> right;
    for (std::size_t i = peak.index + 1; i < vals.size(); ++i) {
        if (vals[i] < half) {
            right = crossing(pos[i - 1], vals[i - 1], pos[i], vals[i], half);
            break;
        }
    }
    if (left && right) {
        stats.fwhm_mm = *right - *left;
    }
    return stats;
}

} // namespace irfocus
