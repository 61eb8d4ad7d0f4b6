#include "irfocus/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

namespace irfocus {

namespace {

constexpr double kTextureDepth = 0.1;     // full-amp checker swings +-10% of contrast
constexpr int kCheckerCellPx = 4;
constexpr double kDiffractionLambdaM = 10e-6; // band midpoint of 8-14 um

enum class EdgeMode { zero, replicate };

std::vector<double> gaussian_kernel(double sigma) {
    const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        k[i + radius] = w;
        sum += w;
    }
    for (double& w : k) {
        w /= sum;
    }
    return k;
}

// Separable Gaussian, kernel truncated at 3 sigma and renormalized.
void blur_plane(std::vector<double>& plane, int w, int h, double sigma, EdgeMode mode) {
    if (!(sigma > 0.0)) {
        return;
    }
    const std::vector<double> kernel = gaussian_kernel(sigma);
    const int radius = static_cast<int>(kernel.size() / 2);
    std::vector<double> tmp(plane.size(), 0.0);

    for (int y = 0; y < h; ++y) {
        const double* row = plane.data() + static_cast<std::size_t>(y) * w;
        double* out = tmp.data() + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                int xx = x + i;
                if (mode == EdgeMode::replicate) {
                    xx = std::clamp(xx, 0, w - 1);
                } else if (xx < 0 || xx >= w) {
                    continue;
                }
                acc += kernel[i + radius] * row[xx];
            }
            out[x] = acc;
        }
    }
    for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i) {
                int yy = y + i;
                if (mode == EdgeMode::replicate) {
                    yy = std::clamp(yy, 0, h - 1);
                } else if (yy < 0 || yy >= h) {
                    continue;
                }
                acc += kernel[i + radius] * tmp[static_cast<std::size_t>(yy) * w + x];
            }
            plane[static_cast<std::size_t>(y) * w + x] = acc;
        }
    }
}

double checker_sign(int x, int y) {
    return ((x / kCheckerCellPx + y / kCheckerCellPx) % 2 == 0) ? 1.0 : -1.0;
}

bool covers(const SceneObject& obj, int x, int y) {
    const double dx = x - obj.center_x_px;
    const double dy = y - obj.center_y_px;
    if (const Disk* d = std::get_if<Disk>(&obj.shape)) {
        return dx * dx + dy * dy <= d->radius_px * d->radius_px;
    }
    const Rect& r = std::get<Rect>(obj.shape);
    return std::abs(dx) <= r.half_w_px && std::abs(dy) <= r.half_h_px;
}

void validate_object(const SceneObject& obj) {
    if (const Disk* d = std::get_if<Disk>(&obj.shape)) {
        if (!(d->radius_px > 0.0)) {
            throw RangeError("object radius must be positive");
        }
    } else {
        const Rect& r = std::get<Rect>(obj.shape);
        if (!(r.half_w_px > 0.0) || !(r.half_h_px > 0.0)) {
            throw RangeError("object extents must be positive");
        }
    }
    if (obj.texture_amp < 0.0 || obj.texture_amp > 1.0) {
        throw RangeError("texture amplitude must lie in [0, 1]");
    }
}

void validate_sweep(const SweepSpec& sweep) {
    if (sweep.n_positions < 2) {
        throw RangeError("sweep needs at least 2 positions");
    }
    if (sweep.glare_sigma_per_k < 0.0 || sweep.glare_floor_sigma < 0.0) {
        throw RangeError("glare coefficients must be >= 0");
    }
}

double total_blur_sigma_px(const SceneSpec& scene, const CameraSpec& camera,
                           const SweepSpec& sweep, const SceneObject& obj, double sensor_mm) {
    const double pitch_mm = pixel_pitch_mm(camera);
    const double blur_mm =
        defocus_blur_diameter_m(camera, sensor_mm * 1e-3, obj.distance_mm * 1e-3) * 1e3;
    const double sigma_defocus = blur_mm / (2.0 * pitch_mm);
    const double sigma_glare = sweep.glare_floor_sigma +
                               sweep.glare_sigma_per_k * std::abs(obj.temp_c - scene.ambient_c);
    const double aperture_m = camera.focal_mm * 1e-3 / camera.f_number;
    const double sigma_diff =
        airy_diameter_m(kDiffractionLambdaM, sensor_mm * 1e-3, aperture_m) / (2.0 * pitch_mm * 1e-3);
    return std::sqrt(sigma_defocus * sigma_defocus + sigma_glare * sigma_glare +
                     sigma_diff * sigma_diff);
}

std::string temp_label(double temp_c) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "T=%.2fC", temp_c);
    return buf;
}

} // namespace

double radiance_value(double temp_c) {
    if (!(temp_c > -kCelsiusToKelvin)) {
        throw DomainError("temperature must lie above absolute zero");
    }
    const double tk = temp_c + kCelsiusToKelvin;
    const double t2 = tk * tk;
    return t2 * t2 * 1e-9;
}

double ring_position_mm(int position_index) {
    return static_cast<double>(position_index);
}

double sensor_distance_mm(const CameraSpec& camera, const SweepSpec& sweep, int position_index) {
    validate_sweep(sweep);
    if (position_index < 1 || position_index > sweep.n_positions) {
        throw RangeError("position index " + std::to_string(position_index) + " outside [1, " +
                         std::to_string(sweep.n_positions) + "]");
    }
    const double near_mm = camera.focal_mm; // infinity focus
    const double far_mm =
        thin_lens_image_distance_m(camera.focal_mm * 1e-3, camera.closest_focus_mm * 1e-3) * 1e3;
    const double t = static_cast<double>(position_index - 1) / (sweep.n_positions - 1);
    return near_mm + t * (far_mm - near_mm);
}

double scene_peak_radiance(const SceneSpec& scene) {
    const double ambient = radiance_value(scene.ambient_c);
    double peak = ambient;
    for (const SceneObject& obj : scene.objects) {
        const double contrast = radiance_value(obj.temp_c) - ambient;
        if (contrast > 0.0) {
            peak = std::max(peak, ambient + contrast * (1.0 + kTextureDepth * obj.texture_amp));
        }
    }
    return peak;
}

ThermalFrame render_frame(const SceneSpec& scene, const CameraSpec& camera,
                          const SweepSpec& sweep, int position_index,
                          std::optional<double> max_radiance) {
    if (scene.width_px <= 0 || scene.height_px <= 0) {
        throw SizeError("scene dimensions must be positive");
    }
    for (const SceneObject& obj : scene.objects) {
        validate_object(obj);
    }
    const double sensor_mm = sensor_distance_mm(camera, sweep, position_index);

    const int w = scene.width_px;
    const int h = scene.height_px;
    const double ambient = radiance_value(scene.ambient_c);
    const double gain = 65535.0 / max_radiance.value_or(scene_peak_radiance(scene));

    std::vector<double> acc(static_cast<std::size_t>(w) * h, ambient);
    std::vector<double> layer(acc.size());
    for (const SceneObject& obj : scene.objects) {
        // Each object contributes its radiance contrast above ambient,
        // checker-modulated, as a separate layer blurred by the combined
        // defocus + glare + diffraction sigma.
        const double contrast = radiance_value(obj.temp_c) - ambient;
        std::fill(layer.begin(), layer.end(), 0.0);
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                if (covers(obj, x, y)) {
                    const double mod = 1.0 + kTextureDepth * obj.texture_amp * checker_sign(x, y);
                    layer[static_cast<std::size_t>(y) * w + x] = contrast * mod;
                }
            }
        }
        const double sigma = total_blur_sigma_px(scene, camera, sweep, obj, sensor_mm);
        blur_plane(layer, w, h, sigma, EdgeMode::zero);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            acc[i] += layer[i];
        }
    }

    if (sweep.sensor_noise) {
        // Zero-mean uniform noise whose amplitude matches the NETD at the
        // ambient temperature, in radiance units.
        const double tk = scene.ambient_c + kCelsiusToKelvin;
        const double dr_dt = 4.0 * tk * tk * tk * 1e-9;
        const double amp = dr_dt * camera.netd_mk * 1e-3;
        std::mt19937 rng(sweep.rng_seed * 2654435761u + static_cast<std::uint32_t>(position_index));
        std::uniform_real_distribution<double> noise(-amp, amp);
        for (double& v : acc) {
            v += noise(rng);
        }
    }

    std::vector<std::uint16_t> px(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        const double counts = std::floor(acc[i] * gain + 0.5);
        px[i] = static_cast<std::uint16_t>(std::clamp(counts, 0.0, 65535.0));
    }
    return ThermalFrame(w, h, std::move(px));
}

FocusStack generate_stack(const SceneSpec& scene, const CameraSpec& camera,
                          const SweepSpec& sweep, std::optional<double> max_radiance) {
    validate_sweep(sweep);
    const double gain_reference = max_radiance.value_or(scene_peak_radiance(scene));

    std::vector<ThermalFrame> frames;
    std::vector<double> positions;
    frames.reserve(sweep.n_positions);
    positions.reserve(sweep.n_positions);
    for (int p = 1; p <= sweep.n_positions; ++p) {
        frames.push_back(render_frame(scene, camera, sweep, p, gain_reference));
        positions.push_back(ring_position_mm(p));
    }

    StackMetadata meta;
    meta.ambient_c = scene.ambient_c;
    meta.object_temp_c = scene.objects.empty() ? scene.ambient_c : scene.objects.front().temp_c;
    meta.label = temp_label(meta.object_temp_c);
    return FocusStack(std::move(frames), std::move(positions), std::move(meta));
}

std::vector<FocusStack> generate_experiment(const ExperimentSpec& spec) {
    if (spec.temps_c.empty()) {
        throw EmptyError("experiment needs at least one temperature");
    }
    for (double t : spec.temps_c) {
        if (!(t > spec.scene.ambient_c)) {
            throw DomainError("object temperature " + std::to_string(t) +
                              " C must exceed the ambient " + std::to_string(spec.scene.ambient_c) +
                              " C");
        }
    }

    const auto scene_at = [&](double temp_c) {
        SceneSpec s = spec.scene;
        for (SceneObject& obj : s.objects) {
            obj.temp_c = temp_c;
        }
        return s;
    };

    // One gain for the whole experiment, set by the hottest scene.
    double gain_reference = radiance_value(spec.scene.ambient_c);
    for (double t : spec.temps_c) {
        gain_reference = std::max(gain_reference, scene_peak_radiance(scene_at(t)));
    }

    std::vector<FocusStack> stacks;
    stacks.reserve(spec.temps_c.size());
    for (double t : spec.temps_c) {
        stacks.push_back(generate_stack(scene_at(t), spec.camera, spec.sweep, gain_reference));
    }
    return stacks;
}

int ground_truth_focus(const CameraSpec& camera, const SweepSpec& sweep,
                       double object_distance_mm) {
    validate_sweep(sweep);
    const double image_mm =
        thin_lens_image_distance_m(camera.focal_mm * 1e-3, object_distance_mm * 1e-3) * 1e3;
    const double far_mm = sensor_distance_mm(camera, sweep, sweep.n_positions);
    if (image_mm > far_mm * (1.0 + 1e-12)) {
        throw RangeError("object at " + std::to_string(object_distance_mm) +
                         " mm focuses beyond the sweep range");
    }
    int best = 1;
    double best_err = std::abs(sensor_distance_mm(camera, sweep, 1) - image_mm);
    for (int p = 2; p <= sweep.n_positions; ++p) {
        const double err = std::abs(sensor_distance_mm(camera, sweep, p) - image_mm);
        if (err < best_err) {
            best = p;
            best_err = err;
        }
    }
    return best;
}

ThermalFrame blur_frame(const ThermalFrame& frame, double sigma_px) {
    if (sigma_px < 0.0) {
        throw RangeError("blur sigma must be >= 0");
    }
    if (sigma_px == 0.0) {
        return frame;
    }
    std::vector<double> plane(frame.pixels().begin(), frame.pixels().end());
    blur_plane(plane, frame.width(), frame.height(), sigma_px, EdgeMode::replicate);
    std::vector<std::uint16_t> px(plane.size());
    for (std::size_t i = 0; i < plane.size(); ++i) {
        px[i] = static_cast<std::uint16_t>(std::clamp(std::floor(plane[i] + 0.5), 0.0, 65535.0));
    }
    return ThermalFrame(frame.width(), frame.height(), std::move(px));
}

std::vector<double> default_experiment_temps_c() {
    std::vector<double> temps(8);
    for (int i = 0; i < 8; ++i) {
        temps[i] = 40.0 + i * (40.0 / 7.0);
    }
    return temps;
}

SceneSpec default_bulb_scene(double temp_c, double distance_mm) {
    SceneSpec scene;
    SceneObject bulb;
    bulb.shape = Disk{24.0};
    bulb.center_x_px = 80.0;
    bulb.center_y_px = 60.0;
    bulb.temp_c = temp_c;
    bulb.distance_mm = distance_mm;
    bulb.texture_amp = 1.0;
    scene.objects.push_back(bulb);
    return scene;
}

ExperimentSpec default_experiment() {
    ExperimentSpec spec;
    spec.temps_c = default_experiment_temps_c();
    spec.scene = default_bulb_scene(spec.temps_c.front());
    return spec;
}

} // namespace irfocus
