#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "irfocus/frame.hpp"
#include "irfocus/optics.hpp"

namespace irfocus {

struct Disk {
    double radius_px = 24.0;
};

struct Rect {
    double half_w_px = 16.0;
    double half_h_px = 16.0;
};

/// One emitting object in the scene: a hot disk or rectangle carrying a
/// deterministic checker texture so the focus measure has detail to lock on.
struct SceneObject {
    std::variant<Disk, Rect> shape = Disk{};
    double center_x_px = 80.0;
    double center_y_px = 60.0;
    double temp_c = 40.0;
    double distance_mm = 500.0;
    double texture_amp = 1.0; // in [0, 1]; checker depth as a fraction of full texture
};

struct SceneSpec {
    std::vector<SceneObject> objects;
    double ambient_c = 20.0;
    int width_px = 160;
    int height_px = 120;
};

/// Lens sweep protocol: ring positions 1..n_positions in 1 mm steps, mapped
/// affinely onto the sensor travel between infinity focus and closest focus.
struct SweepSpec {
    int n_positions = 96;
    double glare_sigma_per_k = 0.05; // px of extra blur per kelvin above ambient
    double glare_floor_sigma = 0.3;  // px
    std::uint32_t rng_seed = 0;
    bool sensor_noise = false; // NETD-scaled additive noise; off keeps renders exact
};

/// One focus sweep per object temperature, sharing scene geometry, sweep,
/// camera, and the quantization gain.
struct ExperimentSpec {
    std::vector<double> temps_c;
    SceneSpec scene;
    SweepSpec sweep;
    CameraSpec camera;
};

/// T^4 radiance proxy in arbitrary units; only relative values matter.
double radiance_value(double temp_c);

/// Lens ring position of index p (1-based), millimeters.
double ring_position_mm(int position_index);

/// Sensor-to-lens distance at ring position p (1-based), millimeters.
double sensor_distance_mm(const CameraSpec& camera, const SweepSpec& sweep, int position_index);

/// Brightest radiance any pixel of this scene can reach (analytic).
double scene_peak_radiance(const SceneSpec& scene);

/// Renders the scene at one ring position. Pass max_radiance to pin the
/// quantization gain across frames rendered separately; by default the gain
/// comes from the scene itself.
ThermalFrame render_frame(const SceneSpec& scene, const CameraSpec& camera,
                          const SweepSpec& sweep, int position_index,
                          std::optional<double> max_radiance = std::nullopt);

/// Renders every ring position into a stack.
FocusStack generate_stack(const SceneSpec& scene, const CameraSpec& camera,
                          const SweepSpec& sweep,
                          std::optional<double> max_radiance = std::nullopt);

/// Renders one stack per temperature with a shared quantization gain.
std::vector<FocusStack> generate_experiment(const ExperimentSpec& spec);

/// Ring position whose sensor distance is closest to the exact image
/// distance of an object at object_distance_mm; ties go to the smaller index.
int ground_truth_focus(const CameraSpec& camera, const SweepSpec& sweep,
                       double object_distance_mm);

/// Symmetric Gaussian low-pass of a whole frame (replicated edges);
/// sigma_px = 0 returns the frame unchanged.
ThermalFrame blur_frame(const ThermalFrame& frame, double sigma_px);

/// Eight temperatures evenly spaced over [40, 80] degrees C.
std::vector<double> default_experiment_temps_c();

/// Single textured hot disk centered in a 160x120 frame.
SceneSpec default_bulb_scene(double temp_c, double distance_mm = 500.0);

ExperimentSpec default_experiment();

} // namespace irfocus
