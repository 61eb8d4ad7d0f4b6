#pragma once

#include "irfocus/errors.hpp"

namespace irfocus {

/// Constants of the reference LWIR imager: 15 mm germanium lens at f/0.95,
/// 160x120 uncooled microbolometer, 8-14 um band, 10 cm closest focus.
struct CameraSpec {
    double focal_mm = 15.0;
    double f_number = 0.95;
    double ifov_mrad = 1.7;
    int width_px = 160;
    int height_px = 120;
    double netd_mk = 100.0; // informational; scales the optional sensor noise
    double band_low_um = 8.0;
    double band_high_um = 14.0;
    double closest_focus_mm = 100.0;
};

/// Two-term Cauchy dispersion, n(lambda) = a + b / lambda_um^2. Defaults give
/// a germanium-flavored index that decreases with wavelength.
struct DispersionModel {
    double a = 4.0;
    double b_um2 = 1.0;
};

/// Wien displacement constant, m*K (CODATA).
inline constexpr double kWienB = 2.897771955e-3;

inline constexpr double kCelsiusToKelvin = 273.15;

/// Near/far limits and hyperfocal distance, meters. far_m is +infinity when
/// the far limit is unbounded.
struct DepthOfField {
    double near_m = 0.0;
    double far_m = 0.0;
    double hyperfocal_m = 0.0;
};

/// Blackbody peak emission wavelength, meters.
double wien_peak_wavelength_m(double temp_k);

/// Distance between the peak wavelengths of two Celsius temperatures, nm.
double wien_span_nm(double temp1_c, double temp2_c);

/// Diffraction spot diameter 2.44 * lambda * d / D, meters.
double airy_diameter_m(double wavelength_m, double image_dist_m, double aperture_diam_m);

/// Size of one detector pixel implied by the IFOV and focal length, mm.
double pixel_pitch_mm(const CameraSpec& spec);

/// Thin-lens image distance 1 / (1/f - 1/s), meters. An infinite object
/// distance returns the focal length.
double thin_lens_image_distance_m(double focal_m, double object_dist_m);

/// Geometric circle-of-confusion diameter on the sensor for an object at
/// object_dist_m when the sensor sits at sensor_dist_m, meters.
double defocus_blur_diameter_m(const CameraSpec& spec, double sensor_dist_m,
                               double object_dist_m);

/// Standard depth-of-field limits for a circle of confusion coc_m.
DepthOfField depth_of_field(const CameraSpec& spec, double coc_m, double object_dist_m);

/// Cauchy refractive index at the given wavelength.
double cauchy_index(const DispersionModel& model, double wavelength_m);

/// Focal length at wavelength_m for a lens of focal_ref_m at
/// wavelength_ref_m, via the lensmaker proportionality f ~ 1/(n - 1).
double chromatic_focal_length_m(const DispersionModel& model, double focal_ref_m,
                                double wavelength_ref_m, double wavelength_m);

} // namespace irfocus
