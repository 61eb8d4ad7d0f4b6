#include "irfocus/optics.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace irfocus {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        throw DomainError(std::string(name) + " must be positive, got " + std::to_string(v));
    }
}

} // namespace

double wien_peak_wavelength_m(double temp_k) {
    require_positive(temp_k, "temperature (K)");
    return kWienB / temp_k;
}

double wien_span_nm(double temp1_c, double temp2_c) {
    if (!(temp1_c > -kCelsiusToKelvin) || !(temp2_c > -kCelsiusToKelvin)) {
        throw DomainError("temperatures must lie above absolute zero");
    }
    const double l1 = wien_peak_wavelength_m(temp1_c + kCelsiusToKelvin);
    const double l2 = wien_peak_wavelength_m(temp2_c + kCelsiusToKelvin);
    return std::abs(l1 - l2) * 1e9;
}

double airy_diameter_m(double wavelength_m, double image_dist_m, double aperture_diam_m) {
    if (wavelength_m < 0.0) {
        throw DomainError("wavelength must be >= 0");
    }
    require_positive(image_dist_m, "image distance");
    require_positive(aperture_diam_m, "aperture diameter");
    return 2.44 * wavelength_m * image_dist_m / aperture_diam_m;
}

double pixel_pitch_mm(const CameraSpec& spec) {
    require_positive(spec.ifov_mrad, "IFOV");
    require_positive(spec.focal_mm, "focal length");
    return spec.ifov_mrad * 1e-3 * spec.focal_mm;
}

double thin_lens_image_distance_m(double focal_m, double object_dist_m) {
    require_positive(focal_m, "focal length");
    if (std::isinf(object_dist_m)) {
        return focal_m;
    }
    if (!(object_dist_m > focal_m)) {
        throw DomainError("object distance " + std::to_string(object_dist_m) +
                          " m forms no real image for focal length " + std::to_string(focal_m) +
                          " m");
    }
    return 1.0 / (1.0 / focal_m - 1.0 / object_dist_m);
}

double defocus_blur_diameter_m(const CameraSpec& spec, double sensor_dist_m,
                               double object_dist_m) {
    const double focal_m = spec.focal_mm * 1e-3;
    require_positive(spec.f_number, "f-number");
    if (!(sensor_dist_m >= focal_m)) {
        throw DomainError("sensor distance must be at least the focal length");
    }
    const double image_m = thin_lens_image_distance_m(focal_m, object_dist_m);
    const double aperture_m = focal_m / spec.f_number;
    return aperture_m * std::abs(sensor_dist_m - image_m) / image_m;
}

DepthOfField depth_of_field(const CameraSpec& spec, double coc_m, double object_dist_m) {
    require_positive(coc_m, "circle of confusion");
    const double f = spec.focal_mm * 1e-3;
    require_positive(spec.f_number, "f-number");
    const double h = f * f / (spec.f_number * coc_m) + f;

    DepthOfField dof;
    dof.hyperfocal_m = h;
    if (std::isinf(object_dist_m)) {
        dof.near_m = h - f;
        dof.far_m = std::numeric_limits<double>::infinity();
        return dof;
    }
    if (!(object_dist_m > f)) {
        throw DomainError("object distance must exceed the focal length");
    }
    const double s = object_dist_m;
    dof.near_m = s * (h - f) / (h + s - 2.0 * f);
    dof.far_m = s < h ? s * (h - f) / (h - s) : std::numeric_limits<double>::infinity();
    return dof;
}

double cauchy_index(const DispersionModel& model, double wavelength_m) {
    require_positive(wavelength_m, "wavelength");
    const double lambda_um = wavelength_m * 1e6;
    return model.a + model.b_um2 / (lambda_um * lambda_um);
}

double chromatic_focal_length_m(const DispersionModel& model, double focal_ref_m,
                                double wavelength_ref_m, double wavelength_m) {
    require_positive(focal_ref_m, "reference focal length");
    const double n_ref = cauchy_index(model, wavelength_ref_m);
    const double n = cauchy_index(model, wavelength_m);
    if (!(n_ref > 1.0) || !(n > 1.0)) {
        throw DomainError("refractive index must exceed 1 at both wavelengths");
    }
    return focal_ref_m * (n_ref - 1.0) / (n - 1.0);
}

} // namespace irfocus
