#ifndef RADON_METRICS_HPP
#define RADON_METRICS_HPP

#include <optional>
#include <vector>

#include "radon/geometry.hpp"

// Weighted discrete L2 norms and relative error reports. Sinogram norms carry
// the measure delta_phi * delta_s (per-angle widths for non-uniform sets),
// image norms delta_x^2; image comparisons can exclude pixels outside a
// circular mask.

namespace radon {

struct ErrorReport {
    double global_rel_l2 = 0.0;
    std::vector<double> per_angle_rel_l2; // empty for image comparisons
    double worst_angle_rel_l2 = 0.0;
    int worst_angle_index = -1;
    std::optional<double> mask_radius;
    /// Angle indices whose truth row had zero norm; their per-angle entries
    /// are NaN and excluded from the worst-angle maximum.
    std::vector<int> undefined_angles;
};

double sinogram_norm(const Sinogram& g);
/// ds * sum_p |g_qp|^2, square-rooted: the norm of one projection row.
double projection_norm(const Sinogram& g, int q);
double image_norm(const Image& f, std::optional<double> mask_radius = std::nullopt);

/// Relative L2 error with per-angle breakdown. Throws std::domain_error on a
/// zero-norm truth sinogram.
ErrorReport error_report(const Sinogram& truth, const Sinogram& candidate);
/// Image variant; the mask defaults to none, backprojection callers pass 0.95.
ErrorReport error_report(const Image& truth, const Image& candidate,
                         std::optional<double> mask_radius = std::nullopt);

} // namespace radon

#endif
