#ifndef RADON_WEIGHTS_HPP
#define RADON_WEIGHTS_HPP

#include <cmath>

#include "radon/geometry.hpp"

// Closed-form ray-driven and pixel-driven weight functions. The ray-driven
// weight is a trapezoid in t whose plateau, ramp and support depend on the
// angle; dx^2 * ray weight equals the boundary-corrected intersection length
// of the line with the pixel square. The pixel-driven weight is a hat of
// half-width delta_s.

namespace radon {

enum class WeightKind { RayDriven, PixelDriven };

/// Per-angle constants for the ray-driven weight of one angle phi.
/// s_lo/s_hi bound the plateau/support, kappa is the plateau height times dx.
struct RayGeometryCache {
    double phi = 0.0;
    double delta_x = 0.0;
    double s_lo = 0.0;        // (dx/2) * ||cos| - |sin||
    double s_hi = 0.0;        // (dx/2) * (|cos| + |sin|)
    double kappa = 1.0;       // min(1/|cos|, 1/|sin|)
    bool axis_aligned = false;
    // derived, for the hot loops
    double plateau = 0.0;     // kappa / dx
    double ramp_slope = 0.0;  // 1 / (dx^2 |cos sin|), 0 when axis aligned
    double half_jump = 0.0;   // 1 / (2 dx), the boundary value when axis aligned

    RayGeometryCache(double phi_, double delta_x_)
        : phi(phi_), delta_x(delta_x_)
    {
        const double ac = std::abs(std::cos(phi_));
        const double as = std::abs(std::sin(phi_));
        s_lo = 0.5 * delta_x_ * std::abs(ac - as);
        s_hi = 0.5 * delta_x_ * (ac + as);
        axis_aligned = std::min(ac, as) < 1e-12;
        kappa = 1.0 / std::max(ac, as);
        plateau = kappa / delta_x_;
        ramp_slope = axis_aligned ? 0.0 : 1.0 / (delta_x_ * delta_x_ * ac * as);
        half_jump = 0.5 / delta_x_;
        if (axis_aligned) {
            // snap to the exact piecewise-constant limit
            s_lo = s_hi = 0.5 * delta_x_;
            kappa = 1.0;
            plateau = 1.0 / delta_x_;
        }
    }
};

/// omega^rd(phi, t). Even in t, supported on [-s_hi, s_hi], bounded by sqrt(2)/dx.
inline double ray_weight(const RayGeometryCache& cache, double t)
{
    const double at = std::abs(t);
    if (cache.axis_aligned) {
        // edge-on-edge coincidence within the same tolerance the clipping
        // oracle uses for on-face detection
        if (std::abs(at - cache.s_hi) <= 1e-12) return cache.half_jump;
        if (at < cache.s_hi) return cache.plateau;
        return 0.0;
    }
    if (at < cache.s_lo) return cache.plateau;
    if (at < cache.s_hi) return (cache.s_hi - at) * cache.ramp_slope;
    return 0.0;
}

/// omega^pd(t) = max(delta_s - |t|, 0) / delta_s^2.
inline double pixel_weight(double delta_s, double t)
{
    const double v = delta_s - std::abs(t);
    return v > 0.0 ? v / (delta_s * delta_s) : 0.0;
}

struct SupportInterval {
    double lo = 0.0;
    double hi = 0.0;
};

inline SupportInterval ray_support(const RayGeometryCache& cache)
{
    return {-cache.s_hi, cache.s_hi};
}

inline SupportInterval pixel_support(double delta_s)
{
    return {-delta_s, delta_s};
}

inline SupportInterval support_interval(WeightKind kind, const RayGeometryCache& cache,
                                        double delta_s)
{
    return kind == WeightKind::RayDriven ? ray_support(cache) : pixel_support(delta_s);
}

/// dx^2 * omega^rd(phi, center.theta - s): the chord length of the line
/// {x.theta = s} with the square of side dx centered at `center`, with half
/// weight on full-edge overlaps.
inline double intersection_length_closed_form(double phi, double s, Vec2 center,
                                              double delta_x)
{
    const RayGeometryCache cache(phi, delta_x);
    const Vec2 theta{std::cos(phi), std::sin(phi)};
    const double t = dot(center, theta) - s;
    return delta_x * delta_x * ray_weight(cache, t);
}

} // namespace radon

#endif
