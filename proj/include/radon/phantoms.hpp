#ifndef RADON_PHANTOMS_HPP
#define RADON_PHANTOMS_HPP

#include <vector>

#include "radon/geometry.hpp"

// Analytical test objects: unions of ellipses with additive densities, closed
// form line integrals, and the constant sinogram whose exact backprojection
// is the constant pi.

namespace radon {

struct Ellipse {
    Vec2 center;
    double a = 0.0;       // semi-axis along the (rotated) x direction
    double b = 0.0;       // semi-axis along the (rotated) y direction
    double rotation = 0.0; // radians
    double density = 0.0;  // additive

    bool contains(Vec2 pt) const;
    /// Chord length of the line {x.theta(phi) = s} through this ellipse.
    double chord(double phi, double s) const;
};

struct EllipsePhantom {
    std::vector<Ellipse> components;

    /// Sum of densities of components containing the point.
    double density_at(Vec2 pt) const;
};

/// Validates axes > 0, non-empty, and support inside the unit ball
/// (||center|| + max(a,b) <= 1 per component).
EllipsePhantom make_phantom(std::vector<Ellipse> components);

/// Built-in suite: a large centered disk, an off-center rotated ellipse, and a
/// small high-contrast disk.
EllipsePhantom ellipse_suite();
/// Single centered disk of the given radius and density.
EllipsePhantom disk_phantom(double radius, double density);

enum class RasterMode { PointSample, MeanValue };

/// PointSample evaluates at pixel centers; MeanValue averages a k x k
/// stratified sample per pixel.
Image rasterize(const EllipsePhantom& phantom, const ImageGrid& grid,
                RasterMode mode = RasterMode::PointSample, int supersample = 1);

/// Pointwise evaluation of the exact Radon transform at (phi_q, s_p).
Sinogram analytic_sinogram(const EllipsePhantom& phantom, const SinogramGrid& grid);

Sinogram constant_sinogram(const SinogramGrid& grid, double value);

} // namespace radon

#endif
