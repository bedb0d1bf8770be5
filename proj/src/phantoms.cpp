#include "radon/phantoms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radon {

bool Ellipse::contains(Vec2 pt) const
{
    const double c = std::cos(rotation), s = std::sin(rotation);
    const double dx = pt.x - center.x, dy = pt.y - center.y;
    const double u = (c * dx + s * dy) / a;
    const double v = (-s * dx + c * dy) / b;
    return u * u + v * v <= 1.0;
}

double Ellipse::chord(double phi, double s) const
{
    // Map the ellipse to the unit disk: with n = R(-rot) * theta(phi), the
    // scaled normal w = (a n_x, b n_y) has length r_eff, and the chord is
    // (2ab/r_eff) sqrt(1 - (s'/r_eff)^2) for the centered offset s'.
    const double ct = std::cos(phi), st = std::sin(phi);
    const double cr = std::cos(rotation), sr = std::sin(rotation);
    const double nx = cr * ct + sr * st;
    const double ny = -sr * ct + cr * st;
    const double wx = a * nx, wy = b * ny;
    const double r_eff = std::sqrt(wx * wx + wy * wy);
    const double off = s - (center.x * ct + center.y * st);
    const double u = off / r_eff;
    const double disc = 1.0 - u * u;
    if (disc <= 0.0)
        return 0.0;
    return 2.0 * a * b / r_eff * std::sqrt(disc);
}

double EllipsePhantom::density_at(Vec2 pt) const
{
    double d = 0.0;
    for (const Ellipse& e : components)
        if (e.contains(pt))
            d += e.density;
    return d;
}

EllipsePhantom make_phantom(std::vector<Ellipse> components)
{
    if (components.empty())
        throw std::invalid_argument("phantom must have at least one ellipse");
    for (const Ellipse& e : components) {
        if (!(e.a > 0.0 && e.b > 0.0))
            throw std::invalid_argument("ellipse semi-axes must be positive");
        if (norm(e.center) + std::max(e.a, e.b) > 1.0 + 1e-12)
            throw std::invalid_argument("ellipse extends outside the unit ball");
    }
    return EllipsePhantom{std::move(components)};
}

EllipsePhantom ellipse_suite()
{
    const double deg30 = 30.0 * std::numbers::pi / 180.0;
    return make_phantom({
        {{0.0, 0.0}, 0.7, 0.7, 0.0, 1.0},
        {{0.2, -0.1}, 0.3, 0.15, deg30, 0.5},
        {{-0.3, 0.3}, 0.08, 0.08, 0.0, 2.0},
    });
}

EllipsePhantom disk_phantom(double radius, double density)
{
    return make_phantom({{{0.0, 0.0}, radius, radius, 0.0, density}});
}

Image rasterize(const EllipsePhantom& phantom, const ImageGrid& grid, RasterMode mode,
                int supersample)
{
    if (mode == RasterMode::MeanValue && supersample < 1)
        throw std::invalid_argument("rasterize: supersample must be >= 1");

    const int n = grid.n_x();
    const double dx = grid.delta_x();
    Image out{grid};
    if (mode == RasterMode::PointSample) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out.at(i, j) = phantom.density_at(grid.pixel_center(i, j));
        return out;
    }
    const int k = supersample;
    const double sub = dx / k;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Vec2 c = grid.pixel_center(i, j);
            const double x0 = c.x - 0.5 * dx, y0 = c.y - 0.5 * dx;
            double acc = 0.0;
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    acc += phantom.density_at({x0 + (a + 0.5) * sub, y0 + (b + 0.5) * sub});
            out.at(i, j) = acc / (k * k);
        }
    }
    return out;
}

Sinogram analytic_sinogram(const EllipsePhantom& phantom, const SinogramGrid& grid)
{
    Sinogram out{grid};
    for (int q = 0; q < grid.n_phi(); ++q) {
        const double phi = grid.angle(q);
        for (int p = 0; p < grid.n_s(); ++p) {
            const double s = grid.detector_center(p);
            double v = 0.0;
            for (const Ellipse& e : phantom.components)
                v += e.density * e.chord(phi, s);
            out.at(q, p) = v;
        }
    }
    return out;
}

Sinogram constant_sinogram(const SinogramGrid& grid, double value)
{
    Sinogram out{grid};
    std::fill(out.values.begin(), out.values.end(), value);
    return out;
}

} // namespace radon
