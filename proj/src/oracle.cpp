#include "radon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace radon::oracle {

namespace {

constexpr double kDegenerateDir = 1e-15; // direction component treated as zero
constexpr double kOnFaceTol = 1e-12;     // offset-on-face detection

} // namespace

ClipResult clip_line_square(double phi, double s, Vec2 center, double delta_x)
{
    const double c = std::cos(phi), sn = std::sin(phi);
    const double h = 0.5 * delta_x;

    // Line parametrization P(t) = s*theta + t*theta_perp.
    // Coordinates: x(t) = s*c - t*sn, y(t) = s*sn + t*c.
    const double pos[2] = {s * c, s * sn};
    const double dir[2] = {-sn, c};
    const double lo[2] = {center.x - h, center.y - h};
    const double hi[2] = {center.x + h, center.y + h};

    double t_lo = -std::numeric_limits<double>::infinity();
    double t_hi = std::numeric_limits<double>::infinity();
    bool on_face = false;

    for (int axis = 0; axis < 2; ++axis) {
        if (std::abs(dir[axis]) < kDegenerateDir) {
            // Line runs parallel to this slab; interval test on the constant coordinate.
            if (std::abs(pos[axis] - lo[axis]) <= kOnFaceTol ||
                std::abs(pos[axis] - hi[axis]) <= kOnFaceTol) {
                on_face = true;
            } else if (pos[axis] < lo[axis] || pos[axis] > hi[axis]) {
                return {0.0, 0.0};
            }
        } else {
            double t0 = (lo[axis] - pos[axis]) / dir[axis];
            double t1 = (hi[axis] - pos[axis]) / dir[axis];
            if (t0 > t1) std::swap(t0, t1);
            t_lo = std::max(t_lo, t0);
            t_hi = std::min(t_hi, t1);
        }
    }

    const double chord = std::max(0.0, t_hi - t_lo);
    ClipResult res;
    res.chord_length = chord;
    res.boundary_overlap = on_face ? chord : 0.0;
    return res;
}

Sinogram brute_force_forward(const Image& image, const SinogramGrid& sino_grid,
                             WeightKind kind)
{
    const int n_x = image.grid.n_x();
    if (n_x > 64)
        throw std::invalid_argument("brute_force_forward: n_x > 64");

    const double dx = image.grid.delta_x();
    const double ds = sino_grid.delta_s();
    Sinogram out{sino_grid};
    for (int q = 0; q < sino_grid.n_phi(); ++q) {
        const RayGeometryCache cache(sino_grid.angle(q), dx);
        const Vec2 theta = sino_grid.direction(q);
        for (int p = 0; p < sino_grid.n_s(); ++p) {
            const double s_p = sino_grid.detector_center(p);
            double val = 0.0;
            for (int i = 0; i < n_x; ++i) {
                for (int j = 0; j < n_x; ++j) {
                    const double t = dot(image.grid.pixel_center(i, j), theta) - s_p;
                    const double w = kind == WeightKind::RayDriven
                                         ? ray_weight(cache, t)
                                         : pixel_weight(ds, t);
                    val += w * image.at(i, j);
                }
            }
            out.at(q, p) = dx * dx * val;
        }
    }
    return out;
}

double weight_quadrature(WeightKind kind, double phi, double delta_x, double delta_s)
{
    // Composite trapezoid with nodes aligned to the breakpoints of the
    // piecewise-affine weight, plus one zero-valued padding cell per side so
    // that the axis-aligned jump contributions cancel.
    const RayGeometryCache cache(phi, delta_x);

    std::vector<double> breaks;
    if (kind == WeightKind::RayDriven) {
        breaks = {-cache.s_hi, -cache.s_lo, cache.s_lo, cache.s_hi};
    } else {
        breaks = {-delta_s, 0.0, delta_s};
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    auto eval = [&](double t) {
        return kind == WeightKind::RayDriven ? ray_weight(cache, t)
                                             : pixel_weight(delta_s, t);
    };

    // Nodes aligned to breakpoints make the rule exact on the affine pieces.
    // One extra zero-reaching cell per side, with the same step as the
    // adjacent segment, cancels the axis-aligned half-jump contributions.
    const double span = breaks.back() - breaks.front();
    const long total_nodes = 1000000;
    auto segment = [&](double a, double b, double& integral) {
        const long cells = std::max<long>(
            1, static_cast<long>(std::lround(total_nodes * (b - a) / span)));
        const double hstep = (b - a) / cells;
        double acc = 0.5 * (eval(a) + eval(b));
        for (long k = 1; k < cells; ++k)
            acc += eval(a + k * hstep);
        integral += acc * hstep;
    };

    double integral = 0.0;
    for (size_t seg = 0; seg + 1 < breaks.size(); ++seg)
        if (breaks[seg + 1] > breaks[seg])
            segment(breaks[seg], breaks[seg + 1], integral);

    {
        const double h0 = (breaks[1] - breaks[0]) /
            std::max<long>(1, std::lround(total_nodes * (breaks[1] - breaks[0]) / span));
        integral += 0.5 * h0 * (eval(breaks.front() - h0) + eval(breaks.front()));
        const size_t m = breaks.size();
        const double h1 = (breaks[m - 1] - breaks[m - 2]) /
            std::max<long>(1, std::lround(total_nodes * (breaks[m - 1] - breaks[m - 2]) / span));
        integral += 0.5 * h1 * (eval(breaks.back()) + eval(breaks.back() + h1));
    }
    return integral;
}

} // namespace radon::oracle
