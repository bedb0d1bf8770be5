#include "radon/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace radon {

namespace {

void check_same_grid(const Sinogram& a, const Sinogram& b)
{
    if (a.grid.n_phi() != b.grid.n_phi() || a.grid.n_s() != b.grid.n_s())
        throw std::invalid_argument("error_report: sinogram grids differ");
}

} // namespace

double sinogram_norm(const Sinogram& g)
{
    const double ds = g.grid.delta_s();
    double acc = 0.0;
    for (int q = 0; q < g.grid.n_phi(); ++q) {
        const double wq = g.grid.angular_width(q);
        double row = 0.0;
        for (int p = 0; p < g.grid.n_s(); ++p) {
            const double v = g.at(q, p);
            row += v * v;
        }
        acc += wq * ds * row;
    }
    return std::sqrt(acc);
}

double projection_norm(const Sinogram& g, int q)
{
    const double ds = g.grid.delta_s();
    double row = 0.0;
    for (int p = 0; p < g.grid.n_s(); ++p) {
        const double v = g.at(q, p);
        row += v * v;
    }
    return std::sqrt(ds * row);
}

double image_norm(const Image& f, std::optional<double> mask_radius)
{
    const double dx = f.grid.delta_x();
    double acc = 0.0;
    for (int i = 0; i < f.grid.n_x(); ++i) {
        for (int j = 0; j < f.grid.n_x(); ++j) {
            if (mask_radius && norm(f.grid.pixel_center(i, j)) > *mask_radius)
                continue;
            const double v = f.at(i, j);
            acc += v * v;
        }
    }
    return std::sqrt(dx * dx * acc);
}

ErrorReport error_report(const Sinogram& truth, const Sinogram& candidate)
{
    check_same_grid(truth, candidate);
    const int n_phi = truth.grid.n_phi();
    const int n_s = truth.grid.n_s();
    const double ds = truth.grid.delta_s();

    ErrorReport rep;
    rep.per_angle_rel_l2.resize(n_phi);

    double num = 0.0, den = 0.0;
    for (int q = 0; q < n_phi; ++q) {
        const double wq = truth.grid.angular_width(q);
        double row_num = 0.0, row_den = 0.0;
        for (int p = 0; p < n_s; ++p) {
            const double d = truth.at(q, p) - candidate.at(q, p);
            row_num += d * d;
            row_den += truth.at(q, p) * truth.at(q, p);
        }
        num += wq * ds * row_num;
        den += wq * ds * row_den;
        if (row_den == 0.0) {
            rep.per_angle_rel_l2[q] = std::numeric_limits<double>::quiet_NaN();
            rep.undefined_angles.push_back(q);
        } else {
            rep.per_angle_rel_l2[q] = std::sqrt(row_num / row_den);
        }
    }
    if (den == 0.0)
        throw std::domain_error("error_report: zero-norm truth sinogram");
    rep.global_rel_l2 = std::sqrt(num / den);

    rep.worst_angle_rel_l2 = 0.0;
    rep.worst_angle_index = -1;
    for (int q = 0; q < n_phi; ++q) {
        const double e = rep.per_angle_rel_l2[q];
        if (!std::isnan(e) && (rep.worst_angle_index < 0 || e > rep.worst_angle_rel_l2)) {
            rep.worst_angle_rel_l2 = e;
            rep.worst_angle_index = q;
        }
    }
    return rep;
}

ErrorReport error_report(const Image& truth, const Image& candidate,
                         std::optional<double> mask_radius)
{
    if (truth.grid.n_x() != candidate.grid.n_x())
        throw std::invalid_argument("error_report: image grids differ");

    double num = 0.0, den = 0.0;
    for (int i = 0; i < truth.grid.n_x(); ++i) {
        for (int j = 0; j < truth.grid.n_x(); ++j) {
            if (mask_radius && norm(truth.grid.pixel_center(i, j)) > *mask_radius)
                continue;
            const double d = truth.at(i, j) - candidate.at(i, j);
            num += d * d;
            den += truth.at(i, j) * truth.at(i, j);
        }
    }
    if (den == 0.0)
        throw std::domain_error("error_report: zero-norm truth image");

    ErrorReport rep;
    rep.global_rel_l2 = std::sqrt(num / den);
    rep.mask_radius = mask_radius;
    return rep;
}

} // namespace radon
