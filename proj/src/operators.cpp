#include "radon/operators.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "radon/parallel.hpp"

namespace radon {

namespace {

constexpr double kSwapThreshold = 0.70710678118654752440; // 1/sqrt(2)

// Integer range [floor(min)-1, ceil(max)+1] of the two real bounds, clamped to
// [0, n-1]. Widening by one absorbs floating-point rounding of the bound
// division; under-coverage would be a correctness bug, over-coverage only
// touches zero weights.
IndexRange widen_and_clamp(double b0, double b1, int n)
{
    const double lo_raw = std::min(b0, b1);
    const double hi_raw = std::max(b0, b1);
    int lo = static_cast<int>(std::floor(lo_raw)) - 1;
    int hi = static_cast<int>(std::ceil(hi_raw)) + 1;
    if (lo < 0) lo = 0;
    if (hi > n - 1) hi = n - 1;
    return {lo, hi};
}

SupportInterval support_for(WeightKind kind, double phi, double delta_x, double delta_s)
{
    if (kind == WeightKind::RayDriven)
        return ray_support(RayGeometryCache(phi, delta_x));
    return pixel_support(delta_s);
}

void require_finite(const std::vector<double>& v, const char* what)
{
    for (double x : v)
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string(what) + " contains non-finite values");
}

// Shared kernel for both loop orders of the forward projection. Weight is a
// callable double(double t); returns the plain weight sum for one (q, p).
template <typename Weight>
double forward_entry(const double* f, int n_x, const double* centers, double theta_x,
                     double theta_y, bool swap, double s_p, double c_lo, double c_hi,
                     double inv_div, double inv_dx, Weight&& w)
{
    double val = 0.0;
    if (!swap) {
        for (int j = 0; j < n_x; ++j) {
            const double fixed = centers[j] * theta_y;
            const double b0 = (c_lo + s_p - fixed) * inv_div + inv_dx - 0.5;
            const double b1 = (c_hi + s_p - fixed) * inv_div + inv_dx - 0.5;
            const IndexRange r = widen_and_clamp(b0, b1, n_x);
            for (int i = r.lo; i <= r.hi; ++i) {
                const double t = centers[i] * theta_x + fixed - s_p;
                val += w(t) * f[static_cast<size_t>(i) * n_x + j];
            }
        }
    } else {
        for (int i = 0; i < n_x; ++i) {
            const double fixed = centers[i] * theta_x;
            const double b0 = (c_lo + s_p - fixed) * inv_div + inv_dx - 0.5;
            const double b1 = (c_hi + s_p - fixed) * inv_div + inv_dx - 0.5;
            const IndexRange r = widen_and_clamp(b0, b1, n_x);
            const double* row = f + static_cast<size_t>(i) * n_x;
            for (int j = r.lo; j <= r.hi; ++j) {
                const double t = fixed + centers[j] * theta_y - s_p;
                val += w(t) * row[j];
            }
        }
    }
    return val;
}

} // namespace

IndexRange image_index_range(const ImageGrid& img, const SinogramGrid& sino,
                             WeightKind kind, int q, int p, int j)
{
    const Vec2 theta = sino.direction(q);
    assert(std::abs(theta.x) >= kSwapThreshold &&
           "image_index_range requires |theta_x| >= 1/sqrt(2); use the swapped variant");
    const double dx = img.delta_x();
    const SupportInterval sup = support_for(kind, sino.angle(q), dx, sino.delta_s());
    const double s_p = sino.detector_center(p);
    const double fixed = img.axis_center(j) * theta.y;
    const double b0 = ((sup.lo + s_p - fixed) / theta.x + 1.0) / dx - 0.5;
    const double b1 = ((sup.hi + s_p - fixed) / theta.x + 1.0) / dx - 0.5;
    return widen_and_clamp(b0, b1, img.n_x());
}

IndexRange image_index_range_swapped(const ImageGrid& img, const SinogramGrid& sino,
                                     WeightKind kind, int q, int p, int i)
{
    const Vec2 theta = sino.direction(q);
    assert(std::abs(theta.y) > 0.0 && "swapped range requires theta_y != 0");
    const double dx = img.delta_x();
    const SupportInterval sup = support_for(kind, sino.angle(q), dx, sino.delta_s());
    const double s_p = sino.detector_center(p);
    const double fixed = img.axis_center(i) * theta.x;
    const double b0 = ((sup.lo + s_p - fixed) / theta.y + 1.0) / dx - 0.5;
    const double b1 = ((sup.hi + s_p - fixed) / theta.y + 1.0) / dx - 0.5;
    return widen_and_clamp(b0, b1, img.n_x());
}

IndexRange detector_index_range(const ImageGrid& img, const SinogramGrid& sino,
                                WeightKind kind, int i, int j, int q)
{
    const Vec2 theta = sino.direction(q);
    const double ds = sino.delta_s();
    const SupportInterval sup = support_for(kind, sino.angle(q), img.delta_x(), ds);
    const double t = dot(img.pixel_center(i, j), theta);
    const double b0 = (t - sup.hi + 1.0) / ds - 0.5;
    const double b1 = (t - sup.lo + 1.0) / ds - 0.5;
    return widen_and_clamp(b0, b1, sino.n_s());
}

Sinogram forward_project(const Image& image, const SinogramGrid& sino_grid, WeightKind kind)
{
    require_finite(image.values, "image");

    const int n_x = image.grid.n_x();
    const int n_s = sino_grid.n_s();
    const int n_phi = sino_grid.n_phi();
    const double dx = image.grid.delta_x();
    const double ds = sino_grid.delta_s();
    const double dx2 = dx * dx;

    std::vector<double> centers(n_x);
    for (int i = 0; i < n_x; ++i)
        centers[i] = image.grid.axis_center(i);

    Sinogram out{sino_grid};
    const double* f = image.values.data();
    double* g = out.values.data();

    parallel_for(n_phi, [&](int64_t q64) {
        const int q = static_cast<int>(q64);
        const double phi = sino_grid.angle(q);
        const Vec2 theta = sino_grid.direction(q);
        const bool swap = std::abs(theta.x) < kSwapThreshold;
        const double div = swap ? theta.y : theta.x;
        const double inv_div = 1.0 / (div * dx);
        const double inv_dx = 1.0 / dx;
        const RayGeometryCache cache(phi, dx);
        const SupportInterval sup =
            kind == WeightKind::RayDriven ? ray_support(cache) : pixel_support(ds);
        double* row = g + static_cast<size_t>(q) * n_s;

        if (kind == WeightKind::RayDriven) {
            for (int p = 0; p < n_s; ++p) {
                const double s_p = (p + 0.5) * ds - 1.0;
                row[p] = dx2 * forward_entry(f, n_x, centers.data(), theta.x, theta.y, swap,
                                             s_p, sup.lo, sup.hi, inv_div, inv_dx,
                                             [&](double t) { return ray_weight(cache, t); });
            }
        } else {
            for (int p = 0; p < n_s; ++p) {
                const double s_p = (p + 0.5) * ds - 1.0;
                row[p] = dx2 * forward_entry(f, n_x, centers.data(), theta.x, theta.y, swap,
                                             s_p, sup.lo, sup.hi, inv_div, inv_dx,
                                             [&](double t) { return pixel_weight(ds, t); });
            }
        }
    });
    return out;
}

Image back_project(const Sinogram& sino, const ImageGrid& img_grid, WeightKind kind)
{
    require_finite(sino.values, "sinogram");

    const int n_x = img_grid.n_x();
    const int n_s = sino.grid.n_s();
    const int n_phi = sino.grid.n_phi();
    const double dx = img_grid.delta_x();
    const double ds = sino.grid.delta_s();

    // per-angle constants
    std::vector<RayGeometryCache> caches;
    caches.reserve(n_phi);
    std::vector<double> theta_x(n_phi), theta_y(n_phi), width(n_phi), sup_hi(n_phi);
    for (int q = 0; q < n_phi; ++q) {
        caches.emplace_back(sino.grid.angle(q), dx);
        const Vec2 th = sino.grid.direction(q);
        theta_x[q] = th.x;
        theta_y[q] = th.y;
        width[q] = sino.grid.angular_width(q);
        sup_hi[q] = kind == WeightKind::RayDriven ? caches[q].s_hi : ds;
    }

    std::vector<double> centers(n_x);
    for (int i = 0; i < n_x; ++i)
        centers[i] = img_grid.axis_center(i);

    Image out{img_grid};
    const double* g = sino.values.data();
    double* f = out.values.data();
    const double inv_ds = 1.0 / ds;

    parallel_for(n_x, [&](int64_t i64) {
        const int i = static_cast<int>(i64);
        const double x_i = centers[i];
        double* frow = f + static_cast<size_t>(i) * n_x;
        for (int j = 0; j < n_x; ++j) {
            const double y_j = centers[j];
            double val = 0.0;
            for (int q = 0; q < n_phi; ++q) {
                const double t0 = x_i * theta_x[q] + y_j * theta_y[q];
                const double b0 = (t0 - sup_hi[q] + 1.0) * inv_ds - 0.5;
                const double b1 = (t0 + sup_hi[q] + 1.0) * inv_ds - 0.5;
                const IndexRange r = widen_and_clamp(b0, b1, n_s);
                if (r.empty()) continue;
                const double* grow = g + static_cast<size_t>(q) * n_s;
                double inner = 0.0;
                if (kind == WeightKind::RayDriven) {
                    const RayGeometryCache& c = caches[q];
                    for (int p = r.lo; p <= r.hi; ++p) {
                        const double t = t0 - ((p + 0.5) * ds - 1.0);
                        inner += ray_weight(c, t) * grow[p];
                    }
                } else {
                    for (int p = r.lo; p <= r.hi; ++p) {
                        const double t = t0 - ((p + 0.5) * ds - 1.0);
                        inner += pixel_weight(ds, t) * grow[p];
                    }
                }
                val += width[q] * inner;
            }
            frow[j] = ds * val;
        }
    });
    return out;
}

std::vector<double> DenseOperatorPair::apply_forward(const std::vector<double>& f) const
{
    const int r = rows(), c = cols();
    std::vector<double> out(static_cast<size_t>(r), 0.0);
    for (int row = 0; row < r; ++row) {
        double acc = 0.0;
        const double* arow = a.data() + static_cast<size_t>(row) * c;
        for (int col = 0; col < c; ++col)
            acc += arow[col] * f[col];
        out[row] = acc;
    }
    return out;
}

std::vector<double> DenseOperatorPair::apply_backward(const std::vector<double>& g) const
{
    const int r = rows(), c = cols();
    std::vector<double> out(static_cast<size_t>(c), 0.0);
    for (int col = 0; col < c; ++col) {
        double acc = 0.0;
        const double* brow = b.data() + static_cast<size_t>(col) * r;
        for (int row = 0; row < r; ++row)
            acc += brow[row] * g[row];
        out[col] = acc;
    }
    return out;
}

DenseOperatorPair assemble_dense(const DiscretizationParams& params, WeightKind kind)
{
    const int n_x = params.n_x;
    const int n_s = params.n_s;
    const int n_phi = params.n_phi();
    const double entries = static_cast<double>(n_x) * n_x * n_phi * n_s;
    if (entries > 1e8)
        throw std::invalid_argument("assemble_dense: grid too large (" +
                                    std::to_string(entries) + " entries > 1e8)");

    DenseOperatorPair pair{params, kind, {}, {}};
    const int rows = n_phi * n_s;
    const int cols = n_x * n_x;
    pair.a.assign(static_cast<size_t>(rows) * cols, 0.0);
    pair.b.assign(static_cast<size_t>(cols) * rows, 0.0);
    if (rows == 0)
        return pair;

    const double dx = params.delta_x();
    const double ds = params.delta_s();
    for (int q = 0; q < n_phi; ++q) {
        const double phi = params.angles[q];
        const double wq = params.angular_widths[q];
        const RayGeometryCache cache(phi, dx);
        const Vec2 theta{std::cos(phi), std::sin(phi)};
        for (int p = 0; p < n_s; ++p) {
            const double s_p = (p + 0.5) * ds - 1.0;
            const size_t row = static_cast<size_t>(q) * n_s + p;
            for (int i = 0; i < n_x; ++i) {
                const double x_i = (i + 0.5) * dx - 1.0;
                for (int j = 0; j < n_x; ++j) {
                    const double y_j = (j + 0.5) * dx - 1.0;
                    const double t = x_i * theta.x + y_j * theta.y - s_p;
                    const double w = kind == WeightKind::RayDriven ? ray_weight(cache, t)
                                                                   : pixel_weight(ds, t);
                    const size_t col = static_cast<size_t>(i) * n_x + j;
                    pair.a[row * cols + col] = dx * dx * w;
                    pair.b[col * rows + row] = ds * wq * w;
                }
            }
        }
    }
    return pair;
}

} // namespace radon
