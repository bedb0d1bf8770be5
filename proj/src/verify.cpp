#include "radon/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "radon/metrics.hpp"
#include "radon/operators.hpp"
#include "radon/oracle.hpp"
#include "radon/phantoms.hpp"

namespace radon::verify {

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
    bool pass = true;
    double worst = 0.0;
    long cases = 0;

    void record(double err, double tol)
    {
        ++cases;
        if (err > worst) worst = err;
        if (!(err <= tol)) pass = false;
    }
};

GroupResult finish(const std::string& name, const Check& c)
{
    std::ostringstream detail;
    detail << c.cases << " cases, worst deviation " << c.worst;
    return {name, c.pass, detail.str()};
}

GroupResult check_clipping_equivalence(long n_cases, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> uphi(0.0, kPi);
    std::uniform_real_distribution<double> us(-1.2, 1.2);
    std::uniform_real_distribution<double> uc(-1.0, 1.0);
    std::uniform_real_distribution<double> udx(0.05, 1.0);

    Check c;
    for (long k = 0; k < n_cases; ++k) {
        const double phi = uphi(rng);
        const double s = us(rng);
        const Vec2 center{uc(rng), uc(rng)};
        const double dx = udx(rng);

        const RayGeometryCache cache(phi, dx);
        const double offset = std::abs(center.x * std::cos(phi) + center.y * std::sin(phi) - s);
        // skip the measure-zero boundary set where the two branches differ
        if (std::abs(offset - cache.s_lo) < 1e-9 * dx ||
            std::abs(offset - cache.s_hi) < 1e-9 * dx)
            continue;

        const auto clip = oracle::clip_line_square(phi, s, center, dx);
        const double closed = intersection_length_closed_form(phi, s, center, dx);
        c.record(std::abs(clip.corrected() - closed), 1e-12 * dx);
    }
    return finish("clipping-oracle equivalence", c);
}

GroupResult check_unit_mass(long n_angles, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> uphi(0.0, kPi);
    Check c;
    for (long k = 0; k < n_angles; ++k) {
        const double phi = k == 0 ? 0.0 : (k == 1 ? kPi / 4 : uphi(rng));
        c.record(std::abs(oracle::weight_quadrature(WeightKind::RayDriven, phi, 0.25, 0.1) - 1.0),
                 1e-10);
        c.record(std::abs(oracle::weight_quadrature(WeightKind::PixelDriven, phi, 0.25, 0.1) - 1.0),
                 1e-10);
    }
    return finish("weight unit mass", c);
}

GroupResult check_dense_equivalence(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> uval(-1.0, 1.0);
    Check c;
    for (int n_x : {3, 5, 8, 16}) {
        for (int n_s : {4, 7, 16}) {
            for (int n_phi : {1, 3, 8}) {
                const auto par = make_params(n_x, n_s, FullEquispaced{n_phi});
                for (WeightKind kind : {WeightKind::RayDriven, WeightKind::PixelDriven}) {
                    const auto dense = assemble_dense(par, kind);
                    std::vector<double> fv(static_cast<size_t>(n_x) * n_x);
                    for (double& v : fv) v = uval(rng);
                    Image f{ImageGrid{par}, fv};
                    const Sinogram g = forward_project(f, SinogramGrid{par}, kind);
                    const auto ref = dense.apply_forward(fv);
                    for (size_t k = 0; k < ref.size(); ++k)
                        c.record(std::abs(g.values[k] - ref[k]), 1e-14);

                    std::vector<double> gv(static_cast<size_t>(n_phi) * n_s);
                    for (double& v : gv) v = uval(rng);
                    Sinogram gs{SinogramGrid{par}, gv};
                    const Image bp = back_project(gs, ImageGrid{par}, kind);
                    const auto bref = dense.apply_backward(gv);
                    for (size_t k = 0; k < bref.size(); ++k)
                        c.record(std::abs(bp.values[k] - bref[k]), 1e-14);
                }
            }
        }
    }
    return finish("matrix-free vs dense", c);
}

GroupResult check_brute_force(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> uval(-1.0, 1.0);
    Check c;
    for (int n_x : {4, 11, 16}) {
        const auto par = make_params(n_x, 12, FullEquispaced{6});
        std::vector<double> fv(static_cast<size_t>(n_x) * n_x);
        for (double& v : fv) v = uval(rng);
        Image f{ImageGrid{par}, fv};
        for (WeightKind kind : {WeightKind::RayDriven, WeightKind::PixelDriven}) {
            const Sinogram fast = forward_project(f, SinogramGrid{par}, kind);
            const Sinogram slow = oracle::brute_force_forward(f, SinogramGrid{par}, kind);
            for (size_t k = 0; k < fast.values.size(); ++k)
                c.record(std::abs(fast.values[k] - slow.values[k]), 1e-14);
        }
    }
    return finish("brute-force forward equivalence", c);
}

GroupResult check_adjointness(long pairs, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> uval(-1.0, 1.0);
    Check c;
    struct Shape {
        int n_x, n_s;
    };
    for (Shape sh : {Shape{24, 24}, Shape{16, 64}, Shape{64, 16}}) {
        const auto par = make_params(sh.n_x, sh.n_s, FullEquispaced{9});
        const ImageGrid img_grid{par};
        const SinogramGrid sino_grid{par};
        const double dx2 = par.delta_x() * par.delta_x();
        const double ds = par.delta_s();
        for (WeightKind kind : {WeightKind::RayDriven, WeightKind::PixelDriven}) {
            for (long k = 0; k < pairs; ++k) {
                std::vector<double> fv(static_cast<size_t>(sh.n_x) * sh.n_x);
                for (double& v : fv) v = uval(rng);
                std::vector<double> gv(static_cast<size_t>(par.n_phi()) * sh.n_s);
                for (double& v : gv) v = uval(rng);
                Image f{img_grid, fv};
                Sinogram g{sino_grid, gv};

                const Sinogram af = forward_project(f, sino_grid, kind);
                const Image bg = back_project(g, img_grid, kind);

                double lhs = 0.0;
                for (int q = 0; q < par.n_phi(); ++q)
                    for (int p = 0; p < sh.n_s; ++p)
                        lhs += par.angular_widths[q] * ds * af.at(q, p) * g.at(q, p);
                double rhs = 0.0;
                for (size_t idx = 0; idx < fv.size(); ++idx)
                    rhs += dx2 * fv[idx] * bg.values[idx];

                const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
                c.record(std::abs(lhs - rhs) / scale, 1e-12);
            }
        }
    }
    return finish("weighted adjointness", c);
}

GroupResult check_weight_sums(long n_cases, std::mt19937_64& rng)
{
    Check c;
    std::uniform_int_distribution<int> upick(0, 2);
    const int sizes[3][2] = {{32, 32}, {24, 48}, {48, 24}};
    for (long k = 0; k < n_cases; ++k) {
        const int* sz = sizes[upick(rng)];
        const int n_x = sz[0], n_s = sz[1];
        const auto par = make_params(n_x, n_s, FullEquispaced{7});
        const ImageGrid img{par};
        const SinogramGrid sino{par};
        const double dx = par.delta_x(), ds = par.delta_s();

        std::uniform_int_distribution<int> uq(0, par.n_phi() - 1);
        std::uniform_int_distribution<int> up(0, n_s - 1);
        std::uniform_int_distribution<int> ui(0, n_x - 1);
        const int q = uq(rng), p = up(rng), i = ui(rng), j = ui(rng);
        const RayGeometryCache cache(par.angles[q], dx);
        const Vec2 theta = sino.direction(q);
        const double s_p = sino.detector_center(p);

        // sum over pixels, ray driven: <= sqrt(8)/dx^2
        double sum_ij_rd = 0.0, sum_ij_pd = 0.0;
        for (int a = 0; a < n_x; ++a) {
            for (int b = 0; b < n_x; ++b) {
                const double t = dot(img.pixel_center(a, b), theta) - s_p;
                sum_ij_rd += ray_weight(cache, t);
                sum_ij_pd += pixel_weight(ds, t);
            }
        }
        c.record(std::max(0.0, sum_ij_rd - std::sqrt(8.0) / (dx * dx)), 1e-9);
        const double pd_bound = std::ceil(ds / dx) * 4.0 * std::sqrt(2.0) / (dx * ds);
        c.record(std::max(0.0, sum_ij_pd - pd_bound), 1e-9);

        // sum over detector bins
        const double t_center = dot(img.pixel_center(i, j), theta);
        double sum_p_rd = 0.0, sum_p_pd = 0.0;
        for (int b = 0; b < n_s; ++b) {
            const double t = t_center - sino.detector_center(b);
            sum_p_rd += ray_weight(cache, t);
            sum_p_pd += pixel_weight(ds, t);
        }
        if (std::abs(t_center) <= 1.0 - dx / std::sqrt(2.0))
            c.record(std::max(0.0, std::abs(sum_p_rd - 1.0 / ds) - std::sqrt(8.0) / dx), 1e-9);
        else
            c.record(std::max(0.0, sum_p_rd - (1.0 / ds + std::sqrt(8.0) / dx)), 1e-9);

        const double s0 = sino.detector_center(0), sN = sino.detector_center(n_s - 1);
        if (t_center >= s0 && t_center <= sN)
            c.record(std::abs(sum_p_pd - 1.0 / ds) * ds, 1e-14);
        else
            c.record(std::max(0.0, sum_p_pd - 1.0 / ds) * ds, 1e-14);
    }
    return finish("weight sum bounds", c);
}

} // namespace

std::vector<GroupResult> run(Level level)
{
    const bool full = level == Level::Full;
    std::mt19937_64 rng(0x5eedULL);

    std::vector<GroupResult> results;
    results.push_back(check_clipping_equivalence(full ? 10000 : 1000, rng));
    results.push_back(check_unit_mass(full ? 20 : 6, rng));
    results.push_back(check_dense_equivalence(rng));
    results.push_back(check_brute_force(rng));
    results.push_back(check_adjointness(full ? 30 : 10, rng));
    results.push_back(check_weight_sums(full ? 500 : 100, rng));
    return results;
}

} // namespace radon::verify
