#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "radon/oracle.hpp"
#include "radon/weights.hpp"

using namespace radon;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ray geometry cache invariants")
{
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> phi_dist(0.0, kPi);
    for (int k = 0; k < 2000; ++k) {
        const double phi = phi_dist(rng);
        const double dx = 0.03125;
        const RayGeometryCache c(phi, dx);
        CHECK(c.s_lo >= 0.0);
        CHECK(c.s_lo <= c.s_hi + 1e-15);
        CHECK(c.s_hi <= dx / std::sqrt(2.0) + 1e-15);
        CHECK(c.kappa >= 1.0 - 1e-15);
        CHECK(c.kappa <= std::sqrt(2.0) + 1e-15);
    }
}

TEST_CASE("ray weight: axis aligned values")
{
    const RayGeometryCache c0(0.0, 1.0);
    CHECK(ray_weight(c0, 0.0) == 1.0);        // inside the slab: 1/dx
    CHECK(ray_weight(c0, 0.49) == 1.0);
    CHECK(ray_weight(c0, 0.5) == 0.5);        // line on the pixel edge: half weight
    CHECK(ray_weight(c0, -0.5) == 0.5);
    CHECK(ray_weight(c0, 0.51) == 0.0);

    const RayGeometryCache c90(kPi / 2, 1.0);
    CHECK(ray_weight(c90, 0.0) == 1.0);
    CHECK(ray_weight(c90, 0.5) == 0.5);
    CHECK(ray_weight(c90, 0.7) == 0.0);
}

TEST_CASE("ray weight: diagonal peak is sqrt(2)")
{
    const RayGeometryCache c(kPi / 4, 1.0);
    CHECK(c.s_lo == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(c.s_hi == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(ray_weight(c, 0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(ray_weight(c, c.s_hi) == 0.0);
}

TEST_CASE("ray weight: oblique angle matches the clipping oracle")
{
    // generic ramp sample, checked against the independent clipping oracle
    const double phi = kPi / 6.0;
    const double t = 0.2;
    const RayGeometryCache c(phi, 1.0);
    CHECK(c.s_lo == doctest::Approx(0.5 * (std::cos(phi) - std::sin(phi))).epsilon(1e-14));
    CHECK(t > c.s_lo);
    CHECK(t < c.s_hi);
    const auto clip = oracle::clip_line_square(phi, -t, Vec2{0.0, 0.0}, 1.0);
    CHECK(ray_weight(c, t) == doctest::Approx(clip.corrected()).epsilon(1e-13));
    CHECK(ray_weight(c, t) == doctest::Approx((c.s_hi - t) /
          (std::cos(phi) * std::sin(phi))).epsilon(1e-14));
}

TEST_CASE("pixel weight: hat examples")
{
    CHECK(pixel_weight(0.5, 0.0) == 2.0);    // peak 1/ds
    CHECK(pixel_weight(0.5, 0.25) == 1.0);
    CHECK(pixel_weight(0.5, 0.5) == 0.0);
    CHECK(pixel_weight(0.5, -0.25) == 1.0);
    CHECK(pixel_weight(0.5, 0.7) == 0.0);
    CHECK(pixel_weight(0.1, 0.05) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("support intervals")
{
    const RayGeometryCache c(0.3, 0.25);
    const auto rs = ray_support(c);
    CHECK(rs.lo == -c.s_hi);
    CHECK(rs.hi == c.s_hi);
    const auto ps = pixel_support(0.125);
    CHECK(ps.lo == -0.125);
    CHECK(ps.hi == 0.125);
    CHECK(support_interval(WeightKind::RayDriven, c, 0.125).hi == c.s_hi);
    CHECK(support_interval(WeightKind::PixelDriven, c, 0.125).hi == 0.125);
}

TEST_CASE("weights are even in t")
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> phi_dist(0.0, kPi);
    std::uniform_real_distribution<double> t_dist(-1.0, 1.0);
    for (int k = 0; k < 5000; ++k) {
        const double phi = phi_dist(rng);
        const double t = t_dist(rng) * 0.1;
        const RayGeometryCache c(phi, 0.1);
        CHECK(ray_weight(c, t) == ray_weight(c, -t)); // exact: both use |t|
        CHECK(pixel_weight(0.07, t) == pixel_weight(0.07, -t));
    }
}

TEST_CASE("weight bounds: ray <= sqrt(2)/dx, pixel <= 1/ds")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> phi_dist(0.0, kPi);
    std::uniform_real_distribution<double> t_dist(-0.2, 0.2);
    const double dx = 0.1;
    const double ds = 0.08;
    for (int k = 0; k < 5000; ++k) {
        const RayGeometryCache c(phi_dist(rng), dx);
        const double wr = ray_weight(c, t_dist(rng));
        CHECK(wr >= 0.0);
        CHECK(wr <= std::sqrt(2.0) / dx + 1e-12);
        const double wp = pixel_weight(ds, t_dist(rng));
        CHECK(wp >= 0.0);
        CHECK(wp <= 1.0 / ds + 1e-12);
    }
}

TEST_CASE("quarter-turn symmetry of the ray weight")
{
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> phi_dist(0.0, kPi / 2);
    std::uniform_real_distribution<double> t_dist(-0.15, 0.15);
    const double dx = 0.2;
    for (int k = 0; k < 2000; ++k) {
        const double phi = phi_dist(rng);
        const double t = t_dist(rng);
        const RayGeometryCache c(phi, dx);
        const RayGeometryCache c_quarter(phi + kPi / 2, dx);
        const RayGeometryCache c_mirror(kPi - phi, dx);
        CHECK(ray_weight(c_quarter, t) ==
              doctest::Approx(ray_weight(c, t)).epsilon(1e-11));
        CHECK(ray_weight(c_mirror, t) ==
              doctest::Approx(ray_weight(c, t)).epsilon(1e-11));
    }
}

TEST_CASE("unit mass of both weights via quadrature")
{
    for (double phi : {0.0, 0.1, kPi / 4, 1.0, kPi / 2, 2.5, 3.0}) {
        CHECK(oracle::weight_quadrature(WeightKind::RayDriven, phi, 0.25, 0.2) ==
              doctest::Approx(1.0).epsilon(1e-10));
        CHECK(oracle::weight_quadrature(WeightKind::PixelDriven, phi, 0.25, 0.2) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("dx^2 * ray weight equals the corrected intersection length")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> phi_dist(0.0, kPi);
    std::uniform_real_distribution<double> pos(-1.0, 1.0);
    const double dx = 0.5;
    int checked = 0;
    for (int k = 0; k < 4000; ++k) {
        const double phi = phi_dist(rng);
        const double s = pos(rng);
        const Vec2 center{pos(rng), pos(rng)};
        const Vec2 theta{std::cos(phi), std::sin(phi)};
        const double t = dot(center, theta) - s;
        const RayGeometryCache c(phi, dx);
        // skip the measure-zero breakpoint set where both sides jump
        if (std::abs(std::abs(t) - c.s_hi) < 1e-9 * dx) continue;
        if (std::abs(std::abs(t) - c.s_lo) < 1e-9 * dx) continue;
        const auto clip = oracle::clip_line_square(phi, s, center, dx);
        CHECK(intersection_length_closed_form(phi, s, center, dx) ==
              doctest::Approx(clip.corrected()).epsilon(1e-12));
        ++checked;
    }
    CHECK(checked > 3500);
}

TEST_CASE("intersection length on the boundary set")
{
    // line through a full edge of the square: chord dx, overlap dx, corrected dx/2
    const auto clip = oracle::clip_line_square(0.0, 0.5, Vec2{0.0, 0.0}, 1.0);
    CHECK(clip.chord_length == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(clip.boundary_overlap == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(intersection_length_closed_form(0.0, 0.5, Vec2{0.0, 0.0}, 1.0) ==
          doctest::Approx(clip.corrected()).epsilon(1e-14));

    // diagonal corner touch: zero chord on both sides
    const double s_corner = std::sqrt(0.5);
    const auto corner = oracle::clip_line_square(kPi / 4, s_corner, Vec2{0.0, 0.0}, 1.0);
    CHECK(corner.corrected() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(intersection_length_closed_form(kPi / 4, s_corner, Vec2{0.0, 0.0}, 1.0) ==
          doctest::Approx(0.0).epsilon(1e-12));
}
