#include "radon/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace radon {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_angles(const std::vector<double>& angles)
{
    if (angles.empty())
        throw std::invalid_argument("angle set must be non-empty");
    for (size_t q = 0; q < angles.size(); ++q) {
        if (!(angles[q] >= 0.0 && angles[q] < kPi))
            throw std::invalid_argument("angle " + std::to_string(angles[q]) +
                                        " outside [0, pi)");
        if (q > 0 && !(angles[q] > angles[q - 1]))
            throw std::invalid_argument("angles must be strictly increasing");
    }
}

// Literal angular-pixel construction: Phi_0 = [0, (phi_0+phi_1)/2),
// Phi_q = [(phi_{q-1}+phi_q)/2, (phi_q+phi_{q+1})/2), Phi_last ends at pi.
std::vector<double> literal_widths(const std::vector<double>& angles)
{
    const size_t n = angles.size();
    std::vector<double> w(n);
    if (n == 1) {
        w[0] = kPi;
        return w;
    }
    w[0] = 0.5 * (angles[0] + angles[1]);
    w[n - 1] = kPi - 0.5 * (angles[n - 2] + angles[n - 1]);
    for (size_t q = 1; q + 1 < n; ++q)
        w[q] = 0.5 * (angles[q + 1] - angles[q - 1]);
    return w;
}

} // namespace

double DiscretizationParams::delta_phi() const
{
    return *std::max_element(angular_widths.begin(), angular_widths.end());
}

bool DiscretizationParams::uniform_widths() const
{
    for (double w : angular_widths)
        if (std::abs(w - angular_widths.front()) > 1e-14)
            return false;
    return true;
}

DiscretizationParams make_params(int n_x, int n_s, const AngleSetKind& angle_set)
{
    if (n_x < 1 || n_s < 1)
        throw std::invalid_argument("n_x and n_s must be positive");

    DiscretizationParams par;
    par.n_x = n_x;
    par.n_s = n_s;

    if (const auto* full = std::get_if<FullEquispaced>(&angle_set)) {
        if (full->n_phi < 1)
            throw std::invalid_argument("FullEquispaced: n_phi must be positive");
        par.angles.resize(full->n_phi);
        for (int q = 0; q < full->n_phi; ++q)
            par.angles[q] = q * kPi / full->n_phi;
        // Uniform widths pi/n_phi; the literal boundary-pixel construction would
        // give pi/(2n) and 3pi/(2n) at the ends, but the half-turn symmetry
        // L_{phi+pi,s} = L_{phi,-s} makes the uniform convention consistent.
        par.angular_widths.assign(full->n_phi, kPi / full->n_phi);
    } else if (const auto* lim = std::get_if<LimitedAngles>(&angle_set)) {
        if (lim->n_phi < 1)
            throw std::invalid_argument("LimitedAngles: n_phi must be positive");
        if (!(lim->a >= 0.0 && lim->a < lim->b && lim->b <= kPi))
            throw std::invalid_argument("LimitedAngles: need 0 <= a < b <= pi");
        const double width = (lim->b - lim->a) / lim->n_phi;
        par.angles.resize(lim->n_phi);
        for (int q = 0; q < lim->n_phi; ++q)
            par.angles[q] = lim->a + q * width;
        par.angular_widths.assign(lim->n_phi, width);
    } else {
        const auto& exp = std::get<ExplicitAngles>(angle_set);
        validate_angles(exp.angles);
        par.angles = exp.angles;
        par.angular_widths = literal_widths(par.angles);
    }
    return par;
}

} // namespace radon
