#ifndef RADON_GEOMETRY_HPP
#define RADON_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Discretization geometry for the 2-D parallel-beam setting. All coordinates
// are normalized: the image lives on [-1,1]^2, detector offsets on [-1,1],
// angles on [0,pi). Physical units are a pure output scaling handled by the CLI.

namespace radon {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Angle-set selector: equispaced over the full half-turn, equispaced over a
/// limited interval [a,b], or an explicit strictly increasing list.
struct FullEquispaced {
    int n_phi = 0;
};
struct LimitedAngles {
    double a = 0.0;
    double b = 0.0;
    int n_phi = 0;
};
struct ExplicitAngles {
    std::vector<double> angles;
};
using AngleSetKind = std::variant<FullEquispaced, LimitedAngles, ExplicitAngles>;

/// All grid resolutions in one place. delta_x and delta_s are derived from the
/// pixel counts and never stored independently of them.
struct DiscretizationParams {
    int n_x = 0;                        // pixels per image axis
    int n_s = 0;                        // detector pixels
    std::vector<double> angles;         // strictly increasing, in [0, pi)
    std::vector<double> angular_widths; // |Phi_q| > 0

    double delta_x() const { return 2.0 / n_x; }
    double delta_s() const { return 2.0 / n_s; }
    double delta_phi() const; // max_q |Phi_q|
    int n_phi() const { return static_cast<int>(angles.size()); }
    bool uniform_widths() const;
};

DiscretizationParams make_params(int n_x, int n_s, const AngleSetKind& angle_set);

/// Image-side view of the params: pixel centers and index checks.
class ImageGrid {
public:
    explicit ImageGrid(DiscretizationParams params) : params_(std::move(params)) {}

    const DiscretizationParams& params() const { return params_; }
    int n_x() const { return params_.n_x; }
    double delta_x() const { return params_.delta_x(); }

    // x_ij = ((i+1/2)dx - 1, (j+1/2)dx - 1); i indexes x, j indexes y
    Vec2 pixel_center(int i, int j) const
    {
        check_index(i);
        check_index(j);
        const double dx = delta_x();
        return {(i + 0.5) * dx - 1.0, (j + 0.5) * dx - 1.0};
    }

    double axis_center(int i) const
    {
        check_index(i);
        return (i + 0.5) * delta_x() - 1.0;
    }

private:
    void check_index(int i) const
    {
        if (i < 0 || i >= params_.n_x)
            throw std::out_of_range("ImageGrid: pixel index " + std::to_string(i) +
                                    " out of range [0," + std::to_string(params_.n_x) + ")");
    }
    DiscretizationParams params_;
};

/// Sinogram-side view: detector centers and per-angle direction vectors.
class SinogramGrid {
public:
    explicit SinogramGrid(DiscretizationParams params) : params_(std::move(params)) {}

    const DiscretizationParams& params() const { return params_; }
    int n_s() const { return params_.n_s; }
    int n_phi() const { return params_.n_phi(); }
    double delta_s() const { return params_.delta_s(); }

    double detector_center(int p) const
    {
        if (p < 0 || p >= params_.n_s)
            throw std::out_of_range("SinogramGrid: detector index " + std::to_string(p) +
                                    " out of range [0," + std::to_string(params_.n_s) + ")");
        return (p + 0.5) * delta_s() - 1.0;
    }

    double angle(int q) const { return params_.angles.at(static_cast<size_t>(q)); }
    double angular_width(int q) const { return params_.angular_widths.at(static_cast<size_t>(q)); }

    Vec2 direction(int q) const
    {
        const double phi = angle(q);
        return {std::cos(phi), std::sin(phi)};
    }
    Vec2 perpendicular(int q) const
    {
        const double phi = angle(q);
        return {-std::sin(phi), std::cos(phi)};
    }

private:
    DiscretizationParams params_;
};

/// Row-major pixel coefficients f_ij at [i*n_x + j].
struct Image {
    ImageGrid grid;
    std::vector<double> values;

    Image(ImageGrid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v))
    {
        const size_t want = static_cast<size_t>(grid.n_x()) * grid.n_x();
        if (values.size() != want)
            throw std::invalid_argument("Image: value count does not match grid");
    }
    explicit Image(ImageGrid g)
        : grid(std::move(g)), values(static_cast<size_t>(grid.n_x()) * grid.n_x(), 0.0)
    {
    }

    double& at(int i, int j) { return values[static_cast<size_t>(i) * grid.n_x() + j]; }
    double at(int i, int j) const { return values[static_cast<size_t>(i) * grid.n_x() + j]; }
};

/// Row-major sinogram coefficients g_qp at [q*n_s + p].
struct Sinogram {
    SinogramGrid grid;
    std::vector<double> values;

    Sinogram(SinogramGrid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v))
    {
        const size_t want = static_cast<size_t>(grid.n_phi()) * grid.n_s();
        if (values.size() != want)
            throw std::invalid_argument("Sinogram: value count does not match grid");
    }
    explicit Sinogram(SinogramGrid g)
        : grid(std::move(g)), values(static_cast<size_t>(grid.n_phi()) * grid.n_s(), 0.0)
    {
    }

    double& at(int q, int p) { return values[static_cast<size_t>(q) * grid.n_s() + p]; }
    double at(int q, int p) const { return values[static_cast<size_t>(q) * grid.n_s() + p]; }
};

} // namespace radon

#endif
