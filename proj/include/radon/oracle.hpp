#ifndef RADON_ORACLE_HPP
#define RADON_ORACLE_HPP

#include "radon/geometry.hpp"
#include "radon/weights.hpp"

// Independent brute-force references: parametric line/square clipping,
// exhaustive-loop projection, and quadrature of the weight functions. These
// share no code path with the closed forms they check and are allowed to be
// slow.

namespace radon::oracle {

struct ClipResult {
    double chord_length = 0.0;
    /// Length of line-on-square-boundary overlap; nonzero only when the line
    /// contains a full square edge (axis-aligned coincidence).
    double boundary_overlap = 0.0;

    double corrected() const { return chord_length - 0.5 * boundary_overlap; }
};

/// Chord of the line {x.theta(phi) = s} with the axis-aligned square of side
/// delta_x centered at `center`, via parametric slab clipping.
ClipResult clip_line_square(double phi, double s, Vec2 center, double delta_x);

/// Quadruple loop over (q, p, i, j), no index ranges. Guard: n_x <= 64.
Sinogram brute_force_forward(const Image& image, const SinogramGrid& sino_grid,
                             WeightKind kind);

/// Trapezoid integral of t -> omega(phi, t) over its support at ~1e6 nodes;
/// approximately 1 for both weight kinds.
double weight_quadrature(WeightKind kind, double phi, double delta_x, double delta_s);

} // namespace radon::oracle

#endif
