#ifndef RADON_OPERATORS_HPP
#define RADON_OPERATORS_HPP

#include <vector>

#include "radon/geometry.hpp"
#include "radon/weights.hpp"

// Matrix-free forward projection and backprojection plus the support-interval
// index formulas. Dense matrix assembly is provided for small grids only, as
// the reference for adjointness and equivalence tests.

namespace radon {

/// Inclusive index range; empty when hi < lo.
struct IndexRange {
    int lo = 0;
    int hi = -1;
    bool empty() const { return hi < lo; }
    int count() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(int i) const { return i >= lo && i <= hi; }
};

/// Range of image indices i with x_ij.theta - s_p inside the weight support,
/// for fixed j. Requires |theta_x| >= 1/sqrt(2); callers below the threshold
/// must use the swapped variant. The range is widened by one index per side,
/// so it may over-cover (extra weights evaluate to zero) but never under-cover.
IndexRange image_index_range(const ImageGrid& img, const SinogramGrid& sino,
                             WeightKind kind, int q, int p, int j);

/// Swapped variant: range of j for fixed i, dividing by theta_y.
IndexRange image_index_range_swapped(const ImageGrid& img, const SinogramGrid& sino,
                                     WeightKind kind, int q, int p, int i);

/// Range of detector indices p with x_ij.theta - s_p inside the weight support.
IndexRange detector_index_range(const ImageGrid& img, const SinogramGrid& sino,
                                WeightKind kind, int i, int j, int q);

/// (A f)[qp] = dx^2 sum_ij omega(phi_q, x_ij.theta_q - s_p) f[ij].
/// Image and sinogram resolutions are independent.
Sinogram forward_project(const Image& image, const SinogramGrid& sino_grid, WeightKind kind);

/// (B g)[ij] = ds sum_q |Phi_q| sum_p omega(phi_q, x_ij.theta_q - s_p) g[qp].
Image back_project(const Sinogram& sino, const ImageGrid& img_grid, WeightKind kind);

/// Explicit A and B for testing. A is (n_phi*n_s) x n_x^2 row-major,
/// B is n_x^2 x (n_phi*n_s) row-major; for uniform angular widths
/// A^T = (dx^2/(dphi*ds)) B entrywise.
struct DenseOperatorPair {
    DiscretizationParams params;
    WeightKind kind;
    std::vector<double> a; // [q*n_s+p][i*n_x+j]
    std::vector<double> b; // [i*n_x+j][q*n_s+p]

    int rows() const { return params.n_phi() * params.n_s; }
    int cols() const { return params.n_x * params.n_x; }

    std::vector<double> apply_forward(const std::vector<double>& f) const;
    std::vector<double> apply_backward(const std::vector<double>& g) const;
};

/// Guard: n_x^2 * n_phi * n_s must not exceed 1e8 entries.
DenseOperatorPair assemble_dense(const DiscretizationParams& params, WeightKind kind);

} // namespace radon

#endif
