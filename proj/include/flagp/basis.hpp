#pragma once

#include <cstdint>

#include "flagp/types.hpp"

namespace flagp {

// Truncated orthogonal basis of a standardized output matrix. With
// Z = U D V^T, B holds the first p columns of U D / sqrt(M) and W the first
// p rows of sqrt(M) V^T, so Z ~ B W, (1/M) W W^T = I and B^T B = D^2 / M.
struct BasisModel {
  Matrix B;               // d_y x p
  Matrix W;               // p x M
  Vector singular_values; // min(d_y, M)
  Index p = 0;
  double var_explained = 0.0;

  Index output_dim() const { return B.rows(); }
  Index num_runs() const { return W.cols(); }
};

// Number of components: the smallest p whose cumulative squared singular
// values reach min_var_frac, or a fixed p.
struct BasisSelector {
  double min_var_frac = 0.95;  // used when fixed_p == 0
  Index fixed_p = 0;
};

BasisModel svd_basis(const Matrix& Z_std, const BasisSelector& selector);

// Randomized SVD with oversampling and power iterations; same contract as
// svd_basis at fixed p, deterministic under seed.
BasisModel rsvd_basis(const Matrix& Z_std, Index p, Index oversample,
                      Index power_iters, std::uint64_t seed);

// B * W_any for any p x k weight matrix.
Matrix reconstruct(const BasisModel& basis, const Matrix& W_any);

}  // namespace flagp
