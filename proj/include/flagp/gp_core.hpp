#pragma once

#include <cstdint>
#include <vector>

#include "flagp/rng.hpp"
#include "flagp/types.hpp"

namespace flagp {

constexpr double kDefaultNugget = 1e-7;

// Per-dimension Gaussian-kernel lengthscales in squared-distance units of the
// unit hypercube.
struct Lengthscales {
  Vector l;
};

// Student-t predictive law for one basis weight.
struct PredictiveT {
  double mean = 0.0;
  double scale2 = 0.0;
  Index df = 0;
};

enum class SubsampleMethod { blhs, stratified };

struct SubsampleSpec {
  SubsampleMethod method = SubsampleMethod::blhs;
  Index d_est = 4;    // blhs: divisions per coordinate
  Index m_est = 128;  // stratified: subsample size
  Index replicates = 25;
  int restarts = 3;
  std::uint64_t seed = 0;
};

// Independent Gamma(shape, rate) prior per lengthscale dimension.
struct GammaPrior {
  Vector shape;
  Vector rate;
  double log_pdf(const Vector& l) const;
  Vector dlog_pdf(const Vector& l) const;
};

// Shape 3/2 with the rate set so the prior mode is the squared 10th-percentile
// pairwise distance of the subsample.
GammaPrior default_gamma_prior(const Matrix& X);

// Separable Gaussian correlation exp(-sum_k (x1_k - x2_k)^2 / l_k). The
// nugget is added on the diagonal of the square symmetric case only.
Matrix corr_matrix(const Matrix& X1, const Matrix& X2, const Lengthscales& l,
                   double nugget);
// Correlation vector between the rows of X and a single point.
Vector corr_cross(const Matrix& X, const Vector& x, const Lengthscales& l);

namespace serial {
Matrix corr_matrix(const Matrix& X1, const Matrix& X2, const Lengthscales& l,
                   double nugget);
}  // namespace serial

// Negative log marginal posterior of the lengthscales under the
// reference-prior integrated likelihood (process variance marginalized):
//   (m/2) log(w' C^-1 w) + (1/2) log|C| - log prior(l),  C = corr(X,X,l) + gI.
// Throws NumericalError if the Cholesky factorization fails.
double neg_log_marginal(const Lengthscales& l, const Matrix& X,
                        const Vector& w, double nugget,
                        const GammaPrior& prior);
// Same value plus its gradient with respect to l.
double neg_log_marginal_grad(const Lengthscales& l, const Matrix& X,
                             const Vector& w, double nugget,
                             const GammaPrior& prior, Vector& grad);

// Block Latin hypercube subsample: d_est blocks chosen so that no two share a
// coordinate level; returns indices of the points inside any chosen block.
std::vector<Index> blhs_subsample(const Matrix& X, Index d_est,
                                  std::uint64_t seed);

// Without-replacement sample of size m_est stratified on quantile bins of the
// first principal coordinate.
std::vector<Index> stratified_subsample(const Matrix& X, Index m_est,
                                        std::uint64_t seed);

// MAP lengthscales per bootstrap subsample (log-scale bounded quasi-Newton,
// multi-start), coordinatewise median across replicates.
Lengthscales estimate_lengthscales(const Matrix& X, const Vector& w,
                                   const SubsampleSpec& spec, double nugget);

// Single-subset MAP fit used internally and by the re-estimation benchmark.
Lengthscales map_lengthscales(const Matrix& X, const Vector& w, double nugget,
                              const GammaPrior& prior, int restarts,
                              std::uint64_t seed);

// Closed-form Student-t prediction from pre-scaled inputs (isotropic kernel):
//   mean  = c' C^-1 w
//   scale2 = (Psi/m) [1 - c' C^-1 c],  Psi = w' C^-1 w,  df = m.
PredictiveT student_t_predict(const Matrix& X_nn, const Vector& w_nn,
                              const Vector& x_sc, double nugget);

// mean + sqrt(scale2) * t_df draw.
double sample_t(const PredictiveT& pred, SplitMix64& rng);

}  // namespace flagp
