#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagp/emulator.hpp"

namespace flagp {

struct InverseGammaPrior {
  double alpha = 1.0;
  double beta = 0.001;
};
struct HalfCauchyPrior {
  double scale = 0.5;
};

// Prior on the observation variance sigma^2_y (standardized output units).
struct Sigma2Prior {
  enum class Kind { inverse_gamma, half_cauchy } kind = Kind::inverse_gamma;
  InverseGammaPrior ig;
  HalfCauchyPrior hc;
  double log_pdf(double sigma2) const;
};

// User-supplied discrepancy basis over the functional index (standardized
// output space).
struct DiscrepancySpec {
  Matrix K;  // d_y x p_delta, full column rank
  bool estimate_nugget = true;
  int refit_every = 1;  // MCMC iterations between lengthscale refits
};

// Full separable-Gaussian GPs over the rows of the projected residual matrix.
struct DiscrepancyModel {
  Matrix V;  // p_delta x n projected residuals
  std::vector<Lengthscales> lengthscales;
  std::vector<double> nuggets;
  Matrix X_F;  // n x d_x (unit hypercube)

  // Student-t predictive (df = n) of component j at x.
  PredictiveT predict(Index j, const Vector& x) const;
};

struct CalibrationProblem {
  FlaGPModel model;  // fit on joint [X | T] inputs
  Matrix Y_std;      // d_y x n standardized field observations
  Matrix XF_unit;    // n x d_x unit-hypercube controllable inputs
  Index t_dim = 1;   // theta has independent Uniform(0,1) priors
  Sigma2Prior prior_sigma2;
  std::optional<DiscrepancySpec> discrepancy;
  Index m_c = 50;

  Index n_field() const { return Y_std.cols(); }
  Index x_dim() const { return XF_unit.cols(); }
};

struct PosteriorSamples {
  Matrix theta;   // S x d_t (full chain, burn-in first)
  Vector sigma2;  // S
  Vector log_post;
  std::vector<bool> accepted;
  Index n_burn = 0;
  double acceptance_rate = 0.0;  // post burn-in
  Matrix proposal_cov;           // frozen after burn-in, (d_t+1)^2

  Index post_burn_count() const { return theta.rows() - n_burn; }
};

// Log posterior of (t, sigma2) with emulator weights drawn afresh from their
// Student-t predictive laws (seeded per call; deterministic given the seed).
// Out-of-support t returns -inf.
double log_posterior_unbiased(const Vector& t, double sigma2,
                              const CalibrationProblem& problem,
                              std::uint64_t seed);

// As unbiased, with the discrepancy refit on the current residuals and a
// draw of delta subtracted before the data term.
double log_posterior_biased(const Vector& t, double sigma2,
                            const CalibrationProblem& problem,
                            std::uint64_t seed);

// Project residuals onto K and fit one full GP per row of the projection.
DiscrepancyModel fit_discrepancy(const Matrix& R, const DiscrepancySpec& spec,
                                 const Matrix& XF_unit, double nugget,
                                 std::uint64_t seed);

// Joint random-walk Metropolis-Hastings on (theta, log sigma^2) with the
// proposal covariance adapted during burn-in and frozen afterward.
PosteriorSamples mcmc_calibrate(const CalibrationProblem& problem,
                                Index n_samples, Index n_burn,
                                std::uint64_t seed);

struct CalibratedPrediction {
  Matrix mean;  // d_y x n_new, output units
  Matrix lo;    // 2.5 percentile
  Matrix hi;    // 97.5 percentile
};

// Posterior predictive at the unit-cube controllable inputs X_new (rows):
// for each of S_sub evenly spaced post-burn-in draws, one sampled emulator
// (plus discrepancy) prediction with observation noise added.
CalibratedPrediction calibrated_predict(const CalibrationProblem& problem,
                                        const PosteriorSamples& posterior,
                                        const Matrix& X_new, Index m,
                                        Index S_sub, std::uint64_t seed);

}  // namespace flagp
