#pragma once

#include <cstdint>

#include "flagp/calibration.hpp"

namespace flagp {

// Normal approximation of the Student-t predictive laws at one field point:
// mean unchanged, variance = scale2 * df / (df - 2).
struct GaussianSummary {
  Vector m_w;  // p_eta emulator means
  Vector S_w;  // p_eta variances
  Vector m_v;  // p_delta discrepancy means (empty when unbiased)
  Vector S_v;  // p_delta variances
};

GaussianSummary normal_summary(const FlaGPModel& model, const Vector& x_F,
                               const Vector& t, Index m_c);

// Log density of r ~ N(0, sigma2 I + C S C') computed through the projection
// onto span(C), at cost O(d_y q + q^3) and with the full normalizing
// constant. Throws NumericalError when C'C is rank deficient.
double loglik_rank_reduced(const Vector& r, const Matrix& C_basis,
                           const Vector& S, double sigma2);

// Deterministic MAP objective: sum of rank-reduced log likelihoods over the
// field points plus log priors. No sampling anywhere.
double map_objective(const Vector& t, double sigma2,
                     const CalibrationProblem& problem);

struct MapResult {
  Vector theta;  // unit cube
  double sigma2 = 0.0;
  double objective = 0.0;
  std::vector<double> restart_objectives;
};

// Bounded derivative-free coordinate-pattern search on (theta, log sigma^2)
// with geometric mesh shrinking; best point over `restarts` starts.
MapResult map_optimize(const CalibrationProblem& problem, int restarts,
                       std::uint64_t seed);

}  // namespace flagp
