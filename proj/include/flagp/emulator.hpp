#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagp/basis.hpp"
#include "flagp/dataset.hpp"
#include "flagp/gp_core.hpp"
#include "flagp/kdtree.hpp"

namespace flagp {

struct FitConfig {
  BasisSelector basis;
  bool use_rsvd = false;
  Index rsvd_p = 7;
  Index rsvd_oversample = 10;
  Index rsvd_power_iters = 2;
  SubsampleSpec subsample;
  double nugget = kDefaultNugget;
  std::uint64_t seed = 0;
};

// One basis component: its lengthscales, the stretched-and-compressed design
// X_sc = X / sqrt(l) (columnwise), its weight row and a spatial index.
struct ComponentModel {
  Lengthscales lengthscales;
  Matrix X_sc;  // M x d
  Vector w;     // M
  KdTree index;
};

struct FlaGPModel {
  BasisModel basis;
  std::vector<ComponentModel> components;
  Standardization standardization;
  Matrix X;  // unit-hypercube design, M x d
  std::vector<InputRange> input_ranges;
  FitConfig config;

  Index num_runs() const { return X.rows(); }
  Index input_dim() const { return X.cols(); }
  Index output_dim() const { return basis.B.rows(); }
  Index num_components() const { return basis.p; }
};

struct FunctionalPrediction {
  Vector mean;     // d_y, output units
  Matrix samples;  // d_y x S, output units (empty when S == 0)
  std::vector<PredictiveT> components;
};

// Divide each coordinate by the square root of its lengthscale.
Vector scale_input(const Vector& x, const Lengthscales& l);

FlaGPModel fit(const Ensemble& ensemble, const FitConfig& config);

// m nearest rows of the component's scaled design; wraps the KdTree.
std::vector<Neighbor> nn_query(const KdTree& index, const Vector& x_sc,
                               Index m);

// Predict at a unit-hypercube input: per component scale, query m nearest
// neighbors, Student-t predict; recombine through the basis and restore
// output units. S > 0 additionally draws predictive samples.
FunctionalPrediction predict(const FlaGPModel& model, const Vector& x, Index m,
                             Index S, std::uint64_t seed);

// Component-level prediction used by calibration (no basis recombination).
std::vector<PredictiveT> predict_components(const FlaGPModel& model,
                                            const Vector& x, Index m);

// Mean-only predictions at many inputs (rows of X_query), OpenMP over rows.
Matrix predict_mean_batch(const FlaGPModel& model, const Matrix& X_query,
                          Index m);
namespace serial {
Matrix predict_mean_batch(const FlaGPModel& model, const Matrix& X_query,
                          Index m);
}  // namespace serial

// Timing comparison between the two prediction paths the library supports:
// nearest neighbors with per-prediction lengthscale re-estimation versus
// nearest neighbors on prescaled inputs with fixed lengthscales.
struct BenchPoint {
  Index M = 0;
  Index d = 0;
  Index m = 0;
  Index n_predictions = 0;
  double reestimate_ms = 0.0;  // NN + local MAP estimation + predict
  double fixed_ms = 0.0;       // NN on prescaled inputs + predict
  double ratio = 0.0;
};

BenchPoint bench_scaling_point(Index M, Index d, Index m, Index n_predictions,
                               std::uint64_t seed);
std::vector<BenchPoint> bench_scaling(const std::vector<Index>& M_grid,
                                      const std::vector<Index>& d_grid,
                                      Index m, Index n_predictions,
                                      std::uint64_t seed);

}  // namespace flagp
