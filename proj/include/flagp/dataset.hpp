#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagp/types.hpp"

namespace flagp {

struct InputRange {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
};

// Output standardization parameters. `mean` has one entry per functional
// index; `scale` is a single global value unless per-index scaling was
// requested, in which case it has one entry per functional index.
struct Standardization {
  Vector mean;
  Vector scale;
  bool per_index = false;
};

// Simulation ensemble: M design points on the unit hypercube with their raw
// functional outputs stored column-per-run (d_y x M).
struct Ensemble {
  Matrix X;       // M x d_x, every entry in [0, 1]
  Matrix Z_raw;   // d_y x M
  std::vector<InputRange> input_ranges;  // size d_x

  Index num_runs() const { return X.rows(); }
  Index input_dim() const { return X.cols(); }
  Index output_dim() const { return Z_raw.rows(); }
};

// Field observations in output units. Standardize with the ensemble's
// Standardization before use in calibration.
struct FieldData {
  Matrix X_F;  // n x d_x, natural units
  Matrix Y;    // d_y x n
};

// Center each output row; scale so the total variance is 1 (or each row's
// variance when per_index_scale is set). Throws DataError on zero variance.
std::pair<Matrix, Standardization> standardize(const Matrix& Z_raw,
                                               bool per_index_scale = false);
Matrix unstandardize(const Matrix& Z_std, const Standardization& s);

// Affine map into [0,1]^d given per-dimension (lo, hi). In strict mode a
// value outside its range is a DataError.
Matrix to_unit_hypercube(const Matrix& X_raw,
                         const std::vector<InputRange>& ranges,
                         bool strict = false);
Matrix from_unit_hypercube(const Matrix& X_unit,
                           const std::vector<InputRange>& ranges);

// Maximin Latin hypercube: best of `candidates` random LHS draws by minimum
// pairwise distance. One point per of M equal-width strata in every
// dimension; deterministic under seed.
Matrix lhs_design(Index M, Index d, std::uint64_t seed, int candidates = 50);

enum class BallDropVariant { unbiased, biased };

// Time for a ball of radius R and drag coefficient C to fall each distance in
// d_vec: t = acosh(exp(C d / R)) / (C g / R)^q with q = 1/2 (unbiased) or
// q = 1/3 (biased). Evaluated in overflow-safe form.
Vector ball_drop(double C, double R, double g, const Vector& d_vec,
                 BallDropVariant variant);

struct BallDropFieldParams {
  Vector d_vec;                 // functional grid (meters)
  std::vector<double> R_balls;  // one observation per radius
  double C = 0.1;
  double g = 9.8;
  double noise_sd = 0.1;
};

// Noisy field observations from the unbiased generator; deterministic under
// seed. Defaults reproduce d = (5,10,15,20), R in {.05,...,.25}, C = .1.
FieldData make_field_data(const BallDropFieldParams& params,
                          std::uint64_t seed);
BallDropFieldParams default_field_params();

// Ensemble of ball-drop runs over an LHS design in the given ranges. The
// input columns are ordered (R, C) or (R, C, g) when a g range is supplied.
Ensemble make_ball_drop_ensemble(Index M, const Vector& d_vec,
                                 const std::vector<InputRange>& ranges,
                                 BallDropVariant variant, std::uint64_t seed);

}  // namespace flagp
