#pragma once

#include "flagp/types.hpp"

namespace flagp {

struct ScoreReport {
  double mape = 0.0;
  double rmse = 0.0;
  double interval_score = 0.0;  // mean over entries
  double coverage_95 = 0.0;
  Index mape_masked = 0;  // entries skipped because |truth| < 1e-12
};

// (u - l) + (2/alpha) (l - y) 1{y < l} + (2/alpha) (y - u) 1{y > u}.
double interval_score(double l, double u, double y, double alpha);
double mean_interval_score(const Matrix& lo, const Matrix& hi,
                           const Matrix& truth, double alpha);

// Mean of |pred - truth| / |truth| over entries with |truth| >= 1e-12;
// masked_count reports how many entries were skipped.
double mape(const Matrix& pred, const Matrix& truth,
            Index* masked_count = nullptr);

double rmse(const Matrix& pred, const Matrix& truth);

// Fraction of truths inside their [lo, hi] interval.
double coverage(const Matrix& lo, const Matrix& hi, const Matrix& truth);

}  // namespace flagp
