#pragma once

#include <utility>
#include <vector>

#include "flagp/types.hpp"

namespace flagp {

struct Neighbor {
  double dist2;
  Index index;
};

// (dist2, index) lexicographic order; ties between equidistant points go to
// the lower training index.
inline bool closer(const Neighbor& a, const Neighbor& b) {
  return a.dist2 < b.dist2 || (a.dist2 == b.dist2 && a.index < b.index);
}

// Exact k-nearest-neighbor index over the rows of a point matrix. Median
// split on the widest dimension, leaf buckets of 16.
class KdTree {
 public:
  KdTree() = default;
  explicit KdTree(const Matrix& points);  // copies points (n x d)

  // m nearest rows by squared Euclidean distance, sorted ascending with ties
  // broken by lower index.
  std::vector<Neighbor> query(const Vector& x, Index m) const;

  Index size() const { return points_.rows(); }
  Index dim() const { return points_.cols(); }
  const Matrix& points() const { return points_; }

 private:
  struct Node {
    int left = -1, right = -1;
    int begin = 0, end = 0;  // leaf range into order_
    int split_dim = -1;
    double split_val = 0.0;
  };

  int build(int begin, int end);
  void search(int node, const Vector& x, Index m, double& worst,
              std::vector<Neighbor>& heap) const;

  Matrix points_;
  std::vector<Node> nodes_;
  std::vector<int> order_;
};

namespace serial {
// Reference scan used to validate KdTree and as the benchmark baseline.
std::vector<Neighbor> nn_brute(const Matrix& points, const Vector& x, Index m);
}  // namespace serial

// Batch queries, one row of X_query per query, OpenMP over queries.
std::vector<std::vector<Neighbor>> nn_batch(const KdTree& tree,
                                            const Matrix& X_query, Index m);

}  // namespace flagp
