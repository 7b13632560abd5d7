#pragma once

// Internal: compressed evaluation of the Wald-type quadratic form, plus the
// deterministic worker-pool helper shared by the bootstrap and simulation
// loops. Not installed.

#include <functional>

#include <Eigen/Dense>

#include "mvwald/design.hpp"
#include "mvwald/inference.hpp"
#include "mvwald/linalg.hpp"

namespace mvwald::detail {

struct QuadFormWorkspace {
  Matrix w;    // r x r
  Vector y;    // r
  Matrix tmp;  // p x r
  Eigen::SelfAdjointEigenSolver<Matrix> eig;
};

/// Evaluates Q_N through an orthonormal basis U of the row space of T:
/// Q = N y' W^+ y with y = U' xbar and W = U' V_N U assembled blockwise.
/// Agrees with the T-based formula (T and U U' have the same row space).
class QuadForm {
public:
  QuadForm(const HypothesisMatrix& hyp, Index d, Index p);

  Index rank() const { return r_; }

  double statistic(const std::vector<Vector>& means, const std::vector<Matrix>& covs,
                   const std::vector<Index>& n, Index total, QuadFormWorkspace& ws,
                   Index* w_rank = nullptr) const;

  double statistic(const MomentEstimates& est, QuadFormWorkspace& ws,
                   Index* w_rank = nullptr) const {
    return statistic(est.means, est.covariances, est.n, est.total, ws, w_rank);
  }

private:
  Matrix basis_; // d*p x r
  Index d_ = 0;
  Index p_ = 0;
  Index r_ = 0;
};

/// Runs fn over [0, count) split into contiguous chunks, one worker thread per
/// chunk. Results must be written to per-index slots (or per-chunk state) so
/// the outcome is identical for any thread count. Rethrows the first worker
/// exception.
void parallel_chunks(long count, int threads, const std::function<void(long, long)>& fn);

} // namespace mvwald::detail
