#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvwald/design.hpp"
#include "mvwald/linalg.hpp"

namespace mvwald {

struct GroupObservations {
  std::string label;  // cell label, layout lexicographic order
  Matrix data;        // n_i x p, one row per subject
};

/// d groups of p-variate observations, ordered like the layout's cells.
class GroupedDataset {
public:
  GroupedDataset(Index p, std::vector<GroupObservations> groups);

  Index group_count() const { return static_cast<Index>(groups_.size()); }
  Index response_dim() const { return p_; }
  Index total_n() const { return total_; }
  const GroupObservations& group(Index i) const { return groups_.at(static_cast<std::size_t>(i)); }
  const std::vector<GroupObservations>& groups() const { return groups_; }

private:
  Index p_;
  Index total_ = 0;
  std::vector<GroupObservations> groups_;
};

struct MomentEstimates {
  std::vector<Vector> means;        // d vectors of length p
  std::vector<Matrix> covariances;  // d matrices p x p, divisor n_i - 1
  std::vector<Index> n;
  Index total = 0; // N
};

/// Per-group means and covariances. DataError (naming the cell) when any
/// group has fewer than 2 observations.
MomentEstimates estimate_moments(const GroupedDataset& data);

struct WaldResult {
  double statistic = 0.0;  // Q_N
  Index rank_t = 0;        // rank of T (the reported df)
  Index rank_tvt = 0;      // rank of T V_N T' seen by the pseudo-inverse
};

/// Wald-type statistic Q_N = N * (T xbar)' (T V_N T')^+ (T xbar) with
/// V_N = blockdiag(N/n_i * Sigma_i).
WaldResult wald_statistic(const MomentEstimates& est, const HypothesisMatrix& hyp);

/// chi-square approximation p-value; SpecError when df = 0 (degenerate effect).
double chi2_test(double q, Index df);

struct BootstrapOptions {
  long replicates = 10000;
  std::uint64_t seed = 0;
  double alpha = 0.05;
  int threads = 1;
};

struct BootstrapResult {
  double p_value = 1.0;
  double critical_value = 0.0; // empirical (1-alpha) quantile of Q*
};

/// Parametric bootstrap: replicate draws X*_ik ~ N(0, Sigma_i) with the
/// original group sizes, recomputes the WTS, and returns
/// p = (#{Q* >= Q_N} + 1)/(B + 1) plus the empirical critical value.
/// Deterministic given (seed, replicates) for any thread count.
BootstrapResult pbs_test(const GroupedDataset& data, const HypothesisMatrix& hyp,
                         const BootstrapOptions& opts);

/// Nonparametric bootstrap: every group's n_i bootstrap vectors are resampled
/// with replacement from the pooled collection of all N groupwise-centered
/// residuals X_ik - Xbar_i.
BootstrapResult npbs_test(const GroupedDataset& data, const HypothesisMatrix& hyp,
                          const BootstrapOptions& opts);

/// Shared-draw variants: one set of bootstrap samples evaluates every
/// hypothesis (the resample does not depend on the hypothesis). Results equal
/// the single-hypothesis calls with the same options.
std::vector<BootstrapResult> pbs_test_many(const GroupedDataset& data,
                                           const std::vector<HypothesisMatrix>& hyps,
                                           const BootstrapOptions& opts);
std::vector<BootstrapResult> npbs_test_many(const GroupedDataset& data,
                                            const std::vector<HypothesisMatrix>& hyps,
                                            const BootstrapOptions& opts);

enum class Method { chi2, pbs, npbs };

Method parse_method(const std::string& name);
std::string to_string(Method m);

struct TestResult {
  HypothesisSpec spec;
  double statistic = 0.0;
  Index df = 0;
  double p_chi2 = 1.0;
  std::optional<double> p_pbs;
  std::optional<double> p_npbs;
  long b_replicates = 0;
  std::uint64_t seed = 0;
};

/// Runs one hypothesis through the requested methods.
TestResult run_test(const GroupedDataset& data, const HypothesisMatrix& hyp,
                    const std::vector<Method>& methods, const BootstrapOptions& opts);

} // namespace mvwald
