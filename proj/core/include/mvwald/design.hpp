#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvwald/linalg.hpp"

namespace mvwald {

enum class FactorRole { between, within };

struct Factor {
  std::string name;
  FactorRole role = FactorRole::between;
  std::vector<std::string> levels;
};

/// A crossed factorial layout. Cells (between-factor level combinations) and
/// response coordinates (within-factor level combinations) are ordered
/// lexicographically by factor declaration order.
class FactorialLayout {
public:
  /// response_dim is required when no within factors are declared and the
  /// responses are unstructured with p > 1; when within factors exist it must
  /// match (or be omitted) the product of their level counts.
  explicit FactorialLayout(std::vector<Factor> factors,
                           std::optional<Index> response_dim = std::nullopt);

  Index cell_count() const { return d_; }
  Index response_dim() const { return p_; }
  const std::vector<Factor>& factors() const { return factors_; }
  const Factor& factor(const std::string& name) const;
  bool has_factor(const std::string& name) const;

  std::vector<const Factor*> between_factors() const;
  std::vector<const Factor*> within_factors() const;

  /// 0-based lexicographic cell index for one level label per between factor
  /// (declaration order). SpecError on unknown levels or wrong arity.
  Index cell_index(const std::vector<std::string>& levels) const;

  /// Level labels of a cell, one per between factor.
  std::vector<std::string> cell_levels(Index cell) const;

  /// "M:<70:AD"-style label of a cell (":"-joined level labels), or "all"
  /// for the single implicit group.
  std::string cell_label(Index cell) const;

private:
  std::vector<Factor> factors_;
  Index d_ = 1;
  Index p_ = 1;
};

enum class AnalysisKind { multivariate, marginal };

AnalysisKind parse_analysis_kind(const std::string& name);
std::string to_string(AnalysisKind kind);

struct HypothesisSpec {
  std::vector<std::string> effect; // factor names, nonempty
  AnalysisKind analysis = AnalysisKind::multivariate;

  /// "sex*diagnosis"
  std::string name() const;
};

/// A realized hypothesis: contrast matrix T (d*p columns) together with its
/// rank. Substituting the projection T'(TT')+T for T leaves the Wald-type
/// statistic unchanged.
struct HypothesisMatrix {
  Matrix t;
  Index df = 0;
  HypothesisSpec spec;

  /// Wraps an arbitrary contrast matrix; df is computed as its numerical rank.
  static HypothesisMatrix from_matrix(Matrix t, HypothesisSpec spec = {});
};

/// Builds the projection hypothesis matrix for an effect:
/// in factor declaration order, every factor in the effect contributes a
/// centering block P_l and every other factor an averaging block J_l/l; a
/// multivariate analysis appends I_p, a marginal analysis uses the within
/// factors' P/J blocks instead. df = prod over effect factors of (levels-1),
/// times p for multivariate analyses.
HypothesisMatrix build_hypothesis(const FactorialLayout& layout, const HypothesisSpec& spec);

/// Projection testing the joint equality of the mean vectors of the listed
/// cell groups (each set >= 2 cells, pairwise disjoint), multivariate.
/// Used for post-hoc pairwise comparisons and closed testing.
HypothesisMatrix build_cell_equality(const FactorialLayout& layout,
                                     const std::vector<std::vector<Index>>& equal_sets);

} // namespace mvwald
