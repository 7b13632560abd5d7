#include "mvwald/design.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace mvwald {

FactorialLayout::FactorialLayout(std::vector<Factor> factors, std::optional<Index> response_dim)
    : factors_(std::move(factors)) {
  std::unordered_set<std::string> names;
  Index within_p = 1;
  bool has_within = false;
  for (const auto& f : factors_) {
    if (f.name.empty())
      throw SpecError("layout: factor with empty name");
    if (!names.insert(f.name).second)
      throw SpecError("layout: duplicate factor '" + f.name + "'");
    if (f.levels.empty())
      throw SpecError("layout: factor '" + f.name + "' has no levels");
    std::unordered_set<std::string> lvls(f.levels.begin(), f.levels.end());
    if (lvls.size() != f.levels.size())
      throw SpecError("layout: duplicate level labels in factor '" + f.name + "'");
    if (f.role == FactorRole::between) {
      d_ *= static_cast<Index>(f.levels.size());
    } else {
      has_within = true;
      within_p *= static_cast<Index>(f.levels.size());
    }
  }
  if (has_within) {
    if (response_dim && *response_dim != within_p)
      throw SpecError("layout: response_dim " + std::to_string(*response_dim) +
                      " contradicts within-factor structure (p = " + std::to_string(within_p) +
                      ")");
    p_ = within_p;
  } else {
    p_ = response_dim.value_or(1);
    if (p_ < 1)
      throw SpecError("layout: response dimension must be >= 1");
  }
}

const Factor& FactorialLayout::factor(const std::string& name) const {
  for (const auto& f : factors_)
    if (f.name == name) return f;
  throw SpecError("layout: unknown factor '" + name + "'");
}

bool FactorialLayout::has_factor(const std::string& name) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.name == name; });
}

std::vector<const Factor*> FactorialLayout::between_factors() const {
  std::vector<const Factor*> out;
  for (const auto& f : factors_)
    if (f.role == FactorRole::between) out.push_back(&f);
  return out;
}

std::vector<const Factor*> FactorialLayout::within_factors() const {
  std::vector<const Factor*> out;
  for (const auto& f : factors_)
    if (f.role == FactorRole::within) out.push_back(&f);
  return out;
}

Index FactorialLayout::cell_index(const std::vector<std::string>& levels) const {
  const auto between = between_factors();
  if (levels.size() != between.size())
    throw SpecError("cell_index: expected " + std::to_string(between.size()) +
                    " levels (one per between factor), got " + std::to_string(levels.size()));
  Index idx = 0;
  for (std::size_t k = 0; k < between.size(); ++k) {
    const auto& lv = between[k]->levels;
    const auto it = std::find(lv.begin(), lv.end(), levels[k]);
    if (it == lv.end())
      throw SpecError("cell_index: unknown level '" + levels[k] + "' for factor '" +
                      between[k]->name + "'");
    idx = idx * static_cast<Index>(lv.size()) + static_cast<Index>(it - lv.begin());
  }
  return idx;
}

std::vector<std::string> FactorialLayout::cell_levels(Index cell) const {
  if (cell < 0 || cell >= d_)
    throw SpecError("cell_levels: index out of range");
  const auto between = between_factors();
  std::vector<std::string> out(between.size());
  for (std::size_t k = between.size(); k-- > 0;) {
    const Index count = static_cast<Index>(between[k]->levels.size());
    out[k] = between[k]->levels[static_cast<std::size_t>(cell % count)];
    cell /= count;
  }
  return out;
}

std::string FactorialLayout::cell_label(Index cell) const {
  const auto levels = cell_levels(cell);
  if (levels.empty()) return "all";
  std::string out = levels.front();
  for (std::size_t k = 1; k < levels.size(); ++k) out += ":" + levels[k];
  return out;
}

AnalysisKind parse_analysis_kind(const std::string& name) {
  if (name == "multivariate") return AnalysisKind::multivariate;
  if (name == "marginal") return AnalysisKind::marginal;
  throw SpecError("unknown analysis kind '" + name + "' (expected multivariate|marginal)");
}

std::string to_string(AnalysisKind kind) {
  return kind == AnalysisKind::multivariate ? "multivariate" : "marginal";
}

std::string HypothesisSpec::name() const {
  std::string out;
  for (const auto& f : effect) {
    if (!out.empty()) out += "*";
    out += f;
  }
  return out;
}

HypothesisMatrix HypothesisMatrix::from_matrix(Matrix t, HypothesisSpec spec) {
  HypothesisMatrix h;
  h.df = numerical_rank(t);
  h.t = std::move(t);
  h.spec = std::move(spec);
  return h;
}

HypothesisMatrix build_hypothesis(const FactorialLayout& layout, const HypothesisSpec& spec) {
  if (spec.effect.empty())
    throw SpecError("build_hypothesis: empty effect");
  std::set<std::string> effect(spec.effect.begin(), spec.effect.end());
  if (effect.size() != spec.effect.size())
    throw SpecError("build_hypothesis: duplicate factor in effect '" + spec.name() + "'");
  for (const auto& name : effect) {
    const Factor& f = layout.factor(name); // throws on unknown factor
    if (spec.analysis == AnalysisKind::multivariate && f.role == FactorRole::within)
      throw SpecError("build_hypothesis: within factor '" + name +
                      "' not allowed in a multivariate effect");
  }
  if (spec.analysis == AnalysisKind::marginal && layout.within_factors().empty() &&
      layout.response_dim() > 1)
    throw SpecError("build_hypothesis: marginal analysis needs the response structured by "
                    "within factors (declare a within factor with p levels)");

  Matrix t = Matrix::Identity(1, 1);
  Index df = 1;
  for (const auto& f : layout.factors()) {
    if (f.role == FactorRole::within && spec.analysis == AnalysisKind::multivariate)
      continue; // responses handled by the identity tail below
    const Index l = static_cast<Index>(f.levels.size());
    if (effect.count(f.name)) {
      t = kronecker(t, centering_matrix(l));
      df *= l - 1;
    } else {
      t = kronecker(t, averaging_matrix(l));
    }
  }
  if (spec.analysis == AnalysisKind::multivariate) {
    t = kronecker(t, Matrix::Identity(layout.response_dim(), layout.response_dim()));
    df *= layout.response_dim();
  }

  HypothesisMatrix h;
  h.t = std::move(t);
  h.df = df;
  h.spec = spec;
  return h;
}

HypothesisMatrix build_cell_equality(const FactorialLayout& layout,
                                     const std::vector<std::vector<Index>>& equal_sets) {
  const Index d = layout.cell_count();
  const Index p = layout.response_dim();
  if (equal_sets.empty())
    throw SpecError("build_cell_equality: no equality sets");
  std::set<Index> seen;
  Matrix cells = Matrix::Zero(d, d);
  Index df_cells = 0;
  for (const auto& s : equal_sets) {
    if (s.size() < 2)
      throw SpecError("build_cell_equality: equality set needs >= 2 cells");
    for (Index c : s) {
      if (c < 0 || c >= d)
        throw SpecError("build_cell_equality: cell index out of range");
      if (!seen.insert(c).second)
        throw SpecError("build_cell_equality: cell " + std::to_string(c) +
                        " appears in two equality sets");
    }
    // centering projection over the set, embedded at its cells
    const double k = static_cast<double>(s.size());
    for (Index a : s)
      for (Index b : s) cells(a, b) += (a == b ? 1.0 : 0.0) - 1.0 / k;
    df_cells += static_cast<Index>(s.size()) - 1;
  }

  HypothesisMatrix h;
  h.t = kronecker(cells, Matrix::Identity(p, p));
  h.df = df_cells * p;
  h.spec.analysis = AnalysisKind::multivariate;
  for (const auto& s : equal_sets) {
    std::string part;
    for (Index c : s) part += (part.empty() ? "" : "=") + layout.cell_label(c);
    h.spec.effect.push_back(part);
  }
  return h;
}

} // namespace mvwald
