#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choquet/aggregation.hpp"
#include "choquet/hypermeasure.hpp"
#include "choquet/moebius.hpp"

namespace choquet {

/// A right-continuous step function on [0, inf): value_i on
/// [break_i, break_{i+1}), the last value extending to infinity. Survival
/// functions are nonincreasing, which the constructor enforces.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<ExtValue> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.empty() || breakpoints_.size() != values_.size())
      fail(errc::invalid_argument, "step function needs matching breakpoint and value lists");
    if (breakpoints_.front() != 0.0) fail(errc::invalid_argument, "step function must start at 0");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
      if (!(breakpoints_[i] > breakpoints_[i - 1]))
        fail(errc::invalid_argument, "step function breakpoints must be strictly increasing");
      if (values_[i] > values_[i - 1])
        fail(errc::invalid_argument, "survival step function must be nonincreasing");
    }
  }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<ExtValue>& values() const { return values_; }

  ExtValue value_at(double alpha) const {
    if (alpha < 0) fail(errc::invalid_argument, "step functions live on [0, inf)");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), alpha);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
  }

 private:
  std::vector<double> breakpoints_;
  std::vector<ExtValue> values_;
};

/// Generalized survival function at one level:
/// min{mu(E) : T(E) <= alpha}. T(X) = 0 keeps the candidate set nonempty.
inline ExtValue survival(const TTable& table, const MonotoneMeasure& mu, double alpha) {
  if (!(table.family() == mu.family())) fail(errc::family_mismatch, "T and mu live on different families");
  if (alpha < 0) fail(errc::invalid_argument, "survival is defined for alpha >= 0");
  ExtValue best = ExtValue::infinite();
  for (int i = 0; i < table.family().size(); ++i)
    if (table.at_index(i) <= alpha) best = min(best, mu.at_index(i));
  return best;
}

/// The same level through the hyperspace: N_mu({T > alpha}). Equal to
/// survival() by the representation identity, exactly.
inline ExtValue survival_via_hyper(const TTable& table, const MonotoneMeasure& mu, double alpha) {
  if (!(table.family() == mu.family())) fail(errc::family_mismatch, "T and mu live on different families");
  if (alpha < 0) fail(errc::invalid_argument, "survival is defined for alpha >= 0");
  std::uint32_t bits = 0;
  for (int i = 0; i < table.family().size(); ++i)
    if (table.at_index(i) > alpha) bits |= std::uint32_t{1} << i;
  return n_mu(mu, HyperMask(bits));
}

/// The exact survival step function: breakpoints at the distinct T values.
inline StepFunction survival_function(const TTable& table, const MonotoneMeasure& mu) {
  std::vector<double> breaks(table.values());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<ExtValue> values;
  values.reserve(breaks.size());
  for (double b : breaks) values.push_back(survival(table, mu, b));
  return StepFunction(std::move(breaks), std::move(values));
}

/// Exact integral of a step function; Infinite when the tail value is positive
/// or any piece is infinite.
inline ExtValue integrate_riemann(const StepFunction& step) {
  const auto& breaks = step.breakpoints();
  const auto& values = step.values();
  if (values.back() > ExtValue()) return ExtValue::infinite();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double width = breaks[i + 1] - breaks[i];
    if (values[i].is_infinite()) return ExtValue::infinite();
    total += width * values[i].as_double();
  }
  return ExtValue::finite(total);
}

namespace detail {

/// Member indices ordered by (T value, family index): the discrete ordering
/// 0 = T(E_0) <= ... <= T(E_{p-1}).
inline std::vector<int> sorted_member_order(const TTable& table) {
  std::vector<int> order(static_cast<std::size_t>(table.family().size()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return table.at_index(a) < table.at_index(b); });
  return order;
}

inline void require_discrete_formula_inputs(const TTable& table, const MonotoneMeasure& mu) {
  if (!(table.family() == mu.family())) fail(errc::family_mismatch, "T and mu live on different families");
  if (!mu.family().contains_empty())
    fail(errc::missing_empty_set, "the discrete formulas need the empty set in the family");
  if (mu.total().is_infinite())
    fail(errc::infinite_total_mass, "the discrete formulas need finite measure values");
}

/// Formula (i) over an explicit ordering; the public entry uses the canonical
/// one and the tie-invariance tests inject shuffled tie blocks.
inline double formula_i_ordered(const TTable& table, const MonotoneMeasure& mu, const std::vector<int>& order) {
  double total = 0.0;
  double prefix_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < order.size(); ++i) {
    prefix_min = std::min(prefix_min, mu.at_index(order[i - 1]).finite_value());
    total += (table.at_index(order[i]) - table.at_index(order[i - 1])) * prefix_min;
  }
  return total;
}

inline double formula_ii_ordered(const TTable& table, const MonotoneMeasure& mu, const std::vector<int>& order) {
  double total = 0.0;
  double prefix_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < order.size(); ++i) {
    const double prev = std::min(prefix_min, mu.at_index(order[i - 1]).finite_value());
    const double curr = std::min(prev, mu.at_index(order[i]).finite_value());
    total += (prev - curr) * table.at_index(order[i]);
    prefix_min = prev;
  }
  return total;
}

}  // namespace detail

/// sum over i of (T(E_i) - T(E_{i-1})) * min_{j <= i-1} mu(E_j).
inline double integrate_formula_i(const TTable& table, const MonotoneMeasure& mu) {
  detail::require_discrete_formula_inputs(table, mu);
  return detail::formula_i_ordered(table, mu, detail::sorted_member_order(table));
}

/// sum over i of [min_{j <= i-1} mu(E_j) - min_{j <= i} mu(E_j)] * T(E_i).
inline double integrate_formula_ii(const TTable& table, const MonotoneMeasure& mu) {
  detail::require_discrete_formula_inputs(table, mu);
  return detail::formula_ii_ordered(table, mu, detail::sorted_member_order(table));
}

/// sum over all hypermasks S of N_mu(S) * max{0, minT(S) - maxT(outside S)},
/// min and max over the empty index set taken as 0.
inline double integrate_formula_iii(const TTable& table, const MonotoneMeasure& mu) {
  detail::require_discrete_formula_inputs(table, mu);
  const int p = mu.family().size();
  if (p > kMaxMoebiusFamily)
    fail(errc::family_too_large_for_enumeration,
         "formula (iii) enumeration capped at p <= " + std::to_string(kMaxMoebiusFamily));
  const auto n_values = n_mu_table(mu);
  const auto min_t = detail::min_t_table(table);
  std::vector<double> max_t(min_t.size(), -std::numeric_limits<double>::infinity());
  for (std::uint32_t s = 1; s < max_t.size(); ++s) {
    const int low = std::countr_zero(s);
    max_t[s] = std::max(max_t[s & (s - 1)], table.at_index(low));
  }
  const std::uint32_t full = mu.family().full_hyper().bits();
  double total = 0.0;
  for (std::uint32_t s = 0; s <= full; ++s) {
    const double inner = (s == 0) ? 0.0 : min_t[s];
    const double outer = (s == full) ? 0.0 : max_t[full & ~s];
    const double gap = std::max(0.0, inner - outer);
    if (gap > 0) total += n_values[s].finite_value() * gap;
  }
  return total;
}

/// Cross-checked integral values, one per applicable route.
struct IntegralReport {
  ExtValue value;  // the Riemann route, authoritative
  ExtValue riemann;
  std::optional<double> formula_i;
  std::optional<double> formula_ii;
  std::optional<double> formula_iii;
  std::optional<double> moebius;
  std::vector<std::pair<std::string, std::string>> skipped;  // route -> reason
  double max_deviation = 0.0;
};

/// Runs every applicable route and reports the spread. The Riemann route
/// always runs; the discrete formulas and the Moebius route need the empty set,
/// finite measure values and (for the enumerating routes) the family cap.
inline IntegralReport integrate_all(const TTable& table, const MonotoneMeasure& mu) {
  if (!(table.family() == mu.family())) fail(errc::family_mismatch, "T and mu live on different families");
  IntegralReport report;
  report.riemann = integrate_riemann(survival_function(table, mu));
  report.value = report.riemann;

  const bool has_empty = mu.family().contains_empty();
  const bool finite = !mu.total().is_infinite();
  const bool small_enough = mu.family().size() <= kMaxMoebiusFamily;
  if (!has_empty) {
    const char* reason = "family lacks the empty set; the integral may be infinite";
    report.skipped = {{"formula_i", reason}, {"formula_ii", reason}, {"formula_iii", reason}, {"moebius", reason}};
  } else if (!finite) {
    const char* reason = "measure has infinite values";
    report.skipped = {{"formula_i", reason}, {"formula_ii", reason}, {"formula_iii", reason}, {"moebius", reason}};
  } else {
    report.formula_i = integrate_formula_i(table, mu);
    report.formula_ii = integrate_formula_ii(table, mu);
    if (small_enough) {
      report.formula_iii = integrate_formula_iii(table, mu);
      report.moebius = integrate_moebius(table, mu);
    } else {
      const char* reason = "family exceeds the enumeration cap";
      report.skipped = {{"formula_iii", reason}, {"moebius", reason}};
    }
  }

  std::vector<double> finite_routes;
  if (!report.riemann.is_infinite()) finite_routes.push_back(report.riemann.as_double());
  for (const auto& r : {report.formula_i, report.formula_ii, report.formula_iii, report.moebius})
    if (r) finite_routes.push_back(*r);
  for (std::size_t i = 0; i < finite_routes.size(); ++i)
    for (std::size_t j = i + 1; j < finite_routes.size(); ++j)
      report.max_deviation = std::max(report.max_deviation, std::fabs(finite_routes[i] - finite_routes[j]));
  return report;
}

/// Built-in fusion functions for the dominance-generalized integral.
enum class FusionFn { product, minimum, product_y_squared };

inline const char* fusion_name(FusionFn f) {
  switch (f) {
    case FusionFn::product: return "product";
    case FusionFn::minimum: return "min";
    case FusionFn::product_y_squared: return "xy2";
  }
  return "unknown";
}

inline double fusion_eval(FusionFn f, double x, double y) {
  switch (f) {
    case FusionFn::product: return x * y;
    case FusionFn::minimum: return std::min(x, y);
    case FusionFn::product_y_squared: return x * y * y;
  }
  return 0.0;
}

/// min{1, sum over i of H1(T(E_i), N_mu(E_(i))) - H2(T(E_{i-1}), N_mu(E_(i)))}
/// with E_(i) the upper tail of the ordered members. Needs a capacity and
/// H1 >= H2 on the relevant grid.
inline double fusion_integral(const TTable& table, const MonotoneMeasure& mu, FusionFn h1, FusionFn h2) {
  detail::require_discrete_formula_inputs(table, mu);
  if (std::fabs(mu.total().finite_value() - 1.0) > 1e-12)
    fail(errc::not_capacity, "fusion integral needs mu(X) = 1");

  const double x_top = std::max(1.0, table.max_value());
  constexpr int kGrid = 32;
  for (int i = 0; i <= kGrid; ++i)
    for (int j = 0; j <= kGrid; ++j) {
      const double x = x_top * i / kGrid;
      const double y = static_cast<double>(j) / kGrid;
      if (fusion_eval(h1, x, y) < fusion_eval(h2, x, y) - 1e-12)
        fail(errc::dominance_violated, std::string(fusion_name(h1)) + " does not dominate " + fusion_name(h2) +
                                           " at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }

  const auto order = detail::sorted_member_order(table);
  double total = 0.0;
  double prefix_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < order.size(); ++i) {
    prefix_min = std::min(prefix_min, mu.at_index(order[i - 1]).finite_value());
    total += fusion_eval(h1, table.at_index(order[i]), prefix_min) -
             fusion_eval(h2, table.at_index(order[i - 1]), prefix_min);
  }
  return std::min(1.0, total);
}

/// Generalized level measure: max{nu(E) : barT(E) >= alpha}. The empty set's
/// infinite barT keeps the candidate set nonempty; it contributes nu(empty).
inline ExtValue level_measure_plus(const BarTTable& bar_table, const MonotoneMeasure& nu, double alpha) {
  if (!(bar_table.family() == nu.family())) fail(errc::family_mismatch, "barT and nu live on different families");
  ExtValue best;  // 0
  for (int i = 0; i < nu.family().size(); ++i)
    if (bar_table.at_index(i).as_double() >= alpha) best = max(best, nu.at_index(i));
  return best;
}

/// The survival / level-measure complementarity:
/// survival(f, alpha) + level(dual mu, ybar - f, ybar - alpha) = mu(X)
/// at every sampled alpha in [0, ybar].
inline bool duality_identity_check(const FCASpec& spec, const FnVector& f, const MonotoneMeasure& mu, double ybar,
                                   const std::vector<double>& alphas, double tolerance = 1e-9) {
  if (!(spec.family() == mu.family())) fail(errc::family_mismatch, "FCA and mu live on different families");
  if (mu.total().is_infinite()) fail(errc::infinite_total_mass, "the duality identity needs mu(X) < inf");
  const TTable table = build_T(spec, f);
  const MonotoneMeasure dual = dual_measure(mu);

  FnVector residual(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) residual[i] = ybar - f[i];
  const BarTTable bar_table = build_bar_T(spec, residual, ybar);

  const double total = mu.total().finite_value();
  for (double alpha : alphas) {
    if (alpha < 0 || alpha > ybar) continue;
    const double lhs = survival(table, mu, alpha).finite_value();
    const double rhs = level_measure_plus(bar_table, dual, ybar - alpha).finite_value();
    if (std::fabs(lhs + rhs - total) > tolerance) return false;
  }
  return true;
}

/// Outcomes of the standard Choquet-integral properties evaluated on a pair of
/// T tables under one measure.
struct PropertiesReport {
  bool ae_zero_iff_integral_zero = false;
  bool comonotone = false;
  bool comonotone_additivity = true;  // vacuous when the pair is not comonotone
  bool cut_variants_agree = false;
  bool modularity_checked = false;  // hyperspace sweep ran (p within cap)
  bool n_supermodular = false;
  bool n_submodular = false;
  bool supermodular_superadditive = true;  // vacuous unless checked and supermodular
  bool submodular_subadditive = true;

  bool all_ok() const {
    return ae_zero_iff_integral_zero && comonotone_additivity && cut_variants_agree && supermodular_superadditive &&
           submodular_subadditive;
  }
};

namespace detail {

/// Integral of the weak-cut variant: sum of (t_i - t_{i-1}) * N({T >= t_i}).
inline ExtValue integrate_weak_cuts(const TTable& table, const MonotoneMeasure& mu) {
  std::vector<double> breaks(table.values());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  // Beyond the largest T value the weak cut is empty.
  if (n_mu(mu, HyperMask(0)) > ExtValue()) return ExtValue::infinite();
  double total = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    std::uint32_t bits = 0;
    for (int k = 0; k < table.family().size(); ++k)
      if (table.at_index(k) >= breaks[i]) bits |= std::uint32_t{1} << k;
    const ExtValue v = n_mu(mu, HyperMask(bits));
    if (v.is_infinite()) return ExtValue::infinite();
    total += (breaks[i] - breaks[i - 1]) * v.as_double();
  }
  return ExtValue::finite(total);
}

inline bool are_comonotone(const TTable& a, const TTable& b) {
  const int p = a.family().size();
  for (int s = 0; s < p; ++s)
    for (int t = s + 1; t < p; ++t)
      if ((a.at_index(s) - a.at_index(t)) * (b.at_index(s) - b.at_index(t)) < 0) return false;
  return true;
}

}  // namespace detail

inline PropertiesReport choquet_properties_check(const TTable& t1, const TTable& t2, const MonotoneMeasure& mu) {
  if (!(t1.family() == mu.family()) || !(t2.family() == mu.family()))
    fail(errc::family_mismatch, "tables and measure live on different families");
  PropertiesReport report;
  constexpr double kEps = 1e-9;

  // (i) T = 0 N_mu-a.e. iff the integral vanishes (N_mu is continuous here).
  std::uint32_t support = 0;
  for (int i = 0; i < t1.family().size(); ++i)
    if (t1.at_index(i) > 0) support |= std::uint32_t{1} << i;
  const bool ae_zero = n_mu(mu, HyperMask(support)) == ExtValue();
  const ExtValue c1 = integrate_riemann(survival_function(t1, mu));
  const bool zero_integral = !c1.is_infinite() && std::fabs(c1.as_double()) <= kEps;
  report.ae_zero_iff_integral_zero = (ae_zero == zero_integral);

  // (iii) comonotone additivity.
  report.comonotone = detail::are_comonotone(t1, t2);
  const ExtValue c2 = integrate_riemann(survival_function(t2, mu));
  const ExtValue csum = integrate_riemann(survival_function(add_tables(t1, t2), mu));
  if (report.comonotone) {
    if (c1.is_infinite() || c2.is_infinite() || csum.is_infinite())
      report.comonotone_additivity = csum.is_infinite();
    else
      report.comonotone_additivity = std::fabs(csum.as_double() - c1.as_double() - c2.as_double()) <= kEps;
  }

  // (iv) strict and weak cut integrals coincide.
  const ExtValue weak1 = detail::integrate_weak_cuts(t1, mu);
  report.cut_variants_agree = (c1.is_infinite() && weak1.is_infinite()) ||
                              (!c1.is_infinite() && !weak1.is_infinite() &&
                               std::fabs(c1.as_double() - weak1.as_double()) <= kEps);

  // (ii) directional modularity checks over the hyperspace table.
  if (mu.family().size() <= kMaxAdditivitySweep && !mu.total().is_infinite()) {
    report.modularity_checked = true;
    const auto table = n_mu_table(mu);
    report.n_supermodular = true;
    report.n_submodular = true;
    const std::uint32_t full = mu.family().full_hyper().bits();
    for (std::uint32_t a = 0; a <= full; ++a)
      for (std::uint32_t b = a; b <= full; ++b) {
        const double lhs = table[a | b].as_double() + table[a & b].as_double();
        const double rhs = table[a].as_double() + table[b].as_double();
        if (lhs < rhs - kEps) report.n_supermodular = false;
        if (lhs > rhs + kEps) report.n_submodular = false;
      }
    if (!c1.is_infinite() && !c2.is_infinite() && !csum.is_infinite()) {
      const double spread = csum.as_double() - c1.as_double() - c2.as_double();
      if (report.n_supermodular) report.supermodular_superadditive = spread >= -kEps;
      if (report.n_submodular) report.submodular_subadditive = spread <= kEps;
    }
  }
  return report;
}

}  // namespace choquet
