#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choquet/hypermeasure.hpp"
#include "choquet/measures.hpp"

namespace choquet {

/// Input functions are nonnegative finite vectors over the universe.
using FnVector = std::vector<double>;

inline void check_fn_vector(const Universe& universe, const FnVector& f) {
  if (static_cast<int>(f.size()) != universe.size())
    fail(errc::invalid_argument, "function vector length " + std::to_string(f.size()) +
                                     " does not match universe size " + std::to_string(universe.size()));
  for (double v : f) {
    if (!std::isfinite(v)) fail(errc::not_finite, "function values must be finite");
    if (v < 0) fail(errc::negative_value, "function values must be nonnegative");
  }
}

/// Standard Choquet integral of f under m on the full powerset, via the
/// sorted-differences sum. Ties among equal coordinates are broken by element
/// index; the result is tie-invariant.
inline double choquet_std(const FnVector& f, const MonotoneMeasure& m) {
  detail::require_powerset(m.family(), "choquet_std");
  check_fn_vector(m.family().universe(), f);
  const int n = m.family().universe().size();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f[a] < f[b]; });

  double result = 0.0;
  double prev = 0.0;
  std::uint32_t level = m.family().universe().full().bits();
  for (int k = 0; k < n; ++k) {
    const double v = f[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    const double width = v - prev;
    if (width > 0) result += width * m.at(SubsetMask(level)).as_double();
    prev = v;
    level &= ~(std::uint32_t{1} << order[static_cast<std::size_t>(k)]);
  }
  return result;
}

/// Sugeno integral: max over levels v of min(v, m({f >= v})).
inline double sugeno_std(const FnVector& f, const MonotoneMeasure& m) {
  detail::require_powerset(m.family(), "sugeno_std");
  check_fn_vector(m.family().universe(), f);
  const int n = m.family().universe().size();
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = f[static_cast<std::size_t>(i)];
    std::uint32_t level = 0;
    for (int j = 0; j < n; ++j)
      if (f[static_cast<std::size_t>(j)] >= v) level |= std::uint32_t{1} << j;
    best = std::max(best, std::min(v, m.at(SubsetMask(level)).as_double()));
  }
  return best;
}

/// Shilkret integral: max over levels v of v * m({f >= v}).
inline double shilkret_std(const FnVector& f, const MonotoneMeasure& m) {
  detail::require_powerset(m.family(), "shilkret_std");
  check_fn_vector(m.family().universe(), f);
  const int n = m.family().universe().size();
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = f[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    std::uint32_t level = 0;
    for (int j = 0; j < n; ++j)
      if (f[static_cast<std::size_t>(j)] >= v) level |= std::uint32_t{1} << j;
    best = std::max(best, v * m.at(SubsetMask(level)).as_double());
  }
  return best;
}

enum class AggKind { sup, inf, sum, choquet, sugeno, shilkret };

inline const char* agg_kind_name(AggKind k) {
  switch (k) {
    case AggKind::sup: return "sup";
    case AggKind::inf: return "inf";
    case AggKind::sum: return "sum";
    case AggKind::choquet: return "choquet";
    case AggKind::sugeno: return "sugeno";
    case AggKind::shilkret: return "shilkret";
  }
  return "unknown";
}

/// One conditional aggregation operator; integral kinds carry an inner measure
/// on the full powerset of the same universe.
struct CondOp {
  AggKind kind = AggKind::sup;
  std::optional<MonotoneMeasure> inner;
};

inline bool needs_inner(AggKind k) {
  return k == AggKind::choquet || k == AggKind::sugeno || k == AggKind::shilkret;
}

/// A family of conditional aggregation operators: one operator per family
/// member E, applied to the conditional set E^c. The convention A(.|empty) = 0
/// is implicit.
class FCASpec {
 public:
  static FCASpec uniform(SetFamily family, AggKind kind) {
    if (needs_inner(kind)) fail(errc::invalid_argument, std::string(agg_kind_name(kind)) + " needs an inner measure");
    std::vector<CondOp> ops(static_cast<std::size_t>(family.size()), CondOp{kind, std::nullopt});
    return FCASpec(std::move(family), std::move(ops));
  }

  static FCASpec with_inner(SetFamily family, AggKind kind, MonotoneMeasure inner) {
    if (!needs_inner(kind))
      fail(errc::invalid_argument, std::string(agg_kind_name(kind)) + " does not take an inner measure");
    std::vector<CondOp> ops(static_cast<std::size_t>(family.size()), CondOp{kind, std::move(inner)});
    return FCASpec(std::move(family), std::move(ops));
  }

  static FCASpec mixed(SetFamily family, std::vector<CondOp> ops) {
    if (ops.size() != static_cast<std::size_t>(family.size()))
      fail(errc::invalid_argument, "expected one operator per family member");
    return FCASpec(std::move(family), std::move(ops));
  }

  const SetFamily& family() const { return family_; }
  const CondOp& op_for_member(int index) const { return ops_[static_cast<std::size_t>(index)]; }

 private:
  FCASpec(SetFamily family, std::vector<CondOp> ops) : family_(std::move(family)), ops_(std::move(ops)) {
    for (const CondOp& op : ops_) {
      if (needs_inner(op.kind)) {
        if (!op.inner) fail(errc::invalid_argument, "integral operator kind without an inner measure");
        detail::require_powerset(op.inner->family(), "FCA inner measure");
        if (!(op.inner->family().universe() == family_.universe()))
          fail(errc::family_mismatch, "inner measure universe does not match the family universe");
      }
    }
  }

  SetFamily family_;
  std::vector<CondOp> ops_;
};

/// A(f|E) for a legal conditional set E (one with E^c in the family).
inline double cond_agg(const FCASpec& spec, const FnVector& f, SubsetMask cond) {
  const SetFamily& fam = spec.family();
  const Universe& uni = fam.universe();
  check_fn_vector(uni, f);
  if (!uni.admits(cond)) fail(errc::element_out_of_range, "conditional set exceeds the universe");
  auto member = fam.index_of(uni.complement(cond));
  if (!member)
    fail(errc::illegal_conditional_set,
         "conditional set " + cond.to_string() + " has no complement in the family");
  if (cond.empty()) return 0.0;

  const CondOp& op = spec.op_for_member(*member);
  switch (op.kind) {
    case AggKind::sup: {
      double best = 0.0;
      bool first = true;
      for (std::uint32_t b = cond.bits(); b != 0; b &= b - 1) {
        double v = f[static_cast<std::size_t>(std::countr_zero(b))];
        best = first ? v : std::max(best, v);
        first = false;
      }
      return best;
    }
    case AggKind::inf: {
      double best = 0.0;
      bool first = true;
      for (std::uint32_t b = cond.bits(); b != 0; b &= b - 1) {
        double v = f[static_cast<std::size_t>(std::countr_zero(b))];
        best = first ? v : std::min(best, v);
        first = false;
      }
      return best;
    }
    case AggKind::sum: {
      double total = 0.0;
      for (std::uint32_t b = cond.bits(); b != 0; b &= b - 1)
        total += f[static_cast<std::size_t>(std::countr_zero(b))];
      return total;
    }
    case AggKind::choquet:
    case AggKind::sugeno:
    case AggKind::shilkret: {
      FnVector restricted(f.size(), 0.0);
      for (std::uint32_t b = cond.bits(); b != 0; b &= b - 1) {
        auto i = static_cast<std::size_t>(std::countr_zero(b));
        restricted[i] = f[i];
      }
      if (op.kind == AggKind::choquet) return choquet_std(restricted, *op.inner);
      if (op.kind == AggKind::sugeno) return sugeno_std(restricted, *op.inner);
      return shilkret_std(restricted, *op.inner);
    }
  }
  fail(errc::invalid_argument, "unknown operator kind");
}

/// The transformed input T(E) = A(f|E^c), one finite value per family member.
class TTable {
 public:
  static TTable from_values(SetFamily family, std::vector<double> values) {
    if (values.size() != static_cast<std::size_t>(family.size()))
      fail(errc::invalid_argument, "expected " + std::to_string(family.size()) + " T values");
    for (double v : values) {
      if (!std::isfinite(v)) fail(errc::not_finite, "T values must be finite");
      if (v < 0) fail(errc::negative_value, "T values must be nonnegative");
    }
    if (values.back() != 0.0)
      fail(errc::nonzero_at_x, "T(X) must be 0, got " + std::to_string(values.back()));
    return TTable(std::move(family), std::move(values));
  }

  const SetFamily& family() const { return family_; }
  double at_index(int index) const { return values_[static_cast<std::size_t>(index)]; }
  const std::vector<double>& values() const { return values_; }
  double max_value() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, v);
    return m;
  }

 private:
  TTable(SetFamily family, std::vector<double> values) : family_(std::move(family)), values_(std::move(values)) {}

  SetFamily family_;
  std::vector<double> values_;
};

inline TTable build_T(const FCASpec& spec, const FnVector& f) {
  const SetFamily& fam = spec.family();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(fam.size()));
  for (SubsetMask m : fam.members()) values.push_back(cond_agg(spec, f, fam.universe().complement(m)));
  return TTable::from_values(fam, std::move(values));
}

/// Pointwise sum of two T tables over the same family.
inline TTable add_tables(const TTable& a, const TTable& b) {
  if (!(a.family() == b.family())) fail(errc::family_mismatch, "T tables live on different families");
  std::vector<double> values(a.values());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += b.values()[i];
  return TTable::from_values(a.family(), std::move(values));
}

/// Generic aggregation signature used by the axiom check, so broken
/// aggregators can be exercised as negative controls.
using CondAggFn = std::function<double(const FnVector&, SubsetMask)>;

/// Checks (C1) monotonicity on each conditional set over the sampled pairs,
/// (C2) vanishing on the complement's indicator, and the A(.|empty) = 0
/// convention.
inline bool axiom_check(const SetFamily& family, const CondAggFn& agg, const std::vector<FnVector>& samples) {
  const Universe& uni = family.universe();
  const int n = uni.size();
  for (SubsetMask member : family.members()) {
    const SubsetMask cond = uni.complement(member);
    if (cond.empty()) {
      FnVector ones(static_cast<std::size_t>(n), 1.0);
      if (agg(ones, cond) != 0.0) return false;
      continue;
    }
    FnVector indicator(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      if (!cond.contains(i)) indicator[static_cast<std::size_t>(i)] = 1.0;
    if (std::fabs(agg(indicator, cond)) > 1e-12) return false;

    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      const FnVector& lo = samples[i];
      FnVector hi = samples[i + 1];
      for (int k = 0; k < n; ++k)
        if (cond.contains(k)) {
          auto ki = static_cast<std::size_t>(k);
          hi[ki] = std::max(hi[ki], lo[ki]);
        }
      if (agg(lo, cond) > agg(hi, cond) + 1e-12) return false;
    }
  }
  return true;
}

inline bool axiom_check(const FCASpec& spec, const std::vector<FnVector>& samples) {
  return axiom_check(spec.family(), [&spec](const FnVector& f, SubsetMask cond) { return cond_agg(spec, f, cond); },
                     samples);
}

/// True iff aggregating the constant ybar returns ybar on every nonempty
/// conditional set, i.e. T(E) = ybar for every member E except X.
inline bool is_ybar_idempotent(const FCASpec& spec, double ybar) {
  if (!(ybar > 0) || !std::isfinite(ybar)) fail(errc::invalid_argument, "ybar must be positive and finite");
  const SetFamily& fam = spec.family();
  const FnVector constant(static_cast<std::size_t>(fam.universe().size()), ybar);
  for (SubsetMask member : fam.members()) {
    const SubsetMask cond = fam.universe().complement(member);
    if (cond.empty()) continue;
    if (std::fabs(cond_agg(spec, constant, cond) - ybar) > 1e-12 * std::max(1.0, ybar)) return false;
  }
  return true;
}

/// The complementary transform: barT(E) = A(ybar|E) - A(ybar - f|E) for
/// nonempty members, infinite at the empty set.
class BarTTable {
 public:
  const SetFamily& family() const { return family_; }
  ExtValue at_index(int index) const { return values_[static_cast<std::size_t>(index)]; }
  const std::vector<ExtValue>& values() const { return values_; }
  double ybar() const { return ybar_; }

 private:
  friend BarTTable build_bar_T(const FCASpec&, const FnVector&, double);
  BarTTable(SetFamily family, std::vector<ExtValue> values, double ybar)
      : family_(std::move(family)), values_(std::move(values)), ybar_(ybar) {}

  SetFamily family_;
  std::vector<ExtValue> values_;
  double ybar_;
};

inline BarTTable build_bar_T(const FCASpec& spec, const FnVector& f, double ybar) {
  const SetFamily& fam = spec.family();
  check_fn_vector(fam.universe(), f);
  if (!is_closed_under_complements(fam))
    fail(errc::not_complement_closed, "the complementary transform needs a complement-closed family");
  for (double v : f)
    if (v > ybar) fail(errc::fn_exceeds_ybar, "function exceeds ybar = " + std::to_string(ybar));
  if (!is_ybar_idempotent(spec, ybar))
    fail(errc::not_idempotent, "FCA is not ybar-idempotent for ybar = " + std::to_string(ybar));

  FnVector residual(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) residual[i] = ybar - f[i];

  std::vector<ExtValue> values;
  values.reserve(static_cast<std::size_t>(fam.size()));
  for (SubsetMask member : fam.members()) {
    if (member.empty()) {
      values.push_back(ExtValue::infinite());
      continue;
    }
    // A(ybar|E) = ybar by idempotence; clamp tiny negative residue.
    const double v = ybar - cond_agg(spec, residual, member);
    values.push_back(ExtValue::finite(std::max(0.0, v)));
  }
  return BarTTable(fam, std::move(values), ybar);
}

}  // namespace choquet
