#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "choquet/setcore.hpp"

namespace choquet {

/// A value in [0, +inf]. Finite values are doubles; Infinite is the maximum of
/// the order. Subtraction is deliberately not provided; callers that need it
/// extract finite_value() first.
class ExtValue {
 public:
  constexpr ExtValue() = default;

  static ExtValue finite(double v) {
    if (!std::isfinite(v)) fail(errc::not_finite, "expected a finite value");
    if (v < 0) fail(errc::negative_value, "expected a nonnegative value, got " + std::to_string(v));
    return ExtValue(v);
  }
  static constexpr ExtValue infinite() { return ExtValue(std::numeric_limits<double>::infinity()); }
  static ExtValue from_double(double v) {
    if (std::isinf(v) && v > 0) return infinite();
    return finite(v);
  }

  constexpr bool is_infinite() const { return std::isinf(v_); }
  constexpr double as_double() const { return v_; }
  double finite_value() const {
    if (is_infinite()) fail(errc::not_finite, "value is infinite");
    return v_;
  }

  friend constexpr bool operator==(ExtValue, ExtValue) = default;
  friend constexpr auto operator<=>(ExtValue a, ExtValue b) { return a.v_ <=> b.v_; }
  friend constexpr ExtValue operator+(ExtValue a, ExtValue b) { return ExtValue(a.v_ + b.v_); }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  constexpr explicit ExtValue(double v) : v_(v) {}
  double v_ = 0.0;
};

inline ExtValue min(ExtValue a, ExtValue b) { return a < b ? a : b; }
inline ExtValue max(ExtValue a, ExtValue b) { return a < b ? b : a; }

/// Per-element values over the universe; generates minitive/maxitive measures.
using Distribution = std::vector<ExtValue>;

inline void check_distribution(const Universe& universe, const Distribution& d) {
  if (static_cast<int>(d.size()) != universe.size())
    fail(errc::invalid_argument, "distribution length " + std::to_string(d.size()) +
                                     " does not match universe size " + std::to_string(universe.size()));
}

/// A monotone set function mu: family -> [0, inf] with mu(X) > 0.
/// validate_monotone additionally enforces the premeasure convention mu(empty)=0;
/// the distribution-generated constructors may legitimately violate it
/// (a minitive set function has mu(empty) = min pi').
class MonotoneMeasure {
 public:
  const SetFamily& family() const { return family_; }
  ExtValue at_index(int index) const { return values_[static_cast<std::size_t>(index)]; }
  const std::vector<ExtValue>& values() const { return values_; }
  ExtValue total() const { return values_.back(); }  // mu(X)

  ExtValue at(SubsetMask s) const {
    auto idx = family_.index_of(s);
    if (!idx) fail(errc::invalid_argument, "set " + s.to_string() + " is not a family member");
    return at_index(*idx);
  }

  friend bool operator==(const MonotoneMeasure& a, const MonotoneMeasure& b) {
    return a.family_ == b.family_ && a.values_ == b.values_;
  }

 private:
  friend MonotoneMeasure validate_monotone(SetFamily, std::vector<ExtValue>);
  friend MonotoneMeasure make_set_function(SetFamily, std::vector<ExtValue>);
  MonotoneMeasure(SetFamily family, std::vector<ExtValue> values)
      : family_(std::move(family)), values_(std::move(values)) {}

  SetFamily family_;
  std::vector<ExtValue> values_;
};

/// Monotone set function entry point: checks monotonicity and mu(X) > 0 but
/// not the premeasure convention at the empty set.
inline MonotoneMeasure make_set_function(SetFamily family, std::vector<ExtValue> values) {
  if (values.size() != static_cast<std::size_t>(family.size()))
    fail(errc::invalid_argument, "expected " + std::to_string(family.size()) + " values, got " +
                                     std::to_string(values.size()));
  const int p = family.size();
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j && family.member(i).subset_of(family.member(j)) &&
          values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(j)])
        fail(errc::not_monotone, "mu(" + family.member(i).to_string() + ") = " +
                                     values[static_cast<std::size_t>(i)].to_string() + " exceeds mu(" +
                                     family.member(j).to_string() + ") = " +
                                     values[static_cast<std::size_t>(j)].to_string());
  if (values.back() == ExtValue()) fail(errc::total_mass_zero, "mu(X) must be positive");
  return MonotoneMeasure(std::move(family), std::move(values));
}

/// Premeasure entry point: monotone, mu(empty)=0 when present, mu(X) > 0.
inline MonotoneMeasure validate_monotone(SetFamily family, std::vector<ExtValue> values) {
  if (family.contains_empty() && !values.empty() && values.front() != ExtValue())
    fail(errc::empty_not_zero, "mu(empty set) must be 0, got " + values.front().to_string());
  return make_set_function(std::move(family), std::move(values));
}

inline MonotoneMeasure counting_measure(const SetFamily& family) {
  std::vector<ExtValue> values;
  values.reserve(static_cast<std::size_t>(family.size()));
  for (SubsetMask m : family.members()) values.push_back(ExtValue::finite(m.cardinality()));
  return validate_monotone(family, std::move(values));
}

/// mu_*(E) = 1 iff E = X, else 0.
inline MonotoneMeasure weakest_capacity(const SetFamily& family) {
  if (!family.contains_empty()) fail(errc::missing_empty_set, "weakest capacity needs the empty set in the family");
  std::vector<ExtValue> values(static_cast<std::size_t>(family.size()), ExtValue());
  values.back() = ExtValue::finite(1.0);
  return validate_monotone(family, std::move(values));
}

/// mu^*(E) = 0 iff E is empty, else 1.
inline MonotoneMeasure strongest_capacity(const SetFamily& family) {
  if (!family.contains_empty()) fail(errc::missing_empty_set, "strongest capacity needs the empty set in the family");
  std::vector<ExtValue> values(static_cast<std::size_t>(family.size()), ExtValue::finite(1.0));
  values.front() = ExtValue();
  return validate_monotone(family, std::move(values));
}

namespace detail {

inline void require_powerset(const SetFamily& family, const char* who) {
  if (family.size() != (1 << family.universe().size()))
    fail(errc::shape_mismatch, std::string(who) + " requires the full powerset family");
}

inline ExtValue sup_over(const Distribution& d, SubsetMask s) {
  ExtValue best;  // empty sup = 0
  for (std::uint32_t b = s.bits(); b != 0; b &= b - 1)
    best = max(best, d[static_cast<std::size_t>(std::countr_zero(b))]);
  return best;
}

inline ExtValue inf_over(const Distribution& d, SubsetMask s, ExtValue empty_value) {
  if (s.empty()) return empty_value;
  ExtValue best = ExtValue::infinite();
  for (std::uint32_t b = s.bits(); b != 0; b &= b - 1)
    best = min(best, d[static_cast<std::size_t>(std::countr_zero(b))]);
  return best;
}

}  // namespace detail

/// Possibility measure Pi(E) = max{pi(i) : i in E} on a powerset family.
inline MonotoneMeasure possibility_from(const Distribution& pi, const SetFamily& family) {
  detail::require_powerset(family, "possibility_from");
  check_distribution(family.universe(), pi);
  std::vector<ExtValue> values;
  values.reserve(static_cast<std::size_t>(family.size()));
  for (SubsetMask m : family.members()) values.push_back(detail::sup_over(pi, m));
  return validate_monotone(family, std::move(values));
}

/// Necessity measure N(E) = 1 - Pi(E^c) on a powerset family; needs max pi <= 1.
inline MonotoneMeasure necessity_from(const Distribution& pi, const SetFamily& family) {
  detail::require_powerset(family, "necessity_from");
  check_distribution(family.universe(), pi);
  std::vector<ExtValue> values;
  values.reserve(static_cast<std::size_t>(family.size()));
  for (SubsetMask m : family.members()) {
    ExtValue p = detail::sup_over(pi, family.universe().complement(m));
    values.push_back(ExtValue::finite(1.0 - p.finite_value()));
  }
  return validate_monotone(family, std::move(values));
}

/// m(E) = inf{pi'(x) : x not in E}, with inf over the empty index set taken as
/// max pi' (the whole-range convention). Lives on the full powerset.
inline MonotoneMeasure minitive_from_distribution(const Universe& universe, const Distribution& pi_prime) {
  check_distribution(universe, pi_prime);
  SetFamily family = powerset_family(universe);
  ExtValue top = detail::sup_over(pi_prime, universe.full());
  std::vector<ExtValue> values;
  values.reserve(static_cast<std::size_t>(family.size()));
  for (SubsetMask m : family.members())
    values.push_back(detail::inf_over(pi_prime, universe.complement(m), top));
  return make_set_function(std::move(family), std::move(values));
}

/// m(E) = sup{pi(x) : x in E} on the full powerset; empty sup = 0.
inline MonotoneMeasure maxitive_from_distribution(const Universe& universe, const Distribution& pi) {
  check_distribution(universe, pi);
  SetFamily family = powerset_family(universe);
  std::vector<ExtValue> values;
  values.reserve(static_cast<std::size_t>(family.size()));
  for (SubsetMask m : family.members()) values.push_back(detail::sup_over(pi, m));
  return make_set_function(std::move(family), std::move(values));
}

/// Outcome of a structural predicate; carries a witness pair when it fails.
struct CheckOutcome {
  bool holds = true;
  std::string witness;

  explicit operator bool() const { return holds; }
  static CheckOutcome ok() { return {}; }
  static CheckOutcome fails_at(std::string w) { return {false, std::move(w)}; }
};

namespace detail {

inline constexpr int kFullSweepCap = 16;

template <typename Combine, typename Fold>
CheckOutcome lattice_identity_check(const MonotoneMeasure& mu, Combine combine, Fold fold, const char* what) {
  const SetFamily& fam = mu.family();
  const int p = fam.size();
  // Pairs always; whole subfamilies as an extra guard at small p.
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) {
      SubsetMask c = combine(fam.member(i), fam.member(j));
      auto idx = fam.index_of(c);
      if (!idx) continue;
      ExtValue expect = fold(mu.at_index(i), mu.at_index(j));
      if (mu.at_index(*idx) != expect)
        return CheckOutcome::fails_at(std::string(what) + " fails on (" + fam.member(i).to_string() + ", " +
                                      fam.member(j).to_string() + ")");
    }
  if (p <= kFullSweepCap) {
    const std::uint32_t all = (std::uint32_t{1} << p) - 1;
    for (std::uint32_t s = 1; s <= all; ++s) {
      SubsetMask c;
      ExtValue folded;
      bool first = true;
      for (std::uint32_t b = s; b != 0; b &= b - 1) {
        int i = std::countr_zero(b);
        c = first ? fam.member(i) : combine(c, fam.member(i));
        folded = first ? mu.at_index(i) : fold(folded, mu.at_index(i));
        first = false;
      }
      auto idx = fam.index_of(c);
      if (idx && mu.at_index(*idx) != folded)
        return CheckOutcome::fails_at(std::string(what) + " fails on a subfamily of size " +
                                      std::to_string(std::popcount(s)));
    }
  }
  return CheckOutcome::ok();
}

}  // namespace detail

/// m(E intersect F) = min(m(E), m(F)) on every subfamily whose intersection is a member.
inline CheckOutcome is_minitive(const MonotoneMeasure& mu) {
  return detail::lattice_identity_check(
      mu, [](SubsetMask a, SubsetMask b) { return a & b; },
      [](ExtValue a, ExtValue b) { return min(a, b); }, "minitivity");
}

/// m(E union F) = max(m(E), m(F)) on every subfamily whose union is a member.
inline CheckOutcome is_maxitive(const MonotoneMeasure& mu) {
  return detail::lattice_identity_check(
      mu, [](SubsetMask a, SubsetMask b) { return a | b; },
      [](ExtValue a, ExtValue b) { return max(a, b); }, "maxitivity");
}

namespace detail {

template <typename Pred>
CheckOutcome pairwise_check(const MonotoneMeasure& mu, bool disjoint_only, Pred pred, const char* what) {
  const SetFamily& fam = mu.family();
  const int p = fam.size();
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) {
      SubsetMask a = fam.member(i), b = fam.member(j);
      if (disjoint_only && !a.disjoint_with(b)) continue;
      if (!pred(a, b))
        return CheckOutcome::fails_at(std::string(what) + " fails on (" + a.to_string() + ", " + b.to_string() + ")");
    }
  return CheckOutcome::ok();
}

inline constexpr double kPredicateEps = 1e-9;

inline bool ext_eq(ExtValue a, ExtValue b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return std::fabs(a.as_double() - b.as_double()) <= kPredicateEps;
}
inline bool ext_ge(ExtValue a, ExtValue b) {
  if (a.is_infinite()) return true;
  if (b.is_infinite()) return false;
  return a.as_double() >= b.as_double() - kPredicateEps;
}

}  // namespace detail

/// m(E union F) = m(E) + m(F) for disjoint members whose union is a member.
inline CheckOutcome is_additive(const MonotoneMeasure& mu) {
  const SetFamily& fam = mu.family();
  return detail::pairwise_check(
      mu, /*disjoint_only=*/true,
      [&](SubsetMask a, SubsetMask b) {
        auto u = fam.index_of(a | b);
        if (!u) return true;
        return detail::ext_eq(mu.at_index(*u), mu.at(a) + mu.at(b));
      },
      "additivity");
}

inline CheckOutcome is_superadditive(const MonotoneMeasure& mu) {
  const SetFamily& fam = mu.family();
  return detail::pairwise_check(
      mu, /*disjoint_only=*/true,
      [&](SubsetMask a, SubsetMask b) {
        auto u = fam.index_of(a | b);
        if (!u) return true;
        return detail::ext_ge(mu.at_index(*u), mu.at(a) + mu.at(b));
      },
      "superadditivity");
}

inline CheckOutcome is_supermodular(const MonotoneMeasure& mu) {
  const SetFamily& fam = mu.family();
  return detail::pairwise_check(
      mu, /*disjoint_only=*/false,
      [&](SubsetMask a, SubsetMask b) {
        auto u = fam.index_of(a | b);
        auto i = fam.index_of(a & b);
        if (!u || !i) return true;
        return detail::ext_ge(mu.at_index(*u) + mu.at_index(*i), mu.at(a) + mu.at(b));
      },
      "supermodularity");
}

inline CheckOutcome is_submodular(const MonotoneMeasure& mu) {
  const SetFamily& fam = mu.family();
  return detail::pairwise_check(
      mu, /*disjoint_only=*/false,
      [&](SubsetMask a, SubsetMask b) {
        auto u = fam.index_of(a | b);
        auto i = fam.index_of(a & b);
        if (!u || !i) return true;
        return detail::ext_ge(mu.at(a) + mu.at(b), mu.at_index(*u) + mu.at_index(*i));
      },
      "submodularity");
}

/// m^d(E) = m(X) - m(E^c); an involution on complement-closed families.
inline MonotoneMeasure dual_measure(const MonotoneMeasure& mu) {
  if (mu.total().is_infinite()) fail(errc::infinite_total_mass, "dual measure needs mu(X) < inf");
  const SetFamily& fam = mu.family();
  if (!is_closed_under_complements(fam))
    fail(errc::not_complement_closed, "dual measure needs a complement-closed family");
  const double total = mu.total().finite_value();
  std::vector<ExtValue> values;
  values.reserve(static_cast<std::size_t>(fam.size()));
  for (SubsetMask m : fam.members())
    values.push_back(ExtValue::finite(total - mu.at(fam.universe().complement(m)).finite_value()));
  return validate_monotone(fam, std::move(values));
}

/// Strictly increasing enumeration u_1 < ... < u_q of the attained values.
inline std::vector<double> range_of(const MonotoneMeasure& mu) {
  std::vector<double> out;
  out.reserve(mu.values().size());
  for (ExtValue v : mu.values()) out.push_back(v.finite_value());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace choquet
