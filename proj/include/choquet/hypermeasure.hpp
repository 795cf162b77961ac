#pragma once

#include <string>
#include <vector>

#include "choquet/measures.hpp"

namespace choquet {

/// Caps for the exhaustive hyperspace sweeps.
inline constexpr int kMaxHyperEnumeration = 16;  // 2^p tables
inline constexpr int kMaxAdditivitySweep = 10;   // 3^p disjoint pairs

/// N_mu(H) = min{mu(E) : E in family but not in H}; min over the empty
/// remainder is mu(X). Evaluation is lazy, O(p) per query.
inline ExtValue n_mu(const MonotoneMeasure& mu, HyperMask hyper) {
  const SetFamily& fam = mu.family();
  if (!fam.admits(hyper)) fail(errc::invalid_argument, "hypermask exceeds the family index range");
  if (hyper == fam.full_hyper()) return mu.total();
  ExtValue best = ExtValue::infinite();
  for (int i = 0; i < fam.size(); ++i)
    if (!hyper.contains(i)) best = min(best, mu.at_index(i));
  return best;
}

/// Evaluates n_mu as a callable; borrows the measure.
struct HyperMeasureView {
  const MonotoneMeasure& mu;
  ExtValue operator()(HyperMask hyper) const { return n_mu(mu, hyper); }
};

/// All 2^p values of N_mu, indexed by hypermask bits. O(2^p).
inline std::vector<ExtValue> n_mu_table(const MonotoneMeasure& mu) {
  const SetFamily& fam = mu.family();
  const int p = fam.size();
  if (p > kMaxFamily) fail(errc::family_too_large_for_enumeration, "family too large");
  const std::size_t size = std::size_t{1} << p;
  // inner_min[S] = min of mu over the members indexed by S (inf for S = 0).
  std::vector<ExtValue> inner_min(size, ExtValue::infinite());
  for (std::uint32_t s = 1; s < size; ++s) {
    int low = std::countr_zero(s);
    inner_min[s] = min(inner_min[s & (s - 1)], mu.at_index(low));
  }
  std::vector<ExtValue> out(size);
  const std::uint32_t full = fam.full_hyper().bits();
  for (std::uint32_t h = 0; h < size; ++h)
    out[h] = (h == full) ? mu.total() : inner_min[full & ~h];
  return out;
}

/// sup{mu^d(E^c) : E in H}, the maxitive dual of N_mu; empty sup = 0.
inline ExtValue pi_mu_dual(const MonotoneMeasure& mu, HyperMask hyper) {
  if (mu.total().is_infinite()) fail(errc::infinite_total_mass, "dual transform needs mu(X) < inf");
  const SetFamily& fam = mu.family();
  if (!is_closed_under_complements(fam))
    fail(errc::not_complement_closed, "dual transform needs a complement-closed family");
  if (!fam.admits(hyper)) fail(errc::invalid_argument, "hypermask exceeds the family index range");
  const double total = mu.total().finite_value();
  ExtValue best;  // 0
  for (int i = 0; i < fam.size(); ++i)
    if (hyper.contains(i)) {
      // mu^d(E^c) = mu(X) - mu(E); E^c's complement is E itself.
      best = max(best, ExtValue::finite(total - mu.at_index(i).finite_value()));
    }
  return best;
}

/// {mu < alpha} as a hypermask over family indices.
inline HyperMask strict_cut(const MonotoneMeasure& mu, double alpha) {
  std::uint32_t bits = 0;
  for (int i = 0; i < mu.family().size(); ++i)
    if (mu.at_index(i).as_double() < alpha) bits |= std::uint32_t{1} << i;
  return HyperMask(bits);
}

/// {mu <= alpha} as a hypermask over family indices.
inline HyperMask weak_cut(const MonotoneMeasure& mu, double alpha) {
  std::uint32_t bits = 0;
  for (int i = 0; i < mu.family().size(); ++i)
    if (mu.at_index(i).as_double() <= alpha) bits |= std::uint32_t{1} << i;
  return HyperMask(bits);
}

/// Cut characterization of N_mu: (a) alpha <= N_mu(H) iff {mu<alpha} subset H,
/// (b) N_mu(H) < alpha iff some member of {mu<alpha} is outside H, and (c) the
/// equality variant with the epsilon clause read as min-outside <= alpha under
/// the min-over-empty = mu(X) convention. Returns whether all three agree with
/// direct evaluation.
inline bool n_mu_equals(const MonotoneMeasure& mu, HyperMask hyper, double alpha) {
  const SetFamily& fam = mu.family();
  const ExtValue n = n_mu(mu, hyper);
  const HyperMask below = strict_cut(mu, alpha);

  const bool a_lhs = alpha <= n.as_double();
  const bool a_rhs = below.subset_of(hyper);
  if (a_lhs != a_rhs) return false;

  const bool b_lhs = n.as_double() < alpha;
  const bool b_rhs = (below.bits() & ~hyper.bits()) != 0;
  if (b_lhs != b_rhs) return false;

  ExtValue outside_min = mu.total();
  if (hyper != fam.full_hyper()) {
    outside_min = ExtValue::infinite();
    for (int i = 0; i < fam.size(); ++i)
      if (!hyper.contains(i)) outside_min = min(outside_min, mu.at_index(i));
  }
  const bool c_lhs = n.as_double() == alpha;
  const bool c_rhs = a_rhs && outside_min.as_double() <= alpha;
  return c_lhs == c_rhs;
}

/// Closed form of N for the counting measure on 2^[3]; test oracle for n_mu.
inline ExtValue counting_oracle(const SetFamily& family, HyperMask hyper) {
  if (family.universe().size() != 3 || family.size() != 8)
    fail(errc::shape_mismatch, "counting oracle is defined on the powerset of a 3-element universe");
  if (!family.admits(hyper)) fail(errc::invalid_argument, "hypermask exceeds the family index range");
  auto missing_of_size = [&](int k) {
    for (int i = 0; i < family.size(); ++i)
      if (!hyper.contains(i) && family.member(i).cardinality() == k) return true;
    return false;
  };
  if (!hyper.contains(family.index_of_empty())) return ExtValue();
  if (missing_of_size(1)) return ExtValue::finite(1.0);
  if (missing_of_size(2)) return ExtValue::finite(2.0);
  return ExtValue::finite(3.0);  // full hypermask or full minus X
}

/// Closed form of N for the weakest capacity: 1 iff H covers everything except
/// possibly X, else 0.
inline ExtValue weakest_oracle(const SetFamily& family, HyperMask hyper) {
  if (!family.contains_empty()) fail(errc::missing_empty_set, "weakest oracle needs the empty set in the family");
  if (!family.admits(hyper)) fail(errc::invalid_argument, "hypermask exceeds the family index range");
  const std::uint32_t all_but_x = family.full_hyper().bits() & ~(std::uint32_t{1} << family.index_of_universe());
  return (all_but_x & ~hyper.bits()) == 0 ? ExtValue::finite(1.0) : ExtValue();
}

/// Closed form of N for the strongest capacity: 0 iff the empty set is outside
/// H. The worked example in the source material lists only the two extreme
/// hypermasks for the zero case; direct evaluation of the definition gives this
/// full characterization, which is what n_mu agreement requires.
inline ExtValue strongest_oracle(const SetFamily& family, HyperMask hyper) {
  if (!family.contains_empty()) fail(errc::missing_empty_set, "strongest oracle needs the empty set in the family");
  if (!family.admits(hyper)) fail(errc::invalid_argument, "hypermask exceeds the family index range");
  return hyper.contains(family.index_of_empty()) ? ExtValue::finite(1.0) : ExtValue();
}

/// Exhaustive characterization of the N_mu zero sets and range, for families
/// containing the empty set: (a) N_mu(H) = 0 iff some zero-measure member is
/// outside H, (b) N_mu({empty}) = 0 iff mu has more than one zero set,
/// (c) rng(N_mu) = rng(mu).
inline bool zero_set_check(const MonotoneMeasure& mu) {
  const SetFamily& fam = mu.family();
  if (!fam.contains_empty()) fail(errc::missing_empty_set, "zero-set characterization assumes the empty set");
  if (fam.size() > kMaxHyperEnumeration)
    fail(errc::family_too_large_for_enumeration,
         "zero-set sweep capped at p <= " + std::to_string(kMaxHyperEnumeration));

  const auto table = n_mu_table(mu);
  const std::uint32_t full = fam.full_hyper().bits();
  for (std::uint32_t h = 0; h <= full; ++h) {
    bool zero_outside = false;
    for (int i = 0; i < fam.size(); ++i)
      if (!(h >> i & 1u) && mu.at_index(i) == ExtValue()) zero_outside = true;
    if ((table[h] == ExtValue()) != zero_outside) return false;
  }

  int zero_sets = 0;
  for (ExtValue v : mu.values())
    if (v == ExtValue()) ++zero_sets;
  const HyperMask just_empty(std::uint32_t{1} << fam.index_of_empty());
  if ((n_mu(mu, just_empty) == ExtValue()) != (zero_sets > 1)) return false;

  std::vector<double> n_range;
  n_range.reserve(table.size());
  for (ExtValue v : table) n_range.push_back(v.as_double());
  std::sort(n_range.begin(), n_range.end());
  n_range.erase(std::unique(n_range.begin(), n_range.end()), n_range.end());
  return n_range == range_of(mu);
}

/// Verdict of the additivity characterization: N_mu is additive over disjoint
/// hypermask pairs iff mu is 0 at the empty set and constant elsewhere.
struct AdditivityVerdict {
  bool constant_pattern = false;
  bool hyper_additive = false;
  std::string witness;  // violating disjoint pair, when not additive

  bool agree() const { return constant_pattern == hyper_additive; }
};

inline AdditivityVerdict additivity_verdict(const MonotoneMeasure& mu) {
  const SetFamily& fam = mu.family();
  if (!fam.contains_empty()) fail(errc::missing_empty_set, "additivity characterization assumes the empty set");
  if (fam.size() > kMaxAdditivitySweep)
    fail(errc::family_too_large_for_enumeration,
         "disjoint-pair sweep capped at p <= " + std::to_string(kMaxAdditivitySweep));

  AdditivityVerdict verdict;
  verdict.constant_pattern = mu.at_index(fam.index_of_empty()) == ExtValue();
  for (int i = 0; i < fam.size(); ++i)
    if (i != fam.index_of_empty() && mu.at_index(i) != mu.total()) verdict.constant_pattern = false;

  const auto table = n_mu_table(mu);
  const std::uint32_t full = fam.full_hyper().bits();
  verdict.hyper_additive = true;
  for (std::uint32_t a = 0; a <= full && verdict.hyper_additive; ++a) {
    const std::uint32_t rest = full & ~a;
    // Enumerate b over all submasks of the complement, including empty.
    std::uint32_t b = rest;
    while (true) {
      if (!detail::ext_eq(table[a | b], table[a] + table[b])) {
        verdict.hyper_additive = false;
        verdict.witness = "hypermasks " + std::to_string(a) + " and " + std::to_string(b);
        break;
      }
      if (b == 0) break;
      b = (b - 1) & rest;
    }
  }
  return verdict;
}

/// The spec-level boolean: does the constant-pattern test match exhaustive
/// disjoint-pair additivity of N_mu?
inline bool additivity_characterization(const MonotoneMeasure& mu) { return additivity_verdict(mu).agree(); }

}  // namespace choquet
