#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "choquet/aggregation.hpp"
#include "choquet/hypermeasure.hpp"

namespace choquet {

/// Enumeration cap for the Moebius transform: 2^20 entries, about 8 MB.
inline constexpr int kMaxMoebiusFamily = 20;
inline constexpr int kMaxAllocationSweep = 16;

/// The signed Moebius transform of N_mu over the hyperspace lattice,
/// M(S) = sum over G subset S of (-1)^{|S minus G|} N_mu(G), stored for every
/// hypermask. The zeta transform (subset sums) recovers N_mu exactly.
class MoebiusTable {
 public:
  const SetFamily& family() const { return family_; }
  const std::vector<double>& entries() const { return entries_; }

  double at(HyperMask hyper) const {
    if (!family_.admits(hyper)) fail(errc::invalid_argument, "hypermask exceeds the family index range");
    return entries_[hyper.bits()];
  }

 private:
  friend MoebiusTable moebius_transform(const MonotoneMeasure&);
  MoebiusTable(SetFamily family, std::vector<double> entries)
      : family_(std::move(family)), entries_(std::move(entries)) {}

  SetFamily family_;
  std::vector<double> entries_;
};

/// In-place subset-lattice convolution, O(p * 2^p).
inline MoebiusTable moebius_transform(const MonotoneMeasure& mu) {
  const SetFamily& fam = mu.family();
  const int p = fam.size();
  if (p > kMaxMoebiusFamily)
    fail(errc::family_too_large_for_enumeration,
         "Moebius transform capped at p <= " + std::to_string(kMaxMoebiusFamily) + ", family has " +
             std::to_string(p));
  if (mu.total().is_infinite()) fail(errc::infinite_total_mass, "Moebius transform needs finite measure values");

  const auto n_values = n_mu_table(mu);
  std::vector<double> entries(n_values.size());
  for (std::size_t i = 0; i < n_values.size(); ++i) entries[i] = n_values[i].finite_value();
  for (int bit = 0; bit < p; ++bit) {
    const std::uint32_t step = std::uint32_t{1} << bit;
    for (std::uint32_t s = 0; s < entries.size(); ++s)
      if (s & step) entries[s] -= entries[s ^ step];
  }
  return MoebiusTable(fam, std::move(entries));
}

/// Zeta transform at one hypermask: sum of M over all subsets of hyper.
inline double zeta(const MoebiusTable& table, HyperMask hyper) {
  if (!table.family().admits(hyper)) fail(errc::invalid_argument, "hypermask exceeds the family index range");
  double total = 0.0;
  std::uint32_t s = hyper.bits();
  while (true) {
    total += table.entries()[s];
    if (s == 0) break;
    s = (s - 1) & hyper.bits();
  }
  return total;
}

/// T^h on the atom {hyper} of the allocation: min of T over the members of a
/// nonempty hypermask.
inline double t_h_atom(const TTable& table, HyperMask hyper) {
  if (hyper.empty()) fail(errc::empty_atom, "allocation atoms are nonempty hypermasks");
  if (!table.family().admits(hyper)) fail(errc::invalid_argument, "hypermask exceeds the family index range");
  double best = 0.0;
  bool first = true;
  for (int i = 0; i < table.family().size(); ++i)
    if (hyper.contains(i)) {
      best = first ? table.at_index(i) : std::min(best, table.at_index(i));
      first = false;
    }
  return best;
}

namespace detail {

/// minT over every hypermask; entry 0 holds +inf as a sentinel.
inline std::vector<double> min_t_table(const TTable& table) {
  const int p = table.family().size();
  std::vector<double> out(std::size_t{1} << p, std::numeric_limits<double>::infinity());
  for (std::uint32_t s = 1; s < out.size(); ++s) {
    const int low = std::countr_zero(s);
    out[s] = std::min(out[s & (s - 1)], table.at_index(low));
  }
  return out;
}

}  // namespace detail

/// The Moebius-route integral: sum over nonempty hypermasks of
/// M({S}) * min of T over S.
inline double integrate_moebius(const TTable& table, const MonotoneMeasure& mu) {
  if (!(table.family() == mu.family())) fail(errc::family_mismatch, "T and mu live on different families");
  if (!mu.family().contains_empty())
    fail(errc::missing_empty_set, "the Moebius route needs the empty set in the family");
  const MoebiusTable moebius = moebius_transform(mu);
  const auto min_t = detail::min_t_table(table);
  double total = 0.0;
  for (std::uint32_t s = 1; s < min_t.size(); ++s) total += moebius.entries()[s] * min_t[s];
  return total;
}

/// Finite-scale allocation identity: for each alpha, the atoms with
/// T^h >= alpha are exactly the nonempty subsets of the weak cut {T >= alpha}.
inline bool allocation_cut_check(const TTable& table, const std::vector<double>& alphas) {
  const int p = table.family().size();
  if (p > kMaxAllocationSweep)
    fail(errc::family_too_large_for_enumeration,
         "allocation sweep capped at p <= " + std::to_string(kMaxAllocationSweep));
  const auto min_t = detail::min_t_table(table);
  for (double alpha : alphas) {
    std::uint32_t weak = 0;
    for (int i = 0; i < p; ++i)
      if (table.at_index(i) >= alpha) weak |= std::uint32_t{1} << i;
    for (std::uint32_t s = 1; s < min_t.size(); ++s)
      if ((min_t[s] >= alpha) != ((s & ~weak) == 0)) return false;
  }
  return true;
}

}  // namespace choquet
