#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "choquet/errors.hpp"

namespace choquet {

/// Hard caps keeping every 2^p sweep desk-scale and every mask in one word.
inline constexpr int kMaxUniverse = 24;
inline constexpr int kMaxFamily = 24;

/// A subset of the universe {0,..,n-1}; element i present iff bit i is set.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  /// Build from 0-based element indices.
  static SubsetMask of(std::initializer_list<int> elems) {
    std::uint32_t b = 0;
    for (int e : elems) b |= std::uint32_t{1} << e;
    return SubsetMask(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const { return (bits_ >> element) & 1u; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint_with(SubsetMask other) const { return (bits_ & other.bits_) == 0; }

  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) { return a.bits_ <=> b.bits_; }

  /// 1-based element list, for display and serialization.
  std::vector<int> elements_one_based() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements_one_based()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint32_t bits_ = 0;
};

/// The finite ground set X = {0,..,n-1}, 1 <= n <= 24.
class Universe {
 public:
  explicit Universe(int n) : n_(n) {
    if (n < 1 || n > kMaxUniverse)
      fail(errc::element_out_of_range,
           "universe size must be between 1 and " + std::to_string(kMaxUniverse) + ", got " + std::to_string(n));
  }

  int size() const { return n_; }
  SubsetMask full() const { return SubsetMask((std::uint32_t{1} << n_) - 1); }
  bool admits(SubsetMask s) const { return s.subset_of(full()); }
  SubsetMask complement(SubsetMask s) const { return SubsetMask(full().bits() & ~s.bits()); }

  friend bool operator==(Universe, Universe) = default;

 private:
  int n_;
};

/// A subset of a family's index range {0,..,p-1}; member i present iff bit i set.
class HyperMask {
 public:
  constexpr HyperMask() = default;
  constexpr explicit HyperMask(std::uint32_t bits) : bits_(bits) {}

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int index) const { return (bits_ >> index) & 1u; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool subset_of(HyperMask other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr HyperMask operator&(HyperMask a, HyperMask b) { return HyperMask(a.bits_ & b.bits_); }
  friend constexpr HyperMask operator|(HyperMask a, HyperMask b) { return HyperMask(a.bits_ | b.bits_); }
  friend constexpr bool operator==(HyperMask, HyperMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// An indexed collection of distinct subsets of one universe, always containing X.
/// Members are kept in ascending mask order so indices and outputs are stable.
class SetFamily {
 public:
  const Universe& universe() const { return universe_; }
  int size() const { return static_cast<int>(members_.size()); }
  SubsetMask member(int index) const { return members_[static_cast<std::size_t>(index)]; }
  const std::vector<SubsetMask>& members() const { return members_; }

  std::optional<int> index_of(SubsetMask s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it == members_.end() || *it != s) return std::nullopt;
    return static_cast<int>(it - members_.begin());
  }

  bool contains(SubsetMask s) const { return index_of(s).has_value(); }
  bool contains_empty() const { return !members_.empty() && members_.front().empty(); }
  int index_of_universe() const { return size() - 1; }  // X has the largest mask
  int index_of_empty() const { return 0; }              // valid only if contains_empty()

  HyperMask full_hyper() const { return HyperMask((std::uint32_t{1} << size()) - 1); }

  bool admits(HyperMask h) const { return h.subset_of(full_hyper()); }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }

 private:
  friend SetFamily make_family(const Universe&, std::vector<SubsetMask>);
  SetFamily(Universe u, std::vector<SubsetMask> members) : universe_(u), members_(std::move(members)) {}

  Universe universe_;
  std::vector<SubsetMask> members_;
};

/// Deduplicates, sorts ascending by mask and indexes the given members.
inline SetFamily make_family(const Universe& universe, std::vector<SubsetMask> members) {
  if (members.empty()) fail(errc::missing_universe_set, "family must be nonempty and contain the full set X");
  for (SubsetMask m : members)
    if (!universe.admits(m))
      fail(errc::element_out_of_range,
           "member " + m.to_string() + " has elements beyond the universe of size " + std::to_string(universe.size()));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.back() != universe.full())
    fail(errc::missing_universe_set, "family must contain the full set X = " + universe.full().to_string());
  if (static_cast<int>(members.size()) > kMaxFamily)
    fail(errc::family_too_large, "family has " + std::to_string(members.size()) + " members, cap is " +
                                     std::to_string(kMaxFamily));
  return SetFamily(universe, std::move(members));
}

/// The family of all 2^n subsets; only fits under the member cap for n <= 4.
inline SetFamily powerset_family(const Universe& universe) {
  if ((1 << universe.size()) > kMaxFamily)
    fail(errc::family_too_large, "powerset of a universe of size " + std::to_string(universe.size()) + " has " +
                                     std::to_string(1 << universe.size()) + " members, cap is " +
                                     std::to_string(kMaxFamily));
  std::vector<SubsetMask> members;
  members.reserve(std::size_t{1} << universe.size());
  for (std::uint32_t b = 0; b <= universe.full().bits(); ++b) members.emplace_back(b);
  return make_family(universe, std::move(members));
}

inline bool is_closed_under_complements(const SetFamily& family) {
  for (SubsetMask m : family.members())
    if (!family.contains(family.universe().complement(m))) return false;
  return true;
}

}  // namespace choquet
