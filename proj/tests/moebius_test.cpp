#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "choquet/moebius.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace choquet;
using Catch::Matchers::WithinAbs;

namespace {

SetFamily worked_family() {
  Universe u(3);
  return make_family(u, {SubsetMask::of({}), SubsetMask::of({0}), u.full()});
}

MonotoneMeasure worked_measure() {
  return validate_monotone(worked_family(), {ExtValue::finite(0), ExtValue::finite(0.2), ExtValue::finite(1)});
}

TTable worked_table() { return build_T(FCASpec::uniform(worked_family(), AggKind::sum), {1, 2, 1}); }

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::invalid_argument;
}

}  // namespace

TEST_CASE("the worked Moebius table") {
  MoebiusTable table = moebius_transform(worked_measure());
  // Hypermask bits over members (empty, {1}, X).
  REQUIRE_THAT(table.at(HyperMask(0b001)), WithinAbs(0.2, 1e-12));
  REQUIRE_THAT(table.at(HyperMask(0b010)), WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(table.at(HyperMask(0b100)), WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(table.at(HyperMask(0b011)), WithinAbs(0.8, 1e-12));
  REQUIRE_THAT(table.at(HyperMask(0b101)), WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(table.at(HyperMask(0b110)), WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(table.at(HyperMask(0b111)), WithinAbs(0.0, 1e-12));

  REQUIRE_THAT(zeta(table, HyperMask(0b011)), WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(zeta(table, HyperMask(0)), WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(zeta(table, HyperMask(0b111)), WithinAbs(1.0, 1e-12));
}

TEST_CASE("fast transform equals the alternating-sign sum") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 40; ++trial) {
    SetFamily fam = testsupport::random_family(rng, 1 + trial % 4, 3 + trial % 6);
    MonotoneMeasure mu = testsupport::random_measure(rng, fam);
    MoebiusTable table = moebius_transform(mu);
    const auto expected = testsupport::oracle_moebius(testsupport::oracle_n_table(mu), fam.size());
    for (std::size_t s = 0; s < expected.size(); ++s)
      REQUIRE_THAT(table.entries()[s], WithinAbs(expected[s], 1e-9));
  }
}

TEST_CASE("zeta inverts the transform everywhere") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    SetFamily fam = testsupport::random_family(rng, 1 + trial % 4, 4 + trial % 7);
    MonotoneMeasure mu = testsupport::random_measure(rng, fam);
    MoebiusTable table = moebius_transform(mu);
    double signed_total = 0.0;
    for (std::uint32_t h = 0; h <= fam.full_hyper().bits(); ++h) {
      REQUIRE_THAT(zeta(table, HyperMask(h)), WithinAbs(n_mu(mu, HyperMask(h)).as_double(), 1e-9));
      if (h != 0) signed_total += table.entries()[h];
    }
    // The nonempty entries sum to the zeta at the full hypermask: mu(X).
    REQUIRE_THAT(signed_total, WithinAbs(mu.total().as_double(), 1e-9));
  }
}

TEST_CASE("an additive transform concentrates on singletons") {
  SetFamily p2 = powerset_family(Universe(2));
  std::vector<ExtValue> constant{ExtValue(), ExtValue::finite(1), ExtValue::finite(1), ExtValue::finite(1)};
  MoebiusTable table = moebius_transform(validate_monotone(p2, constant));
  for (std::uint32_t s = 1; s <= p2.full_hyper().bits(); ++s)
    if (std::popcount(s) > 1) REQUIRE_THAT(table.entries()[s], WithinAbs(0.0, 1e-12));
}

TEST_CASE("a mass concentrated at the top transforms to the full atom") {
  // Synthetic lattice function: 0 everywhere except the full hypermask. Its
  // alternating-sign transform is supported on the full mask and the subset
  // sums recover the original function.
  const int p = 4;
  std::vector<double> synthetic(std::size_t{1} << p, 0.0);
  synthetic.back() = 0.7;
  const auto moebius = testsupport::oracle_moebius(synthetic, p);
  for (std::uint32_t s = 0; s + 1 < moebius.size(); ++s) REQUIRE_THAT(moebius[s], WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(moebius.back(), WithinAbs(0.7, 1e-15));
  for (std::uint32_t s = 0; s < moebius.size(); ++s) {
    double total = 0.0;
    std::uint32_t g = s;
    while (true) {
      total += moebius[g];
      if (g == 0) break;
      g = (g - 1) & s;
    }
    REQUIRE_THAT(total, WithinAbs(synthetic[s], 1e-15));
  }
}

TEST_CASE("atom minima over the worked table") {
  TTable t = worked_table();
  const double expected[] = {4, 3, 0, 3, 0, 0, 0};
  const std::uint32_t masks[] = {0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  for (int i = 0; i < 7; ++i) REQUIRE(t_h_atom(t, HyperMask(masks[i])) == expected[i]);
  REQUIRE(code_of([&] { t_h_atom(t, HyperMask(0)); }) == errc::empty_atom);
}

TEST_CASE("the Moebius route reproduces the worked integral") {
  REQUIRE_THAT(integrate_moebius(worked_table(), worked_measure()), WithinAbs(3.2, 1e-12));
  TTable zero = TTable::from_values(worked_family(), {0, 0, 0});
  REQUIRE_THAT(integrate_moebius(zero, worked_measure()), WithinAbs(0.0, 1e-15));
}

TEST_CASE("the Moebius route agrees with the Riemann route") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 300; ++trial) {
    SetFamily fam = testsupport::random_family(rng, 1 + trial % 4, 3 + trial % 6);
    MonotoneMeasure mu = testsupport::random_measure(rng, fam);
    TTable t = testsupport::random_ttable(rng, fam, trial % 4 == 0);
    const ExtValue riemann = integrate_riemann(survival_function(t, mu));
    REQUIRE_THAT(integrate_moebius(t, mu), WithinAbs(riemann.as_double(), 1e-9));
  }
}

TEST_CASE("allocation cut equality") {
  TTable t = worked_table();
  REQUIRE(allocation_cut_check(t, {0.0, 1.5, 3.0, 3.5, 4.0, 9.0}));

  // At alpha = 3 the eligible atoms are the nonempty subsets of {empty, {1}}.
  const auto min_t = [&](std::uint32_t s) { return t_h_atom(t, HyperMask(s)); };
  int count = 0;
  for (std::uint32_t s = 1; s <= 7; ++s)
    if (min_t(s) >= 3.0) ++count;
  REQUIRE(count == 3);

  // alpha = 0 admits every atom; beyond the top none survive.
  for (std::uint32_t s = 1; s <= 7; ++s) REQUIRE(min_t(s) >= 0.0);
  for (std::uint32_t s = 1; s <= 7; ++s) REQUIRE(min_t(s) < 4.5);

  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 100; ++trial) {
    SetFamily fam = testsupport::random_family(rng, 1 + trial % 4, 3 + trial % 6);
    TTable table = testsupport::random_ttable(rng, fam, trial % 3 == 0);
    REQUIRE(allocation_cut_check(table, testsupport::alpha_grid(table.values(), table.max_value() + 1)));
  }
}

TEST_CASE("enumeration caps") {
  Universe u(24);
  std::vector<SubsetMask> members{u.full()};
  for (int i = 0; i < 20; ++i) members.push_back(SubsetMask::of({i}));
  SetFamily big = make_family(u, members);  // p = 21
  std::vector<ExtValue> values(21, ExtValue::finite(1));
  values.back() = ExtValue::finite(2);
  MonotoneMeasure mu = make_set_function(big, std::move(values));
  REQUIRE(code_of([&] { moebius_transform(mu); }) == errc::family_too_large_for_enumeration);
}
