#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "choquet/measures.hpp"
#include "support/generators.hpp"

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

TEST_CASE("validate_monotone accepts the worked measure") {
  MonotoneMeasure mu = worked_measure();
  REQUIRE(mu.at(SubsetMask::of({0})) == ExtValue::finite(0.2));
  REQUIRE(mu.total() == ExtValue::finite(1.0));
}

TEST_CASE("validate_monotone names violations") {
  SetFamily fam = worked_family();
  REQUIRE(code_of([&] {
            validate_monotone(fam, {ExtValue::finite(0), ExtValue::finite(2), ExtValue::finite(1)});
          }) == errc::not_monotone);
  REQUIRE(code_of([&] {
            validate_monotone(fam, {ExtValue::finite(0.1), ExtValue::finite(0.2), ExtValue::finite(1)});
          }) == errc::empty_not_zero);
  REQUIRE(code_of([&] {
            validate_monotone(fam, {ExtValue::finite(0), ExtValue::finite(0), ExtValue::finite(0)});
          }) == errc::total_mass_zero);
}

TEST_CASE("counting measure") {
  SetFamily p3 = powerset_family(Universe(3));
  MonotoneMeasure counting = counting_measure(p3);
  REQUIRE(counting.at(SubsetMask::of({0, 2})) == ExtValue::finite(2));
  REQUIRE(counting.at(SubsetMask::of({})) == ExtValue());
  REQUIRE(counting.at(SubsetMask::of({0, 1, 2})) == ExtValue::finite(3));
}

TEST_CASE("weakest and strongest capacities") {
  SetFamily p3 = powerset_family(Universe(3));
  MonotoneMeasure weakest = weakest_capacity(p3);
  MonotoneMeasure strongest = strongest_capacity(p3);
  REQUIRE(weakest.at(SubsetMask::of({0, 1})) == ExtValue());
  REQUIRE(weakest.at(p3.universe().full()) == ExtValue::finite(1));
  REQUIRE(weakest.at(SubsetMask::of({})) == ExtValue());
  REQUIRE(strongest.at(SubsetMask::of({0})) == ExtValue::finite(1));

  Universe u(2);
  SetFamily no_empty = make_family(u, {SubsetMask::of({0}), u.full()});
  REQUIRE(code_of([&] { weakest_capacity(no_empty); }) == errc::missing_empty_set);
}

TEST_CASE("possibility and necessity from the footnote distribution") {
  Universe u(4);
  SetFamily p4 = powerset_family(u);
  Distribution pi = {ExtValue::finite(0.7), ExtValue::finite(0.4), ExtValue::finite(1), ExtValue::finite(0.4)};
  MonotoneMeasure possibility = possibility_from(pi, p4);
  MonotoneMeasure necessity = necessity_from(pi, p4);
  REQUIRE_THAT(possibility.at(SubsetMask::of({1, 3})).as_double(), WithinAbs(0.4, 1e-15));
  REQUIRE(possibility.at(SubsetMask::of({})) == ExtValue());
  REQUIRE(possibility.at(u.full()) == ExtValue::finite(1));
  // N({1,2,4}) = 1 - Pi({3}) = 0.
  REQUIRE_THAT(necessity.at(SubsetMask::of({0, 1, 3})).as_double(), WithinAbs(0.0, 1e-15));

  SetFamily partial = make_family(u, {SubsetMask::of({}), u.full()});
  REQUIRE(code_of([&] { possibility_from(pi, partial); }) == errc::shape_mismatch);
}

TEST_CASE("minitive and maxitive generation") {
  Universe u(3);
  Distribution pi_prime = {ExtValue::finite(1), ExtValue::finite(2), ExtValue::finite(3)};
  MonotoneMeasure minitive = minitive_from_distribution(u, pi_prime);
  REQUIRE(minitive.at(u.full()) == ExtValue::finite(3));       // inf over empty = max pi'
  REQUIRE(minitive.at(SubsetMask::of({1, 2})) == ExtValue::finite(1));
  MonotoneMeasure maxitive = maxitive_from_distribution(u, pi_prime);
  REQUIRE(maxitive.at(SubsetMask::of({})) == ExtValue());
}

TEST_CASE("generated minitive measures satisfy the distribution identities") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n) {
    Universe u(n);
    for (int k = 0; k < 40; ++k) {
      Distribution pi_prime;
      for (int i = 0; i < n; ++i) pi_prime.push_back(ExtValue::finite(testsupport::dyadic(rng)));
      pi_prime[static_cast<std::size_t>(k % n)] = ExtValue::finite(testsupport::dyadic(rng) + 0.125);
      if (n > 1 && k % 3 == 0) pi_prime[static_cast<std::size_t>((k + 1) % n)] = ExtValue();
      MonotoneMeasure m = minitive_from_distribution(u, pi_prime);
      REQUIRE(is_minitive(m).holds);
      // Superadditivity needs the measure convention m(empty) = 0, i.e. a
      // vanishing distribution value somewhere.
      if (m.at(SubsetMask::of({})) == ExtValue()) REQUIRE(is_superadditive(m).holds);
      ExtValue top;
      for (ExtValue v : pi_prime) top = max(top, v);
      REQUIRE(m.at(u.full()) == top);
      for (int x = 0; x < n; ++x) {
        SubsetMask without(u.full().bits() & ~(std::uint32_t{1} << x));
        REQUIRE(m.at(without) == pi_prime[static_cast<std::size_t>(x)]);
      }
      // Zero in the distribution kills every set missing that element.
      for (int x = 0; x < n; ++x)
        if (pi_prime[static_cast<std::size_t>(x)] == ExtValue())
          for (std::uint32_t e = 0; e <= u.full().bits(); ++e)
            if (!(e >> x & 1u)) REQUIRE(m.at(SubsetMask(e)) == ExtValue());
    }
  }
}

TEST_CASE("generated maxitive measures are maxitive") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 40; ++k) {
    Universe u(1 + k % 4);
    Distribution pi;
    for (int i = 0; i < u.size(); ++i) pi.push_back(ExtValue::finite(testsupport::dyadic(rng)));
    pi[0] = ExtValue::finite(0.25 + testsupport::dyadic(rng));
    REQUIRE(is_maxitive(maxitive_from_distribution(u, pi)).holds);
  }
}

TEST_CASE("necessity is the dual of possibility, exhaustively") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 4; ++n) {
    Universe u(n);
    SetFamily powerset = powerset_family(u);
    for (int k = 0; k < 10; ++k) {
      Distribution pi;
      for (int i = 0; i < n; ++i) pi.push_back(ExtValue::finite(testsupport::dyadic(rng)));
      pi[static_cast<std::size_t>(k % n)] = ExtValue::finite(1.0);
      MonotoneMeasure possibility = possibility_from(pi, powerset);
      MonotoneMeasure necessity = necessity_from(pi, powerset);
      for (std::uint32_t e = 0; e <= u.full().bits(); ++e) {
        SubsetMask s(e);
        const double expected =
            possibility.at(u.full()).as_double() - possibility.at(u.complement(s)).as_double();
        REQUIRE_THAT(necessity.at(s).as_double(), WithinAbs(expected, 1e-12));
      }
      REQUIRE(dual_measure(possibility) == necessity);
    }
  }
}

TEST_CASE("structural predicates with witnesses") {
  SetFamily p3 = powerset_family(Universe(3));
  REQUIRE(is_additive(counting_measure(p3)).holds);
  REQUIRE(is_supermodular(counting_measure(p3)).holds);
  REQUIRE(is_submodular(counting_measure(p3)).holds);

  SetFamily p2 = powerset_family(Universe(2));
  CheckOutcome broken = is_additive(strongest_capacity(p2));
  REQUIRE_FALSE(broken.holds);
  REQUIRE_FALSE(broken.witness.empty());

  Universe u4(4);
  Distribution pi = {ExtValue::finite(0.7), ExtValue::finite(0.4), ExtValue::finite(1), ExtValue::finite(0.4)};
  REQUIRE(is_maxitive(possibility_from(pi, powerset_family(u4))).holds);
  REQUIRE(is_minitive(necessity_from(pi, powerset_family(u4))).holds);
  REQUIRE_FALSE(is_minitive(counting_measure(p3)).holds);
}

TEST_CASE("dual measure facts") {
  SetFamily p3 = powerset_family(Universe(3));
  REQUIRE(dual_measure(counting_measure(p3)) == counting_measure(p3));
  REQUIRE(dual_measure(weakest_capacity(p3)) == strongest_capacity(p3));
  REQUIRE(dual_measure(strongest_capacity(p3)) == weakest_capacity(p3));

  Universe u(3);
  SetFamily not_closed = make_family(u, {SubsetMask::of({}), SubsetMask::of({0}), u.full()});
  try {
    dual_measure(counting_measure(not_closed));
    FAIL("expected an error");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::not_complement_closed);
  }
}

TEST_CASE("dual measure is an involution and order-reversing") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    SetFamily powerset = powerset_family(Universe(1 + k % 4));
    MonotoneMeasure nu = testsupport::random_capacity(rng, powerset);
    REQUIRE(dual_measure(dual_measure(nu)) == nu);

    // mu = pointwise min of two capacities: mu <= nu with equal totals.
    MonotoneMeasure other = testsupport::random_capacity(rng, powerset);
    std::vector<ExtValue> mins;
    for (int i = 0; i < powerset.size(); ++i) mins.push_back(min(nu.at_index(i), other.at_index(i)));
    MonotoneMeasure mu = validate_monotone(powerset, std::move(mins));
    MonotoneMeasure nu_dual = dual_measure(nu);
    MonotoneMeasure mu_dual = dual_measure(mu);
    for (int i = 0; i < powerset.size(); ++i) REQUIRE(nu_dual.at_index(i) <= mu_dual.at_index(i));
  }
}

TEST_CASE("range enumeration") {
  SetFamily p3 = powerset_family(Universe(3));
  REQUIRE(range_of(counting_measure(p3)) == std::vector<double>{0, 1, 2, 3});
  REQUIRE(range_of(worked_measure()) == std::vector<double>{0, 0.2, 1});
  REQUIRE(range_of(strongest_capacity(p3)) == std::vector<double>{0, 1});
}

TEST_CASE("infinite values order below nothing") {
  REQUIRE(ExtValue::infinite() > ExtValue::finite(1e300));
  REQUIRE(min(ExtValue::infinite(), ExtValue::finite(2)) == ExtValue::finite(2));
  REQUIRE((ExtValue::finite(1) + ExtValue::infinite()).is_infinite());
  REQUIRE_THROWS_AS(ExtValue::finite(-0.5), error);
  REQUIRE_THROWS_AS(ExtValue::infinite().finite_value(), error);

  // A measure may carry infinite mass; the dual then refuses.
  Universe u(2);
  SetFamily fam = make_family(u, {SubsetMask::of({}), SubsetMask::of({0}), SubsetMask::of({1}), u.full()});
  MonotoneMeasure mu = validate_monotone(
      fam, {ExtValue(), ExtValue::finite(1), ExtValue::finite(2), ExtValue::infinite()});
  try {
    dual_measure(mu);
    FAIL("expected an error");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::infinite_total_mass);
  }
}
