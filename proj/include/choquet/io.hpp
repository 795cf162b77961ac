#pragma once

#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "choquet/choquet.hpp"

namespace choquet::io {

using json = nlohmann::ordered_json;

/// Exit classes for the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitGoldenFailure = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitCrossCheck = 4;

/// Structural input problems map to the schema exit; violated mathematical
/// preconditions map to the precondition exit.
inline int exit_class(errc code) {
  switch (code) {
    case errc::element_out_of_range:
    case errc::missing_universe_set:
    case errc::family_too_large:
    case errc::family_mismatch:
    case errc::negative_value:
    case errc::not_finite:
    case errc::invalid_argument:
      return kExitSchema;
    default:
      return kExitPrecondition;
  }
}

/// A parsed problem document: the family in canonical order, the measure, and
/// the optional transformed input (either FCA + f or a raw T table).
struct Problem {
  Universe universe;
  SetFamily family;
  MonotoneMeasure mu;
  std::optional<FCASpec> fca;
  std::optional<FnVector> f;
  std::optional<TTable> raw_t;
  std::string fca_label;  // for echoing
  std::vector<std::string> warnings;

  bool has_table() const { return raw_t.has_value() || (fca.has_value() && f.has_value()); }
  TTable table() const {
    if (raw_t) return *raw_t;
    if (fca && f) return build_T(*fca, *f);
    fail(errc::invalid_argument, "this command needs either \"fca\" with \"f\" or a raw T table");
  }
};

namespace detail {

inline SubsetMask parse_mask(const json& arr, const Universe& universe) {
  if (!arr.is_array()) fail(errc::invalid_argument, "a subset must be an array of 1-based elements");
  std::uint32_t bits = 0;
  for (const auto& e : arr) {
    if (!e.is_number_integer()) fail(errc::invalid_argument, "subset elements must be integers");
    const int v = e.get<int>();
    if (v < 1 || v > universe.size())
      fail(errc::element_out_of_range,
           "element " + std::to_string(v) + " outside [1, " + std::to_string(universe.size()) + "]");
    bits |= std::uint32_t{1} << (v - 1);
  }
  return SubsetMask(bits);
}

inline ExtValue parse_ext(const json& v, const char* what) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return ExtValue::infinite();
    fail(errc::invalid_argument, std::string(what) + " must be a number or \"inf\"");
  }
  if (!v.is_number()) fail(errc::invalid_argument, std::string(what) + " must be a number or \"inf\"");
  return ExtValue::finite(v.get<double>());
}

inline Distribution parse_distribution(const json& arr, const Universe& universe, const char* what) {
  if (!arr.is_array()) fail(errc::invalid_argument, std::string(what) + " must be an array");
  Distribution d;
  for (const auto& v : arr) d.push_back(parse_ext(v, what));
  check_distribution(universe, d);
  return d;
}

/// Reorders file-aligned values to canonical family indices.
template <typename T>
std::vector<T> reorder(const std::vector<T>& file_values, const std::vector<int>& file_to_canonical, int p) {
  std::vector<T> out(static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < file_values.size(); ++i)
    out[static_cast<std::size_t>(file_to_canonical[i])] = file_values[i];
  return out;
}

inline MonotoneMeasure parse_measure(const json& spec, const SetFamily& family,
                                     const std::vector<int>& file_to_canonical, bool file_order_unique,
                                     std::vector<std::string>& warnings) {
  if (spec.is_array()) {
    if (!file_order_unique)
      fail(errc::invalid_argument, "a measure value array needs a duplicate-free family listing to align with");
    if (spec.size() != file_to_canonical.size())
      fail(errc::invalid_argument, "measure array length does not match the family listing");
    std::vector<ExtValue> file_values;
    for (const auto& v : spec) file_values.push_back(parse_ext(v, "measure value"));
    return validate_monotone(family, reorder(file_values, file_to_canonical, family.size()));
  }
  if (!spec.is_object() || !spec.contains("name"))
    fail(errc::invalid_argument, "\"mu\" must be a value array or a named constructor object");
  const std::string name = spec.at("name").get<std::string>();
  if (name == "counting") return counting_measure(family);
  if (name == "weakest") return weakest_capacity(family);
  if (name == "strongest") return strongest_capacity(family);
  const Universe& uni = family.universe();
  if (name == "possibility" || name == "necessity") {
    Distribution pi = parse_distribution(spec.at("pi"), uni, "pi");
    ExtValue top;
    for (ExtValue v : pi) top = max(top, v);
    if (top != ExtValue::finite(1.0))
      warnings.push_back("max pi is " + top.to_string() + ", not 1; the result is not a capacity");
    return name == "possibility" ? possibility_from(pi, family) : necessity_from(pi, family);
  }
  if (name == "minitive") {
    Distribution d = parse_distribution(spec.at("pi_prime"), uni, "pi_prime");
    MonotoneMeasure m = minitive_from_distribution(uni, d);
    if (!(m.family() == family)) fail(errc::shape_mismatch, "minitive measures live on the full powerset family");
    return m;
  }
  if (name == "maxitive") {
    Distribution d = parse_distribution(spec.at("pi"), uni, "pi");
    MonotoneMeasure m = maxitive_from_distribution(uni, d);
    if (!(m.family() == family)) fail(errc::shape_mismatch, "maxitive measures live on the full powerset family");
    return m;
  }
  fail(errc::invalid_argument, "unknown measure constructor \"" + name + "\"");
}

inline AggKind parse_agg_kind(const std::string& name) {
  if (name == "sup") return AggKind::sup;
  if (name == "inf") return AggKind::inf;
  if (name == "sum") return AggKind::sum;
  if (name == "choquet") return AggKind::choquet;
  if (name == "sugeno") return AggKind::sugeno;
  if (name == "shilkret") return AggKind::shilkret;
  fail(errc::invalid_argument, "unknown aggregation kind \"" + name + "\"");
}

inline MonotoneMeasure parse_inner_measure(const json& spec, const Universe& universe,
                                           std::vector<std::string>& warnings) {
  SetFamily powerset = powerset_family(universe);
  if (spec.is_object() && spec.contains("values")) {
    const auto& arr = spec.at("values");
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(powerset.size()))
      fail(errc::invalid_argument,
           "inner measure \"values\" must list all " + std::to_string(powerset.size()) +
               " powerset values in canonical order");
    std::vector<ExtValue> values;
    for (const auto& v : arr) values.push_back(parse_ext(v, "inner measure value"));
    return validate_monotone(powerset, std::move(values));
  }
  std::vector<int> identity(static_cast<std::size_t>(powerset.size()));
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  return parse_measure(spec, powerset, identity, true, warnings);
}

inline CondOp parse_cond_op(const json& spec, const Universe& universe, std::vector<std::string>& warnings) {
  if (!spec.is_object() || !spec.contains("kind"))
    fail(errc::invalid_argument, "an operator spec needs a \"kind\"");
  CondOp op;
  op.kind = parse_agg_kind(spec.at("kind").get<std::string>());
  if (needs_inner(op.kind)) {
    if (!spec.contains("inner"))
      fail(errc::invalid_argument, std::string(agg_kind_name(op.kind)) + " operators need an \"inner\" measure");
    op.inner = parse_inner_measure(spec.at("inner"), universe, warnings);
  }
  return op;
}

}  // namespace detail

inline Problem parse_problem(const json& doc) {
  if (!doc.is_object()) fail(errc::invalid_argument, "the problem document must be a JSON object");
  if (!doc.contains("n") || !doc.at("n").is_number_integer())
    fail(errc::invalid_argument, "\"n\" (universe size) is required");
  Universe universe(doc.at("n").get<int>());

  if (!doc.contains("family")) fail(errc::invalid_argument, "\"family\" is required");
  std::vector<SubsetMask> file_masks;
  SetFamily family = [&] {
    const auto& fam_spec = doc.at("family");
    if (fam_spec.is_string() && fam_spec.get<std::string>() == "powerset") {
      SetFamily f = powerset_family(universe);
      file_masks = f.members();
      return f;
    }
    if (!fam_spec.is_array()) fail(errc::invalid_argument, "\"family\" must be \"powerset\" or an array of subsets");
    for (const auto& m : fam_spec) file_masks.push_back(detail::parse_mask(m, universe));
    return make_family(universe, file_masks);
  }();

  bool file_order_unique = true;
  std::vector<int> file_to_canonical;
  {
    std::vector<bool> seen(static_cast<std::size_t>(family.size()), false);
    for (SubsetMask m : file_masks) {
      const int idx = *family.index_of(m);
      if (seen[static_cast<std::size_t>(idx)]) file_order_unique = false;
      seen[static_cast<std::size_t>(idx)] = true;
      file_to_canonical.push_back(idx);
    }
    if (file_masks.size() != static_cast<std::size_t>(family.size())) file_order_unique = false;
  }

  std::vector<std::string> warnings;
  if (!doc.contains("mu")) fail(errc::invalid_argument, "\"mu\" is required");
  MonotoneMeasure mu = detail::parse_measure(doc.at("mu"), family, file_to_canonical, file_order_unique, warnings);

  std::optional<FCASpec> fca;
  std::optional<TTable> raw_t;
  std::string fca_label;
  if (doc.contains("fca")) {
    const auto& spec = doc.at("fca");
    if (spec.is_object() && spec.contains("raw_t")) {
      if (!file_order_unique)
        fail(errc::invalid_argument, "a raw T array needs a duplicate-free family listing to align with");
      const auto& arr = spec.at("raw_t");
      if (!arr.is_array() || arr.size() != file_to_canonical.size())
        fail(errc::invalid_argument, "raw T array length does not match the family listing");
      std::vector<double> file_values;
      for (const auto& v : arr) {
        if (!v.is_number()) fail(errc::invalid_argument, "raw T values must be numbers");
        file_values.push_back(v.get<double>());
      }
      raw_t = TTable::from_values(family, detail::reorder(file_values, file_to_canonical, family.size()));
      fca_label = "raw";
    } else if (spec.is_object() && spec.contains("kind") && spec.at("kind") == "mixed") {
      if (!spec.contains("kinds") || !spec.at("kinds").is_array() ||
          spec.at("kinds").size() != file_to_canonical.size())
        fail(errc::invalid_argument, "a mixed FCA needs one operator per listed family member");
      if (!file_order_unique)
        fail(errc::invalid_argument, "a mixed FCA needs a duplicate-free family listing to align with");
      std::vector<CondOp> file_ops;
      for (const auto& op : spec.at("kinds")) file_ops.push_back(detail::parse_cond_op(op, universe, warnings));
      fca = FCASpec::mixed(family, detail::reorder(file_ops, file_to_canonical, family.size()));
      fca_label = "mixed";
    } else {
      CondOp op = detail::parse_cond_op(spec, universe, warnings);
      fca = op.inner ? FCASpec::with_inner(family, op.kind, *op.inner) : FCASpec::uniform(family, op.kind);
      fca_label = agg_kind_name(op.kind);
    }
  }

  std::optional<FnVector> f;
  if (doc.contains("f")) {
    const auto& arr = doc.at("f");
    if (!arr.is_array()) fail(errc::invalid_argument, "\"f\" must be an array of numbers");
    FnVector vec;
    for (const auto& v : arr) {
      if (!v.is_number()) fail(errc::invalid_argument, "\"f\" values must be numbers");
      vec.push_back(v.get<double>());
    }
    check_fn_vector(universe, vec);
    f = std::move(vec);
  }

  return Problem{universe, family,     mu, std::move(fca), std::move(f), std::move(raw_t),
                 fca_label, std::move(warnings)};
}

inline Problem parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::invalid_argument, std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

// ---------------------------------------------------------------------------
// Serialization helpers
// ---------------------------------------------------------------------------

inline json mask_json(SubsetMask m) { return json(m.elements_one_based()); }

inline json ext_json(ExtValue v) {
  if (v.is_infinite()) return json("inf");
  return json(v.as_double());
}

inline json hyper_json(const SetFamily& family, HyperMask h) {
  json arr = json::array();
  for (int i = 0; i < family.size(); ++i)
    if (h.contains(i)) arr.push_back(mask_json(family.member(i)));
  return arr;
}

/// Nonempty hypermasks ordered by (cardinality, mask value): the worked-example
/// table order.
inline std::vector<HyperMask> hypermask_enumeration(const SetFamily& family) {
  std::vector<std::uint32_t> bits;
  bits.reserve((std::size_t{1} << family.size()) - 1);
  for (std::uint32_t s = 1; s <= family.full_hyper().bits(); ++s) bits.push_back(s);
  std::stable_sort(bits.begin(), bits.end(), [](std::uint32_t a, std::uint32_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<HyperMask> out;
  out.reserve(bits.size());
  for (std::uint32_t s : bits) out.emplace_back(s);
  return out;
}

inline json problem_echo(const Problem& problem) {
  json echo;
  echo["n"] = problem.universe.size();
  json fam = json::array();
  for (SubsetMask m : problem.family.members()) fam.push_back(mask_json(m));
  echo["family"] = fam;
  json mu = json::array();
  for (ExtValue v : problem.mu.values()) mu.push_back(ext_json(v));
  echo["mu"] = mu;
  if (!problem.fca_label.empty()) echo["fca"] = problem.fca_label;
  if (problem.f) echo["f"] = *problem.f;
  if (problem.has_table()) echo["T"] = problem.table().values();
  if (!problem.warnings.empty()) echo["warnings"] = problem.warnings;
  return echo;
}

inline json step_function_json(const StepFunction& step) {
  json doc;
  doc["breakpoints"] = step.breakpoints();
  json values = json::array();
  for (ExtValue v : step.values()) values.push_back(ext_json(v));
  doc["values"] = values;
  json pieces = json::array();
  for (std::size_t i = 0; i < step.breakpoints().size(); ++i) {
    json piece = json::array();
    piece.push_back(step.breakpoints()[i]);
    piece.push_back(i + 1 < step.breakpoints().size() ? json(step.breakpoints()[i + 1]) : json("inf"));
    piece.push_back(ext_json(step.values()[i]));
    pieces.push_back(piece);
  }
  doc["pieces"] = pieces;
  return doc;
}

inline json integral_report_json(const IntegralReport& report) {
  json doc;
  doc["value"] = ext_json(report.value);
  doc["infinite"] = report.value.is_infinite();
  json routes;
  routes["riemann"] = ext_json(report.riemann);
  if (report.formula_i) routes["formula_i"] = *report.formula_i;
  if (report.formula_ii) routes["formula_ii"] = *report.formula_ii;
  if (report.formula_iii) routes["formula_iii"] = *report.formula_iii;
  if (report.moebius) routes["moebius"] = *report.moebius;
  doc["routes"] = routes;
  if (!report.skipped.empty()) {
    json skipped;
    for (const auto& [route, reason] : report.skipped) skipped[route] = reason;
    doc["skipped"] = skipped;
  }
  doc["max_deviation"] = report.max_deviation;
  return doc;
}

// ---------------------------------------------------------------------------
// The embedded worked-example corpus
// ---------------------------------------------------------------------------

namespace detail {

struct GoldenContext {
  std::ostream& out;
  std::string tamper_name;  // shifts this example's expectations, for the negative control
  bool all_ok = true;

  bool tampered(const std::string& name) const { return name == tamper_name; }

  void report(const std::string& name, bool ok, const std::string& diff) {
    all_ok = all_ok && ok;
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !diff.empty()) out << "  (" << diff << ")";
    out << "\n";
  }

  void expect_near(const std::string& name, const std::vector<std::pair<double, double>>& got_want, double tol) {
    const double shift = tampered(name) ? 1e-3 : 0.0;
    bool ok = true;
    std::ostringstream diff;
    for (const auto& [got, want] : got_want) {
      const double expect = want + shift;
      if (std::fabs(got - expect) > tol) {
        ok = false;
        diff << "got " << std::setprecision(12) << got << ", expected " << expect << "; ";
      }
    }
    report(name, ok, diff.str());
  }

  void expect_true(const std::string& name, bool got) {
    const bool expect = !tampered(name);
    report(name, got == expect, got ? "held, expected a failure" : "did not hold");
  }
};

}  // namespace detail

/// Reproduces every numeric worked example; prints one PASS/FAIL line each.
/// A nonempty tamper name perturbs that example's expectations, so the failure
/// path itself is testable.
inline bool run_paper_examples(std::ostream& out, const std::string& tamper_name = "") {
  detail::GoldenContext ctx{out, tamper_name};
  constexpr double kTol = 1e-12;

  Universe u3(3);
  const SetFamily powerset3 = powerset_family(u3);

  // Sum-FCA transform table and survival value on {empty,{1},{2},X}.
  {
    SetFamily fam = make_family(u3, {SubsetMask::of({}), SubsetMask::of({0}), SubsetMask::of({1}), u3.full()});
    FCASpec spec = FCASpec::uniform(fam, AggKind::sum);
    TTable t = build_T(spec, {2, 3, 4});
    ctx.expect_near("sum-fca-transform-table",
                    {{t.at_index(0), 9}, {t.at_index(1), 7}, {t.at_index(2), 6}, {t.at_index(3), 0}}, kTol);
    MonotoneMeasure counting = counting_measure(fam);
    ctx.expect_near("sum-fca-survival-7.5", {{survival(t, counting, 7.5).as_double(), 1}}, kTol);
  }

  // The three-member worked instance: T table, step function, all routes,
  // the N table and the Moebius table.
  {
    SetFamily fam = make_family(u3, {SubsetMask::of({}), SubsetMask::of({0}), u3.full()});
    MonotoneMeasure mu =
        validate_monotone(fam, {ExtValue::finite(0), ExtValue::finite(0.2), ExtValue::finite(1)});
    FCASpec spec = FCASpec::uniform(fam, AggKind::sum);
    TTable t = build_T(spec, {1, 2, 1});
    ctx.expect_near("worked-t-table", {{t.at_index(0), 4}, {t.at_index(1), 3}, {t.at_index(2), 0}}, kTol);

    StepFunction step = survival_function(t, mu);
    ctx.expect_near("worked-step-function",
                    {{step.breakpoints()[0], 0},
                     {step.breakpoints()[1], 3},
                     {step.breakpoints()[2], 4},
                     {step.values()[0].as_double(), 1},
                     {step.values()[1].as_double(), 0.2},
                     {step.values()[2].as_double(), 0}},
                    kTol);

    IntegralReport report = integrate_all(t, mu);
    ctx.expect_near("worked-integral-routes",
                    {{report.value.as_double(), 3.2},
                     {*report.formula_i, 3.2},
                     {*report.formula_ii, 3.2},
                     {*report.formula_iii, 3.2},
                     {*report.moebius, 3.2},
                     {report.max_deviation, 0}},
                    kTol);

    const std::vector<double> n_expected = {0.2, 0, 0, 1, 0.2, 0, 1};
    const std::vector<double> m_expected = {0.2, 0, 0, 0.8, 0, 0, 0};
    const std::vector<double> min_t_expected = {4, 3, 0, 3, 0, 0, 0};
    MoebiusTable moebius = moebius_transform(mu);
    auto order = hypermask_enumeration(fam);
    std::vector<std::pair<double, double>> n_rows, m_rows, t_rows;
    for (std::size_t i = 0; i < order.size(); ++i) {
      n_rows.push_back({n_mu(mu, order[i]).as_double(), n_expected[i]});
      m_rows.push_back({moebius.at(order[i]), m_expected[i]});
      t_rows.push_back({t_h_atom(t, order[i]), min_t_expected[i]});
    }
    ctx.expect_near("worked-n-mu-table", n_rows, kTol);
    ctx.expect_near("worked-moebius-table", m_rows, kTol);
    ctx.expect_near("worked-min-t-column", t_rows, kTol);
    ctx.expect_near("worked-moebius-integral", {{integrate_moebius(t, mu), 3.2}}, kTol);
  }

  // Closed forms of the transform for the counting, weakest and strongest
  // measures, on all 256 hypermasks of the 3-element powerset.
  {
    MonotoneMeasure counting = counting_measure(powerset3);
    MonotoneMeasure weakest = weakest_capacity(powerset3);
    MonotoneMeasure strongest = strongest_capacity(powerset3);
    bool counting_ok = true, weak_ok = true, strong_ok = true;
    for (std::uint32_t h = 0; h <= powerset3.full_hyper().bits(); ++h) {
      HyperMask hyper(h);
      counting_ok = counting_ok && n_mu(counting, hyper) == counting_oracle(powerset3, hyper);
      weak_ok = weak_ok && n_mu(weakest, hyper) == weakest_oracle(powerset3, hyper);
      strong_ok = strong_ok && n_mu(strongest, hyper) == strongest_oracle(powerset3, hyper);
    }
    ctx.expect_true("counting-closed-form-256", counting_ok);
    ctx.expect_true("weakest-strongest-closed-form-256", weak_ok && strong_ok);
    ctx.expect_near("weakest-strongest-values",
                    {{weakest.at(SubsetMask::of({0, 1})).as_double(), 0},
                     {weakest.at(u3.full()).as_double(), 1},
                     {strongest.at(SubsetMask::of({0})).as_double(), 1}},
                    kTol);
    ctx.expect_near("counting-range", {{range_of(counting)[0], 0},
                                       {range_of(counting)[1], 1},
                                       {range_of(counting)[2], 2},
                                       {range_of(counting)[3], 3}},
                    kTol);
  }

  // Possibility / necessity with the four-element distribution, including two
  // transform values pinned by the enumeration-of-values closed form.
  {
    Universe u4(4);
    SetFamily powerset4 = powerset_family(u4);
    Distribution pi = {ExtValue::finite(0.7), ExtValue::finite(0.4), ExtValue::finite(1), ExtValue::finite(0.4)};
    MonotoneMeasure possibility = possibility_from(pi, powerset4);
    MonotoneMeasure necessity = necessity_from(pi, powerset4);
    ctx.expect_near("possibility-values",
                    {{possibility.at(SubsetMask::of({1, 3})).as_double(), 0.4},
                     {possibility.at(u4.full()).as_double(), 1},
                     {necessity.at(SubsetMask::of({0, 1, 3})).as_double(), 0}},
                    kTol);
    ctx.expect_true("necessity-is-dual-of-possibility", dual_measure(possibility) == necessity);

    // {F : F subset {2,4}} forces the next transform value 0.7; the singleton
    // {empty} leaves every nonempty set outside, so the minimum is 0.4.
    std::uint32_t cut_bits = 0;
    for (int i = 0; i < powerset4.size(); ++i)
      if (powerset4.member(i).subset_of(SubsetMask::of({1, 3}))) cut_bits |= std::uint32_t{1} << i;
    ctx.expect_near("possibility-transform-cases",
                    {{n_mu(possibility, HyperMask(cut_bits)).as_double(), 0.7},
                     {n_mu(possibility, HyperMask(1u << powerset4.index_of_empty())).as_double(), 0.4},
                     {n_mu(possibility, powerset4.full_hyper()).as_double(), 1}},
                    kTol);
  }

  // Minitive / maxitive generation from a distribution.
  {
    Distribution pi_prime = {ExtValue::finite(1), ExtValue::finite(2), ExtValue::finite(3)};
    MonotoneMeasure minitive = minitive_from_distribution(u3, pi_prime);
    ctx.expect_near("minitive-distribution",
                    {{minitive.at(u3.full()).as_double(), 3}, {minitive.at(SubsetMask::of({1, 2})).as_double(), 1}},
                    kTol);
    MonotoneMeasure maxitive = maxitive_from_distribution(u3, pi_prime);
    ctx.expect_near("maxitive-empty-sup", {{maxitive.at(SubsetMask::of({})).as_double(), 0}}, kTol);
  }

  // Duals: counting is self-dual, the weakest and strongest are mutually dual.
  {
    MonotoneMeasure counting = counting_measure(powerset3);
    ctx.expect_true("counting-self-dual", dual_measure(counting) == counting);
    ctx.expect_true("weakest-dual-strongest",
                    dual_measure(weakest_capacity(powerset3)) == strongest_capacity(powerset3));
  }

  // Standard integrals: the 9 of the level-set sum and the constant identities.
  {
    MonotoneMeasure counting = counting_measure(powerset3);
    ctx.expect_near("choquet-std-level-sum", {{choquet_std({2, 3, 4}, counting), 9}}, kTol);
    MonotoneMeasure capacity = strongest_capacity(powerset3);
    ctx.expect_near("constant-function-integrals",
                    {{choquet_std({0.6, 0.6, 0.6}, capacity), 0.6},
                     {sugeno_std({0.6, 0.6, 0.6}, capacity), 0.6},
                     {shilkret_std({0.6, 0.6, 0.6}, capacity), 0.6}},
                    kTol);
  }

  // The cut inequality N({mu <= a}) >= N({mu < a}) >= a on the worked measure.
  {
    SetFamily fam = make_family(u3, {SubsetMask::of({}), SubsetMask::of({0}), u3.full()});
    MonotoneMeasure mu =
        validate_monotone(fam, {ExtValue::finite(0), ExtValue::finite(0.2), ExtValue::finite(1)});
    bool ok = true;
    for (double alpha : {0.0, 0.1, 0.2, 0.6, 1.0}) {
      const double below = n_mu(mu, strict_cut(mu, alpha)).as_double();
      const double at_most = n_mu(mu, weak_cut(mu, alpha)).as_double();
      ok = ok && at_most >= below && below >= alpha;
    }
    ctx.expect_true("cut-inequality", ok);
  }

  return ctx.all_ok;
}

}  // namespace choquet::io
