// Command-line front end: parses a problem document, runs the requested
// computation and prints a result document (JSON, or aligned text tables with
// --pretty). Exit codes: 0 ok, 1 golden failure, 2 schema error,
// 3 precondition error, 4 internal cross-check violation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "choquet/io.hpp"

namespace {

using choquet::io::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) choquet::fail(choquet::errc::invalid_argument, "cannot read spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(choquet::ExtValue v) { return v.is_infinite() ? "inf" : fmt(v.as_double()); }

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::cout << row[c];
      if (c + 1 < row.size()) std::cout << std::string(widths[c] - row[c].size() + 2, ' ');
    }
    std::cout << "\n";
  }
}

std::string hyper_label(const choquet::SetFamily& family, choquet::HyperMask h) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < family.size(); ++i)
    if (h.contains(i)) {
      if (!first) s += ",";
      s += family.member(i).to_string();
      first = false;
    }
  return s + "}";
}

struct CrossCheckViolation {
  std::string what;
};

void emit(const json& doc, bool pretty_handled) {
  if (!pretty_handled) std::cout << doc.dump(2) << "\n";
}

int cmd_integrate(const choquet::io::Problem& problem, double tolerance, bool pretty) {
  const choquet::TTable table = problem.table();
  const choquet::StepFunction step = choquet::survival_function(table, problem.mu);
  const choquet::IntegralReport report = choquet::integrate_all(table, problem.mu);

  for (double b : step.breakpoints())
    if (choquet::survival(table, problem.mu, b) != choquet::survival_via_hyper(table, problem.mu, b))
      throw CrossCheckViolation{"survival routes disagree at alpha = " + fmt(b)};
  if (report.max_deviation > tolerance)
    throw CrossCheckViolation{"integral routes deviate by " + fmt(report.max_deviation)};

  json doc;
  doc["command"] = "integrate";
  doc["input"] = choquet::io::problem_echo(problem);
  doc["survival"] = choquet::io::step_function_json(step);
  doc["integral"] = choquet::io::integral_report_json(report);
  if (report.value.is_infinite())
    doc["integral"]["note"] = "the survival function has a positive tail, so the integral is infinite";
  doc["status"] = "ok";

  if (pretty) {
    std::vector<std::vector<std::string>> rows{{"piece", "survival"}};
    for (std::size_t i = 0; i < step.breakpoints().size(); ++i) {
      const bool last = i + 1 == step.breakpoints().size();
      rows.push_back({"[" + fmt(step.breakpoints()[i]) + ", " + (last ? "inf" : fmt(step.breakpoints()[i + 1])) + ")",
                      fmt(step.values()[i])});
    }
    print_table(rows);
    std::cout << "\nintegral = " << fmt(report.value) << "  (max route deviation " << fmt(report.max_deviation)
              << ")\n";
  }
  emit(doc, pretty);
  return choquet::io::kExitOk;
}

int cmd_survival(const choquet::io::Problem& problem, const std::vector<double>& alphas, bool full_table,
                 bool pretty) {
  const choquet::TTable table = problem.table();
  json doc;
  doc["command"] = "survival";
  doc["input"] = choquet::io::problem_echo(problem);

  std::vector<std::vector<std::string>> rows{{"alpha", "survival"}};
  if (!alphas.empty()) {
    json values = json::array();
    for (double alpha : alphas) {
      const choquet::ExtValue direct = choquet::survival(table, problem.mu, alpha);
      const choquet::ExtValue hyper = choquet::survival_via_hyper(table, problem.mu, alpha);
      if (direct != hyper) throw CrossCheckViolation{"survival routes disagree at alpha = " + fmt(alpha)};
      json row;
      row["alpha"] = alpha;
      row["value"] = choquet::io::ext_json(direct);
      values.push_back(row);
      rows.push_back({fmt(alpha), fmt(direct)});
    }
    doc["values"] = values;
  }
  if (full_table || alphas.empty()) {
    const choquet::StepFunction step = choquet::survival_function(table, problem.mu);
    for (double b : step.breakpoints())
      if (choquet::survival(table, problem.mu, b) != choquet::survival_via_hyper(table, problem.mu, b))
        throw CrossCheckViolation{"survival routes disagree at alpha = " + fmt(b)};
    doc["table"] = choquet::io::step_function_json(step);
    for (std::size_t i = 0; i < step.breakpoints().size(); ++i) {
      const bool last = i + 1 == step.breakpoints().size();
      rows.push_back({"[" + fmt(step.breakpoints()[i]) + ", " + (last ? "inf" : fmt(step.breakpoints()[i + 1])) + ")",
                      fmt(step.values()[i])});
    }
  }
  doc["status"] = "ok";
  if (pretty) print_table(rows);
  emit(doc, pretty);
  return choquet::io::kExitOk;
}

int cmd_transform(const choquet::io::Problem& problem, const std::vector<std::string>& hyper_args, bool enumerate,
                  bool pretty) {
  const choquet::SetFamily& family = problem.family;
  json doc;
  doc["command"] = "transform";
  doc["input"] = choquet::io::problem_echo(problem);
  std::vector<std::vector<std::string>> rows{{"hypermask", "n_mu"}};

  if (!hyper_args.empty()) {
    json values = json::array();
    for (const std::string& arg : hyper_args) {
      json parsed;
      try {
        parsed = json::parse(arg);
      } catch (const nlohmann::json::exception& e) {
        choquet::fail(choquet::errc::invalid_argument, std::string("malformed --hyper argument: ") + e.what());
      }
      if (!parsed.is_array())
        choquet::fail(choquet::errc::invalid_argument, "--hyper expects an array of family subsets");
      std::uint32_t bits = 0;
      for (const auto& subset : parsed) {
        const choquet::SubsetMask mask = choquet::io::detail::parse_mask(subset, problem.universe);
        auto idx = family.index_of(mask);
        if (!idx)
          choquet::fail(choquet::errc::invalid_argument,
                        "--hyper references " + mask.to_string() + ", which is not a family member");
        bits |= std::uint32_t{1} << *idx;
      }
      const choquet::HyperMask hyper(bits);
      const choquet::ExtValue value = choquet::n_mu(problem.mu, hyper);
      json row;
      row["hyper"] = choquet::io::hyper_json(family, hyper);
      row["value"] = choquet::io::ext_json(value);
      values.push_back(row);
      rows.push_back({hyper_label(family, hyper), fmt(value)});
    }
    doc["values"] = values;
  }

  if (enumerate || hyper_args.empty()) {
    if (family.size() > choquet::kMaxHyperEnumeration)
      choquet::fail(choquet::errc::family_too_large_for_enumeration,
                    "--enumerate is capped at p <= " + std::to_string(choquet::kMaxHyperEnumeration) +
                        ", family has " + std::to_string(family.size()));
    json table = json::array();
    for (choquet::HyperMask hyper : choquet::io::hypermask_enumeration(family)) {
      const choquet::ExtValue value = choquet::n_mu(problem.mu, hyper);
      json row;
      row["hyper"] = choquet::io::hyper_json(family, hyper);
      row["value"] = choquet::io::ext_json(value);
      table.push_back(row);
      rows.push_back({hyper_label(family, hyper), fmt(value)});
    }
    doc["enumeration"] = table;
  }
  doc["status"] = "ok";
  if (pretty) print_table(rows);
  emit(doc, pretty);
  return choquet::io::kExitOk;
}

int cmd_moebius(const choquet::io::Problem& problem, double tolerance, bool pretty) {
  const choquet::SetFamily& family = problem.family;
  const choquet::MoebiusTable table = choquet::moebius_transform(problem.mu);

  // Round-trip guard: the zeta transform must reproduce n_mu.
  const std::uint32_t full = family.full_hyper().bits();
  if (family.size() <= choquet::kMaxHyperEnumeration) {
    for (std::uint32_t h = 0; h <= full; ++h)
      if (std::fabs(choquet::zeta(table, choquet::HyperMask(h)) -
                    choquet::n_mu(problem.mu, choquet::HyperMask(h)).as_double()) > tolerance)
        throw CrossCheckViolation{"zeta round-trip violated at hypermask " + std::to_string(h)};
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int k = 0; k < 1000; ++k) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      const std::uint32_t h = static_cast<std::uint32_t>(state >> 33) & full;
      if (std::fabs(choquet::zeta(table, choquet::HyperMask(h)) -
                    choquet::n_mu(problem.mu, choquet::HyperMask(h)).as_double()) > tolerance)
        throw CrossCheckViolation{"zeta round-trip violated at hypermask " + std::to_string(h)};
    }
  }

  json doc;
  doc["command"] = "moebius";
  doc["input"] = choquet::io::problem_echo(problem);
  doc["roundtrip"] = "ok";

  std::vector<std::vector<std::string>> rows{{"hypermask", "n_mu", "moebius"}};
  const bool full_listing = family.size() <= 12;
  json listing = json::array();
  for (choquet::HyperMask hyper : choquet::io::hypermask_enumeration(family)) {
    const double m = table.at(hyper);
    if (!full_listing && m == 0.0) continue;
    json row;
    row["hyper"] = choquet::io::hyper_json(family, hyper);
    row["n_mu"] = choquet::io::ext_json(choquet::n_mu(problem.mu, hyper));
    row["moebius"] = m;
    listing.push_back(row);
    rows.push_back({hyper_label(family, hyper), fmt(choquet::n_mu(problem.mu, hyper)), fmt(m)});
  }
  doc["table"] = listing;
  if (!full_listing) doc["table_note"] = "only nonzero entries are listed for families with more than 12 members";

  if (problem.has_table()) {
    const choquet::TTable t = problem.table();
    const double via_moebius = choquet::integrate_moebius(t, problem.mu);
    const choquet::ExtValue riemann = choquet::integrate_riemann(choquet::survival_function(t, problem.mu));
    if (riemann.is_infinite() || std::fabs(via_moebius - riemann.as_double()) > tolerance)
      throw CrossCheckViolation{"Moebius-route integral deviates from the Riemann route"};
    doc["integral"] = via_moebius;
  }
  doc["status"] = "ok";
  if (pretty) print_table(rows);
  emit(doc, pretty);
  return choquet::io::kExitOk;
}

json outcome_json(const choquet::CheckOutcome& outcome) {
  json doc;
  doc["holds"] = outcome.holds;
  if (!outcome.holds) doc["witness"] = outcome.witness;
  return doc;
}

int cmd_audit(const choquet::io::Problem& problem, double tolerance, bool pretty) {
  const choquet::SetFamily& family = problem.family;
  const choquet::MonotoneMeasure& mu = problem.mu;
  const int p = family.size();

  json doc;
  doc["command"] = "audit";
  doc["input"] = choquet::io::problem_echo(problem);

  json mu_report;
  mu_report["minitive"] = outcome_json(choquet::is_minitive(mu));
  mu_report["maxitive"] = outcome_json(choquet::is_maxitive(mu));
  mu_report["additive"] = outcome_json(choquet::is_additive(mu));
  mu_report["superadditive"] = outcome_json(choquet::is_superadditive(mu));
  mu_report["supermodular"] = outcome_json(choquet::is_supermodular(mu));
  mu_report["submodular"] = outcome_json(choquet::is_submodular(mu));
  doc["mu"] = mu_report;

  json hyper_report;
  if (p <= choquet::kMaxAdditivitySweep && !mu.total().is_infinite()) {
    const auto table = choquet::n_mu_table(mu);
    const std::uint32_t full = family.full_hyper().bits();
    bool minitive = true, maxitive = true, superadd = true, supermod = true, submod = true;
    for (std::uint32_t a = 0; a <= full; ++a)
      for (std::uint32_t b = a; b <= full; ++b) {
        const double na = table[a].as_double(), nb = table[b].as_double();
        const double nu = table[a | b].as_double(), ni = table[a & b].as_double();
        if (std::fabs(ni - std::min(na, nb)) > tolerance) minitive = false;
        if (std::fabs(nu - std::max(na, nb)) > tolerance) maxitive = false;
        if ((a & b) == 0 && nu < na + nb - tolerance) superadd = false;
        if (nu + ni < na + nb - tolerance) supermod = false;
        if (nu + ni > na + nb + tolerance) submod = false;
      }
    hyper_report["minitive"] = minitive;
    hyper_report["maxitive"] = maxitive;
    hyper_report["superadditive"] = superadd;
    hyper_report["supermodular"] = supermod;
    hyper_report["submodular"] = submod;

    const choquet::AdditivityVerdict verdict = choquet::additivity_verdict(mu);
    json additivity;
    additivity["constant_pattern"] = verdict.constant_pattern;
    additivity["additive"] = verdict.hyper_additive;
    additivity["characterization_agrees"] = verdict.agree();
    if (!verdict.hyper_additive) additivity["witness"] = verdict.witness;
    hyper_report["additivity"] = additivity;
  } else {
    hyper_report["status"] =
        "skipped (exhaustive sweep needs p <= " + std::to_string(choquet::kMaxAdditivitySweep) +
        " and finite measure values)";
  }
  doc["n_mu"] = hyper_report;

  if (family.contains_empty() && p <= choquet::kMaxHyperEnumeration && !mu.total().is_infinite()) {
    doc["zero_sets"] = choquet::zero_set_check(mu) ? "ok" : "violated";
    json range = json::array();
    for (double v : choquet::range_of(mu)) range.push_back(v);
    doc["range"] = range;
    doc["range_identity"] = "ok";  // part of zero_set_check
  } else {
    doc["zero_sets"] = "skipped (needs the empty set, p <= 16 and finite values)";
  }

  if (choquet::is_closed_under_complements(family) && !mu.total().is_infinite() &&
      p <= choquet::kMaxAdditivitySweep) {
    bool dual_ok = true;
    const std::uint32_t full = family.full_hyper().bits();
    const double total = mu.total().finite_value();
    for (std::uint32_t h = 0; h <= full; ++h) {
      const double lhs = choquet::n_mu(mu, choquet::HyperMask(h)).as_double();
      const double rhs = total - choquet::pi_mu_dual(mu, choquet::HyperMask(full & ~h)).as_double();
      if (std::fabs(lhs - rhs) > tolerance) dual_ok = false;
    }
    doc["duality"] = dual_ok ? "ok" : "violated";
  } else {
    doc["duality"] = "skipped (needs a complement-closed family, finite values and p <= 10)";
  }

  doc["status"] = "ok";
  if (pretty) {
    std::vector<std::vector<std::string>> rows{{"check", "result"}};
    for (const auto& [key, value] : doc["mu"].items())
      rows.push_back({"mu " + key, value["holds"].get<bool>() ? "yes" : "no"});
    for (const auto& [key, value] : doc["n_mu"].items()) {
      if (value.is_boolean()) rows.push_back({"n_mu " + key, value.get<bool>() ? "yes" : "no"});
      if (key == "additivity")
        rows.push_back({"n_mu additive", value["additive"].get<bool>()
                                             ? "yes"
                                             : "no (witness " + value["witness"].get<std::string>() + ")"});
    }
    rows.push_back({"zero sets", doc["zero_sets"].is_string() ? doc["zero_sets"].get<std::string>() : "?"});
    rows.push_back({"duality", doc["duality"].get<std::string>()});
    print_table(rows);
  }
  emit(doc, pretty);
  return choquet::io::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite conditional-aggregation Choquet integrals on subset-family hyperspaces"};
  app.require_subcommand(1);

  std::string spec_path;
  std::vector<double> alphas;
  std::vector<std::string> hyper_args;
  bool table_flag = false, enumerate_flag = false, pretty = false;
  double tolerance = 1e-9;
  std::string tamper;

  auto add_common = [&](CLI::App* cmd, bool needs_spec) {
    if (needs_spec) cmd->add_option("spec", spec_path, "problem document (JSON)")->required();
    cmd->add_flag("--pretty", pretty, "render aligned text tables");
    cmd->add_option("--tolerance", tolerance, "cross-check tolerance (default 1e-9)");
  };

  CLI::App* integrate = app.add_subcommand("integrate", "survival function and all integral routes");
  add_common(integrate, true);
  CLI::App* survival = app.add_subcommand("survival", "generalized survival function values");
  add_common(survival, true);
  survival->add_option("--alpha", alphas, "evaluate at these levels");
  survival->add_flag("--table", table_flag, "emit the full breakpoint table");
  CLI::App* transform = app.add_subcommand("transform", "hyperspace measure values");
  add_common(transform, true);
  // allow_extra_args(false) keeps CLI11 from expanding the JSON brackets.
  transform->add_option("--hyper", hyper_args, "hypermask as a JSON array of family subsets")
      ->allow_extra_args(false);
  transform->add_flag("--enumerate", enumerate_flag, "list all nonempty hypermasks (p <= 16)");
  CLI::App* moebius = app.add_subcommand("moebius", "Moebius transform table and integral");
  add_common(moebius, true);
  CLI::App* audit = app.add_subcommand("audit", "structural report on mu and its transform");
  add_common(audit, true);
  CLI::App* examples = app.add_subcommand("examples", "run the embedded worked-example corpus");
  examples->add_option("--tamper", tamper, "perturb one named golden (self-test of the failure path)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (examples->parsed()) {
      const bool ok = choquet::io::run_paper_examples(std::cout, tamper);
      return ok ? choquet::io::kExitOk : choquet::io::kExitGoldenFailure;
    }
    const choquet::io::Problem problem = choquet::io::parse_problem_text(read_file(spec_path));
    for (const std::string& w : problem.warnings) std::cerr << "warning: " << w << "\n";
    if (integrate->parsed()) return cmd_integrate(problem, tolerance, pretty);
    if (survival->parsed()) return cmd_survival(problem, alphas, table_flag, pretty);
    if (transform->parsed()) return cmd_transform(problem, hyper_args, enumerate_flag, pretty);
    if (moebius->parsed()) return cmd_moebius(problem, tolerance, pretty);
    if (audit->parsed()) return cmd_audit(problem, tolerance, pretty);
  } catch (const CrossCheckViolation& v) {
    std::cerr << "internal cross-check violation: " << v.what << "\n";
    return choquet::io::kExitCrossCheck;
  } catch (const choquet::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return choquet::io::exit_class(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return choquet::io::kExitSchema;
  }
  return choquet::io::kExitOk;
}
