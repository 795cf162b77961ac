#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(CHOQUET_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path write_spec(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("choquet_cli_test_" + name + ".json");
  std::ofstream out(path);
  out << text;
  return path;
}

const std::string kWorkedSpec =
    R"({"n":3,"family":[[],[1],[1,2,3]],"mu":[0,0.2,1],"fca":{"kind":"sum"},"f":[1,2,1]})";

nlohmann::json parse_json(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("integrate reproduces the worked instance deterministically") {
  const auto spec = write_spec("worked", kWorkedSpec);
  RunResult first = run_cli("integrate " + spec.string());
  REQUIRE(first.exit_code == 0);
  RunResult second = run_cli("integrate " + spec.string());
  REQUIRE(second.output == first.output);

  auto doc = parse_json(first.output);
  REQUIRE(doc["integral"]["value"].get<double>() == 3.2);
  REQUIRE(doc["integral"]["routes"]["moebius"].get<double>() == 3.2);
  REQUIRE(doc["integral"]["max_deviation"].get<double>() == 0.0);
  REQUIRE(doc["survival"]["breakpoints"] == nlohmann::json::array({0.0, 3.0, 4.0}));
  REQUIRE(doc["survival"]["values"] == nlohmann::json::array({1.0, 0.2, 0.0}));
  REQUIRE(doc["input"]["T"] == nlohmann::json::array({4.0, 3.0, 0.0}));
}

TEST_CASE("survival values at requested levels") {
  const auto spec = write_spec("worked2", kWorkedSpec);
  RunResult result = run_cli("survival " + spec.string() + " --alpha 3.5 --alpha 100");
  REQUIRE(result.exit_code == 0);
  auto doc = parse_json(result.output);
  REQUIRE(doc["values"][0]["value"].get<double>() == 0.2);
  REQUIRE(doc["values"][1]["value"].get<double>() == 0.0);

  RunResult table = run_cli("survival " + spec.string() + " --table");
  REQUIRE(table.exit_code == 0);
  auto table_doc = parse_json(table.output);
  REQUIRE(table_doc["table"]["pieces"].size() == 3);
}

TEST_CASE("transform enumeration matches the worked table") {
  const auto spec = write_spec("worked3", kWorkedSpec);
  RunResult result = run_cli("transform " + spec.string() + " --enumerate");
  REQUIRE(result.exit_code == 0);
  auto doc = parse_json(result.output);
  const std::vector<double> expected{0.2, 0, 0, 1, 0.2, 0, 1};
  REQUIRE(doc["enumeration"].size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    REQUIRE(doc["enumeration"][i]["value"].get<double>() == expected[i]);

  RunResult picked = run_cli("transform " + spec.string() + " --hyper \"[[],[1]]\"");
  REQUIRE(picked.exit_code == 0);
  REQUIRE(parse_json(picked.output)["values"][0]["value"].get<double>() == 1.0);
}

TEST_CASE("moebius emits the worked table, the integral and the round-trip status") {
  const auto spec = write_spec("worked4", kWorkedSpec);
  RunResult result = run_cli("moebius " + spec.string());
  REQUIRE(result.exit_code == 0);
  auto doc = parse_json(result.output);
  REQUIRE(doc["roundtrip"] == "ok");
  REQUIRE(doc["integral"].get<double>() == 3.2);
  const std::vector<double> expected{0.2, 0, 0, 0.8, 0, 0, 0};
  REQUIRE(doc["table"].size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    REQUIRE(doc["table"][i]["moebius"].get<double>() == expected[i]);
}

TEST_CASE("audit reports the structural facts") {
  const auto spec = write_spec("worked5", kWorkedSpec);
  RunResult result = run_cli("audit " + spec.string());
  REQUIRE(result.exit_code == 0);
  auto doc = parse_json(result.output);
  REQUIRE(doc["range"] == nlohmann::json::array({0.0, 0.2, 1.0}));
  REQUIRE(doc["zero_sets"] == "ok");
  REQUIRE(doc["n_mu"]["minitive"].get<bool>());
  REQUIRE_FALSE(doc["n_mu"]["additivity"]["additive"].get<bool>());
  REQUIRE(doc["n_mu"]["additivity"]["characterization_agrees"].get<bool>());

  const auto strongest = write_spec(
      "strongest", R"({"n":2,"family":"powerset","mu":{"name":"strongest"}})");
  auto strongest_doc = parse_json(run_cli("audit " + strongest.string()).output);
  REQUIRE(strongest_doc["n_mu"]["additivity"]["additive"].get<bool>());
  REQUIRE(strongest_doc["duality"] == "ok");

  const auto counting = write_spec("counting", R"({"n":2,"family":"powerset","mu":{"name":"counting"}})");
  auto counting_doc = parse_json(run_cli("audit " + counting.string()).output);
  REQUIRE_FALSE(counting_doc["n_mu"]["additivity"]["additive"].get<bool>());
  REQUIRE(counting_doc["n_mu"]["additivity"].contains("witness"));
}

TEST_CASE("examples corpus passes; a tampered golden fails with a diff") {
  RunResult ok = run_cli("examples");
  REQUIRE(ok.exit_code == 0);
  REQUIRE(ok.output.find("FAIL") == std::string::npos);
  REQUIRE(ok.output.find("PASS worked-integral-routes") != std::string::npos);

  RunResult tampered = run_cli("examples --tamper worked-integral-routes");
  REQUIRE(tampered.exit_code == 1);
  REQUIRE(tampered.output.find("FAIL worked-integral-routes") != std::string::npos);
  REQUIRE(tampered.output.find("expected") != std::string::npos);
}

TEST_CASE("schema errors exit with code 2") {
  const auto missing_x = write_spec("missing_x", R"({"n":3,"family":[[],[1]],"mu":[0,1]})");
  RunResult result = run_cli("integrate " + missing_x.string());
  REQUIRE(result.exit_code == 2);
  REQUIRE(result.output.find("full set X") != std::string::npos);

  const auto malformed = write_spec("malformed", "{ not json");
  REQUIRE(run_cli("integrate " + malformed.string()).exit_code == 2);
}

TEST_CASE("precondition errors exit with code 3") {
  // 21 members exceed the Moebius enumeration cap.
  nlohmann::json family = nlohmann::json::array();
  family.push_back(nlohmann::json::array());
  for (int i = 1; i <= 19; ++i) family.push_back(nlohmann::json::array({i}));
  nlohmann::json all = nlohmann::json::array();
  for (int i = 1; i <= 24; ++i) all.push_back(i);
  family.push_back(all);
  nlohmann::json spec;
  spec["n"] = 24;
  spec["family"] = family;
  spec["mu"] = nlohmann::json{{"name", "counting"}};
  const auto big = write_spec("big", spec.dump());
  RunResult result = run_cli("moebius " + big.string());
  REQUIRE(result.exit_code == 3);

  const auto bad_mu = write_spec("bad_mu", R"({"n":2,"family":[[],[1],[1,2]],"mu":[0,2,1]})");
  REQUIRE(run_cli("audit " + bad_mu.string()).exit_code == 3);
}

TEST_CASE("a family without the empty set reports an infinite integral") {
  const auto spec = write_spec(
      "no_empty", R"({"n":2,"family":[[1],[1,2]],"mu":[0.2,1],"fca":{"raw_t":[1,0]}})");
  RunResult result = run_cli("integrate " + spec.string());
  REQUIRE(result.exit_code == 0);
  auto doc = parse_json(result.output);
  REQUIRE(doc["integral"]["value"] == "inf");
  REQUIRE(doc["integral"]["infinite"].get<bool>());
  REQUIRE(doc["integral"].contains("note"));
  REQUIRE(doc["integral"]["skipped"].contains("formula_i"));
}

TEST_CASE("pretty output renders tables") {
  const auto spec = write_spec("pretty", kWorkedSpec);
  RunResult result = run_cli("integrate " + spec.string() + " --pretty");
  REQUIRE(result.exit_code == 0);
  REQUIRE(result.output.find("integral = 3.2") != std::string::npos);
  REQUIRE(result.output.find("[0, 3)") != std::string::npos);
}
