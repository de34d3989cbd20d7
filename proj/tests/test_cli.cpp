#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* kCli = FUZMET_CLI_PATH;
const char* kConfigDir = FUZMET_CONFIG_DIR;

fs::path out_root() { return fs::path("cli_test_out"); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: ", p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_report(const fs::path& dir) { return json::parse(slurp(dir / "report.json")); }

// Runs the tool against a config from the fixtures directory, capturing
// stdout/stderr next to (not inside) the output directory. Returns the
// process exit code.
int run_cli(const std::string& subcmd, const std::string& config_name,
            const std::string& case_name, const std::string& extra_flags = "") {
  fs::path dir = out_root() / case_name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string cmd = std::string(kCli);
  if (!config_name.empty())
    cmd += " --config " + (fs::path(kConfigDir) / config_name).string();
  cmd += " --out " + dir.string();
  if (!extra_flags.empty()) cmd += " " + extra_flags;
  cmd += " " + subcmd;
  cmd += " > " + (out_root() / (case_name + ".out")).string();
  cmd += " 2> " + (out_root() / (case_name + ".err")).string();
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("check accepts the staircase fixture") {
  REQUIRE(run_cli("check", "check_ex2_4.json", "check_ok") == 0);
  json rep = read_report(out_root() / "check_ok");
  CHECK(rep.at("status") == "pass");
  CHECK(rep.at("command") == "check");
  CHECK(rep.at("results").at("axioms_hold") == true);
  CHECK(rep.at("results").at("fd_holds") == true);
  std::string out = slurp(out_root() / "check_ok.out");
  CHECK(out.find("check: pass") != std::string::npos);
}

TEST_CASE("check flags the constant-half fixture and names the broken axiom") {
  REQUIRE(run_cli("check", "check_ex2_5.json", "check_bad") == 1);
  json rep = read_report(out_root() / "check_bad");
  CHECK(rep.at("status") == "violation");
  bool sdp_failed = false;
  for (const auto& e : rep.at("results").at("axioms"))
    if (e.at("axiom") == "SDP" && e.at("passed") == false) sdp_failed = true;
  CHECK(sdp_failed);
}

TEST_CASE("check handles bare crisp metrics too") {
  REQUIRE(run_cli("check", "check_metric_good.json", "check_metric_ok") == 0);
  json ok = read_report(out_root() / "check_metric_ok");
  CHECK(ok.at("results").at("subject") == "crisp metric");

  REQUIRE(run_cli("check", "check_metric_bad.json", "check_metric_bad") == 1);
  json bad = read_report(out_root() / "check_metric_bad");
  bool triangle_failed = false;
  for (const auto& e : bad.at("results").at("axioms"))
    if (e.at("axiom") == "triangle" && e.at("passed") == false) triangle_failed = true;
  CHECK(triangle_failed);
}

TEST_CASE("crispify writes one matrix file per level and branch") {
  REQUIRE(run_cli("crispify", "crispify_ex3_7.json", "crispify_diverging") == 0);
  fs::path dir = out_root() / "crispify_diverging";
  for (const char* name : {"upper_0.5.csv", "lower_0.5.csv", "upper_0.9.csv", "lower_0.9.csv",
                           "radu.csv"})
    CHECK_MESSAGE(fs::exists(dir / name), "missing ", name);
  CHECK_FALSE(fs::exists(dir / "limit.csv"));  // every pair diverges

  // At level 1/2 the cuts of t/(t+c) equal c itself.
  std::string upper = slurp(dir / "upper_0.5.csv");
  CHECK(upper.find(",1,2,5") != std::string::npos);  // header row
  CHECK(upper.find("1,0,1,4") != std::string::npos);
  CHECK(upper.find("2,1,0,3") != std::string::npos);

  json rep = read_report(dir);
  CHECK(rep.at("results").at("limit").at("fd") == false);
  for (const auto& p : rep.at("results").at("limit").at("pairs"))
    CHECK(p.at("converged") == false);
}

TEST_CASE("crispify emits the limit matrix when it converges") {
  REQUIRE(run_cli("crispify", "crispify_ex4_6.json", "crispify_capped") == 0);
  fs::path dir = out_root() / "crispify_capped";
  std::string limit = slurp(dir / "limit.csv");
  CHECK(limit.find(",0,1") != std::string::npos);
  CHECK(limit.find("0,0,2") != std::string::npos);
  CHECK(limit.find("1,2,0") != std::string::npos);
  json rep = read_report(dir);
  CHECK(rep.at("results").at("limit").at("fd") == true);
}

TEST_CASE("crispify embeds matrices in the report when format is json") {
  REQUIRE(run_cli("crispify", "crispify_json_format.json", "crispify_json") == 0);
  fs::path dir = out_root() / "crispify_json";
  CHECK_FALSE(fs::exists(dir / "upper_0.5.csv"));
  json rep = read_report(dir);
  const json& upper = rep.at("results").at("upper");
  REQUIRE(upper.size() == 1);
  CHECK(upper[0].at("rows")[0][1] == 0.75);
  CHECK(rep.at("results").at("lower")[0].at("rows")[0][1] == 0.25);
}

TEST_CASE("the lambda-grid flag overrides the config grid") {
  REQUIRE(run_cli("crispify", "crispify_ex4_6.json", "crispify_flag", "--lambda-grid 0.5") == 0);
  fs::path dir = out_root() / "crispify_flag";
  CHECK(fs::exists(dir / "upper_0.5.csv"));
  CHECK_FALSE(fs::exists(dir / "upper_0.25.csv"));
}

TEST_CASE("roundtrip reports exact reconstruction for a Euclidean metric") {
  REQUIRE(run_cli("roundtrip", "roundtrip_ok.json", "roundtrip_ok") == 0);
  json rep = read_report(out_root() / "roundtrip_ok");
  CHECK(rep.at("status") == "pass");
  CHECK(rep.at("results").at("limit_equal") == true);
  for (const auto& v : rep.at("results").at("upper_equal")) CHECK(v == true);
  for (const auto& v : rep.at("results").at("lower_equal")) CHECK(v == true);
}

TEST_CASE("roundtrip refuses a non-metric input as a config error") {
  CHECK(run_cli("roundtrip", "roundtrip_bad.json", "roundtrip_bad") == 2);
  std::string err = slurp(out_root() / "roundtrip_bad.err");
  CHECK(err.find("error:") != std::string::npos);
  CHECK(err.find("triangle") != std::string::npos);
}

TEST_CASE("roundtrip on a single point passes vacuously") {
  CHECK(run_cli("roundtrip", "roundtrip_single.json", "roundtrip_single") == 0);
}

TEST_CASE("fuzzify reports the generated profiles and their axioms") {
  REQUIRE(run_cli("fuzzify", "fuzzify_mnk.json", "fuzzify_mnk") == 0);
  json rep = read_report(out_root() / "fuzzify_mnk");
  CHECK(rep.at("results").at("fuzzify").at("kind") == "mnk");
  CHECK(rep.at("results").at("axioms_hold") == true);
  CHECK(rep.at("results").at("fd_holds") == false);
  for (const auto& p : rep.at("results").at("pairs")) {
    CHECK(p.at("backend") == "rational");
    CHECK(p.at("c").get<double>() > 0.0);
  }
}

TEST_CASE("balls roundtrip shows the limit-metric family refining the original") {
  REQUIRE(run_cli("balls", "balls_roundtrip_ex4_6.json", "balls_roundtrip") == 0);
  fs::path dir = out_root() / "balls_roundtrip";
  json rep = read_report(dir);
  const json& verdict = rep.at("results").at("verdict");
  CHECK(verdict.at("relation") == "left_refines_right");
  REQUIRE_FALSE(verdict.at("witnesses").empty());
  CHECK(verdict.at("witnesses")[0].at("members").size() == 1);
  CHECK(fs::exists(dir / "balls_left.csv"));
  CHECK(fs::exists(dir / "balls_right.csv"));
}

TEST_CASE("balls convert matches fuzzy and crisp families through the radius maps") {
  REQUIRE(run_cli("balls", "balls_convert_mnk.json", "balls_convert_mnk") == 0);
  json mnk = read_report(out_root() / "balls_convert_mnk");
  CHECK(mnk.at("results").at("verdict").at("relation") == "equal");

  REQUIRE(run_cli("balls", "balls_convert_indicator.json", "balls_convert_ind") == 0);
  json ind = read_report(out_root() / "balls_convert_ind");
  CHECK(ind.at("results").at("verdict").at("relation") == "equal");
}

TEST_CASE("balls refinement mode checks containment cell by cell") {
  REQUIRE(run_cli("balls", "balls_refinement_ex4_6.json", "balls_refinement") == 0);
  fs::path dir = out_root() / "balls_refinement";
  json rep = read_report(dir);
  CHECK(rep.at("results").at("verdict").at("relation") == "left_refines_right");
  CHECK(fs::exists(dir / "balls_left.csv"));
  CHECK(fs::exists(dir / "balls_right.csv"));
}

TEST_CASE("catalog-list prints every fixture id") {
  REQUIRE(run_cli("catalog-list", "", "catalog_list") == 0);
  std::string out = slurp(out_root() / "catalog_list.out");
  for (const char* id : {"ex2_4", "ex2_5", "ex3_6", "ex3_7", "ex4_5", "ex4_6"})
    CHECK_MESSAGE(out.find(id) != std::string::npos, "stdout misses ", id);
  json rep = read_report(out_root() / "catalog_list");
  CHECK(rep.at("results").at("fixtures").size() == 6);
}

TEST_CASE("configuration problems exit with the usage code") {
  CHECK(run_cli("check", "broken.json", "cfg_broken") == 2);
  CHECK(run_cli("check", "unknown_fixture.json", "cfg_unknown") == 2);
  CHECK(run_cli("check", "both_inputs.json", "cfg_both") == 2);
  CHECK(run_cli("check", "no_such_file.json", "cfg_missing") == 2);
  CHECK(run_cli("crispify", "check_metric_good.json", "cfg_no_space") == 2);  // bare metric
  CHECK(run_cli("", "check_ex2_4.json", "cfg_no_subcmd") == 2);
  CHECK(run_cli("check --definitely-not-a-flag", "check_ex2_4.json", "cfg_bad_flag") == 2);
}

TEST_CASE("reruns of the same command produce byte-identical outputs") {
  REQUIRE(run_cli("crispify", "crispify_ex3_7.json", "det_a") == 0);
  REQUIRE(run_cli("crispify", "crispify_ex3_7.json", "det_b") == 0);
  fs::path a = out_root() / "det_a";
  fs::path b = out_root() / "det_b";
  for (const char* name :
       {"report.json", "upper_0.5.csv", "lower_0.5.csv", "upper_0.9.csv", "lower_0.9.csv",
        "radu.csv"})
    CHECK_MESSAGE(slurp(a / name) == slurp(b / name), name, " differs between reruns");
}
