#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "latlab/error.hpp"
#include "latlab_cli/cli.hpp"

using namespace latlab::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("latlab_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config file, then flags") {
  const auto dir = scratch("config");
  std::ofstream(dir / "run.cfg") << "[run]\ncommand = theorem4\nformat = json\nthreads = 3\n"
                                    "budget_seconds = 60\n[grid]\nT = 200, 500\n";
  RunConfig cfg;
  apply_config_file(cfg, dir / "run.cfg");
  CHECK(cfg.command == Command::theorem4);
  CHECK(cfg.format == Format::json);
  CHECK(cfg.threads == 3);
  CHECK(cfg.budget_seconds == 60.0);
  CHECK(cfg.grids.at("T") == std::vector<double>{200.0, 500.0});
  CHECK_NOTHROW(validate(cfg));

  std::ofstream(dir / "bad.cfg") << "[run]\ncolour = blue\n";
  CHECK_THROWS_AS(apply_config_file(cfg, dir / "bad.cfg"), latlab::ConfigError);
  std::ofstream(dir / "bad2.cfg") << "[grid]\nq = 1\n";
  CHECK_THROWS_AS(apply_config_file(cfg, dir / "bad2.cfg"), latlab::ConfigError);
}

TEST_CASE("validation") {
  RunConfig cfg;
  cfg.grids["T"] = {};
  CHECK_THROWS_AS(validate(cfg), latlab::ConfigError);
  cfg.grids.clear();
  cfg.budget_seconds = 0.0;
  CHECK_THROWS_AS(validate(cfg), latlab::ConfigError);
  cfg.budget_seconds = 1.0;
  cfg.command = Command::calibrate;
  cfg.calibrate_target = "nope";
  CHECK_THROWS_AS(validate(cfg), latlab::ConfigError);
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 2);
}

TEST_CASE("command names round trip") {
  for (Command c : suite_commands()) CHECK(parse_command(to_string(c)) == c);
  CHECK_FALSE(parse_command("theorem6").has_value());
}

TEST_CASE("empty result renders header-only CSV and a summary") {
  SuiteResult r;
  r.suite = "empty";
  r.tables.push_back({"empty", {"a", "b"}, {}});
  const auto files = render(r, Format::csv);
  CHECK(files.at("empty.csv") == "a,b\n");
  const auto summary = nlohmann::json::parse(files.at("empty_summary.json"));
  CHECK(summary["passed"] == true);
  CHECK(summary["criteria"].empty());
}

TEST_CASE("JSON tables carry the provenance block") {
  SuiteResult r;
  r.suite = "x";
  r.tables.push_back({"x", {"v", "name"}, {{1.0 / 3.0, std::string("a")}}});
  const auto files = render(r, Format::json);
  const auto doc = nlohmann::json::parse(files.at("x.json"));
  CHECK(doc["rows"][0]["v"].get<double>() == 0.333333333333);
  CHECK(doc["rows"][0]["name"] == "a");
  REQUIRE(doc["provenance"].size() == 3);
  CHECK(doc["provenance"][0]["name"] == "motohashi");
  CHECK(doc["provenance"][0].contains("generated_by"));
}

TEST_CASE("a failing hard criterion sets the exit status; informational ones do not") {
  SuiteResult r;
  r.suite = "s";
  r.criteria.push_back({"a", "info", false, false, ""});
  auto summary = nlohmann::json::parse(render(r, Format::csv).at("s_summary.json"));
  CHECK(summary["passed"] == true);
  r.criteria.push_back({"b", "hard", false, true, ""});
  summary = nlohmann::json::parse(render(r, Format::csv).at("s_summary.json"));
  CHECK(summary["passed"] == false);
}

TEST_CASE("identical runs write byte-identical files") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  RunConfig cfg;
  cfg.command = Command::funceq;
  std::ostringstream out, err;
  cfg.output_dir = a;
  REQUIRE(run(cfg, out, err) == 0);
  cfg.output_dir = b;
  cfg.threads = 4;
  REQUIRE(run(cfg, out, err) == 0);
  int n = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
    ++n;
  }
  CHECK(n == 3);
}

TEST_CASE("budget exhaustion aborts with exit 3 and flags the partial summary") {
  const auto dir = scratch("budget");
  RunConfig cfg;
  cfg.command = Command::moments;
  cfg.budget_seconds = 1e-3;
  cfg.output_dir = dir;
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 3);
  const auto summary = nlohmann::json::parse(slurp(dir / "moments_summary.json"));
  CHECK(summary["partial"] == true);
  CHECK(summary["passed"] == false);
  CHECK(out.str().find("ABORT moments") != std::string::npos);
}

TEST_CASE("memory budget guards the sieve") {
  const auto dir = scratch("memory");
  RunConfig cfg;
  cfg.command = Command::sieve;
  cfg.grids["N"] = {1e7};
  cfg.budget_memory_mb = 10.0;
  cfg.output_dir = dir;
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 3);
}

}  // TEST_SUITE
