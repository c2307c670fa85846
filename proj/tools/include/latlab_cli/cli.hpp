#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latlab/arith.hpp"
#include "latlab/laplace.hpp"
#include "latlab/quadrature.hpp"

// Library behind the `latlab` executable: configuration, verification suites
// and report emission. Kept separate from main() so tests can drive it.
namespace latlab::cli {

enum class Command {
  sieve,
  errterm,
  series,
  correlations,
  theorem4,
  theorem5,
  kober,
  jutila,
  atkinson,
  moments,
  funceq,
  mellin,
  all,
  calibrate,
};

enum class Format { csv, json };

const char* to_string(Command c);
std::optional<Command> parse_command(const std::string& name);
// Suites in the order `all` runs them.
const std::vector<Command>& suite_commands();

// Grid names understood by the suites: x, N, T, sigma, s, h.
using Grids = std::map<std::string, std::vector<double>>;

struct RunConfig {
  Command command = Command::all;
  std::string calibrate_target;  // motohashi, theorem5_p2 or moment_i2
  Grids grids;                   // empty entries fall back to suite defaults
  std::filesystem::path output_dir = "latlab-out";
  Format format = Format::csv;
  int threads = 1;
  double budget_seconds = 3600.0;
  double budget_memory_mb = 2048.0;
  std::filesystem::path cache_dir;  // empty: arith::default_cache_dir()
};

// Applies a key = value config file on top of `cfg`. Sections [run] and [grid].
void apply_config_file(RunConfig& cfg, const std::filesystem::path& file);
// Throws ConfigError on empty grids or non-positive budgets.
void validate(const RunConfig& cfg);

// Grid value or the suite default.
std::vector<double> grid_or(const RunConfig& cfg, const std::string& key, std::vector<double> fallback);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::string name;  // file stem
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct Criterion {
  std::string id;
  std::string description;
  bool passed = false;
  bool hard = true;  // informational checks do not affect the exit status
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  Grids grid;  // the grids actually used
  std::vector<Criterion> criteria;
  std::vector<Table> tables;
  // Extra files written verbatim (calibration data).
  std::vector<std::pair<std::string, std::string>> files;
  bool partial = false;  // stopped by the budget
  std::string note;
};

// Shared state of one run: deadline, sieve and constants, loaded on demand.
class Context {
 public:
  explicit Context(const RunConfig& cfg);

  const RunConfig& config() const { return cfg_; }
  QuadratureConfig quadrature() const;
  const Deadline& deadline() const { return deadline_; }

  // A table covering at least [1, min_limit]; one table is kept and grown.
  const arith::SieveTable& sieve(std::uint64_t min_limit);
  bool last_sieve_cache_hit() const { return cache_hit_; }
  std::filesystem::path cache_dir() const;

  // From a sieve of kConstantSieve entries.
  const laplace::ConstantSeries& constant(laplace::ConstantKind kind);

  static constexpr std::uint64_t kConstantSieve = 1'000'000;

 private:
  RunConfig cfg_;
  Deadline deadline_;
  arith::SieveTable table_;
  bool cache_hit_ = false;
  std::optional<laplace::ConstantSeries> r2_;
  std::optional<laplace::ConstantSeries> d2_;
};

SuiteResult run_suite(Command c, Context& ctx);
SuiteResult run_calibration(const std::string& target, Context& ctx);

// Report files (name -> content). Tables in the chosen format plus
// <suite>_summary.json.
std::map<std::string, std::string> render(const SuiteResult& result, Format format);

// Writes every rendered file under cfg.output_dir, prints one line per
// criterion to `out`, and returns the exit status: 0 all hard criteria pass,
// 1 a criterion failed, 2 configuration error, 3 budget exceeded.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and the optional --config file, then calls run().
int main_entry(int argc, char** argv);

}  // namespace latlab::cli
