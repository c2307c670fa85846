#include <cmath>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "latlab/error.hpp"
#include "latlab/kvconfig.hpp"
#include "latlab_cli/cli.hpp"

namespace latlab::cli {

namespace {

// r, d and both prefix arrays, plus the build-time factor table.
constexpr double kSieveBytesPerEntry = 28.0;

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw IoError("failed writing " + path.string());
}

struct Outcome {
  bool failed = false;
  bool partial = false;
};

Outcome emit(const SuiteResult& r, const RunConfig& cfg, std::ostream& out) {
  std::filesystem::create_directories(cfg.output_dir);
  for (const auto& [name, content] : render(r, cfg.format)) write_file(cfg.output_dir / name, content);
  Outcome o;
  for (const auto& c : r.criteria) {
    out << (c.passed ? "PASS" : (c.hard ? "FAIL" : "INFO")) << "  " << r.suite << "." << c.id << "  "
        << c.description;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << "\n";
    if (c.hard && !c.passed) o.failed = true;
  }
  if (r.partial) {
    out << "ABORT " << r.suite << "  budget exceeded, partial results flagged in "
        << r.suite << "_summary.json";
    if (!r.note.empty()) out << "  [" << r.note << "]";
    out << "\n";
    o.partial = true;
  }
  return o;
}

}  // namespace

Context::Context(const RunConfig& cfg)
    : cfg_(cfg), deadline_(Deadline::after(std::chrono::duration<double>(cfg.budget_seconds))) {}

QuadratureConfig Context::quadrature() const {
  QuadratureConfig q;
  q.threads = cfg_.threads;
  q.deadline = deadline_;
  return q;
}

std::filesystem::path Context::cache_dir() const {
  return cfg_.cache_dir.empty() ? arith::default_cache_dir() : cfg_.cache_dir;
}

const arith::SieveTable& Context::sieve(std::uint64_t min_limit) {
  if (table_.limit() >= min_limit) return table_;
  const double bytes = kSieveBytesPerEntry * static_cast<double>(min_limit);
  if (bytes > cfg_.budget_memory_mb * 1e6) {
    throw BudgetError("sieve to " + std::to_string(min_limit) + " needs about " +
                      std::to_string(static_cast<long long>(bytes / 1e6)) + " MB");
  }
  deadline_.check("sieve");
  table_ = arith::load_or_build_sieve(min_limit, cache_dir(), &cache_hit_);
  return table_;
}

const laplace::ConstantSeries& Context::constant(laplace::ConstantKind kind) {
  auto& slot = kind == laplace::ConstantKind::r_squared ? r2_ : d2_;
  if (!slot) {
    const auto& t = sieve(kConstantSieve);
    if (t.limit() == kConstantSieve) {
      slot = laplace::constant_series(kind, t);
    } else {
      // Keep the constant independent of whatever larger table is loaded.
      slot = laplace::constant_series(kind, arith::load_or_build_sieve(kConstantSieve, cache_dir()));
    }
  }
  return *slot;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "latlab: " << e.what() << "\n";
    return 2;
  }
  try {
    Context ctx(cfg);
    std::vector<SuiteResult> results;
    bool failed = false;
    if (cfg.command == Command::calibrate) {
      const auto o = emit(run_calibration(cfg.calibrate_target, ctx), cfg, out);
      if (o.partial) return 3;
      return o.failed ? 1 : 0;
    }
    std::vector<Command> order;
    if (cfg.command == Command::all) order = suite_commands();
    else order = {cfg.command};
    int passed = 0;
    int total = 0;
    for (Command c : order) {
      const auto r = run_suite(c, ctx);
      if (c == Command::sieve) {
        out << "sieve cache " << (ctx.last_sieve_cache_hit() ? "hit" : "written") << ": "
            << arith::cache_file_for(ctx.cache_dir(), ctx.sieve(0).limit()).string() << "\n";
      }
      const auto o = emit(r, cfg, out);
      for (const auto& crit : r.criteria) {
        if (!crit.hard) continue;
        ++total;
        if (crit.passed) ++passed;
      }
      if (o.partial) return 3;
      failed = failed || o.failed;
    }
    out << passed << "/" << total << " criteria passed\n";
    return failed ? 1 : 0;
  } catch (const ConfigError& e) {
    err << "latlab: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "latlab: budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "latlab: " << e.what() << "\n";
    return 1;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"latlab: numerical checks for lattice-point and zeta mean-value identities"};
  app.set_help_flag("--help", "print this help and exit");
  std::string command;
  std::string target;
  std::string config_path;
  std::string out_dir;
  std::string format;
  int threads = 0;
  double budget = 0.0;
  double memory = 0.0;
  std::string cache;
  std::string grid;
  std::map<std::string, std::string> grid_flags;

  app.add_option("command", command,
                 "sieve, errterm, series, correlations, theorem4, theorem5, kober, jutila, "
                 "atkinson, moments, funceq, mellin, all, calibrate");
  app.add_option("target", target, "calibration target: motohashi, theorem5_p2, moment_i2");
  app.add_option("--config", config_path, "key = value config file ([run] and [grid] sections)");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "worker threads (default: hardware parallelism)");
  app.add_option("--budget-seconds", budget, "wall-clock budget");
  app.add_option("--budget-memory-mb", memory, "memory budget for sieves");
  app.add_option("--cache", cache, "sieve cache directory (overrides LATLAB_CACHE_DIR)");
  app.add_option("--grid", grid, "'default' for the suite's built-in grid");
  for (const char* key : {"x", "N", "T", "sigma", "s", "h"}) {
    app.add_option(std::string("--") + key, grid_flags[key], std::string("comma-separated ") + key + " grid");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunConfig cfg;
  cfg.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  try {
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (!command.empty()) {
      const auto c = parse_command(command);
      if (!c) throw ConfigError("unknown command '" + command + "'");
      cfg.command = *c;
    } else if (config_path.empty()) {
      throw ConfigError("no command given (try --help)");
    }
    if (!target.empty()) cfg.calibrate_target = target;
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    if (!format.empty()) cfg.format = format == "json" ? Format::json : Format::csv;
    if (app.count("--threads")) cfg.threads = threads;
    if (app.count("--budget-seconds")) cfg.budget_seconds = budget;
    if (app.count("--budget-memory-mb")) cfg.budget_memory_mb = memory;
    if (!cache.empty()) cfg.cache_dir = cache;
    if (!grid.empty() && grid != "default") throw ConfigError("--grid accepts only 'default'");
    for (const auto& [key, text] : grid_flags) {
      if (app.count("--" + key)) cfg.grids[key] = parse_double_list(text);
    }
  } catch (const Error& e) {
    std::cerr << "latlab: " << e.what() << "\n";
    return 2;
  }
  return run(cfg, std::cout, std::cerr);
}

}  // namespace latlab::cli
