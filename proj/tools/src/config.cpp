#include <algorithm>
#include <cmath>
#include <string>

#include "latlab/error.hpp"
#include "latlab/kvconfig.hpp"
#include "latlab_cli/cli.hpp"

namespace latlab::cli {

namespace {

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kNames[] = {
    {Command::sieve, "sieve"},         {Command::errterm, "errterm"},
    {Command::series, "series"},       {Command::correlations, "correlations"},
    {Command::theorem4, "theorem4"},   {Command::theorem5, "theorem5"},
    {Command::kober, "kober"},         {Command::jutila, "jutila"},
    {Command::atkinson, "atkinson"},   {Command::moments, "moments"},
    {Command::funceq, "funceq"},       {Command::mellin, "mellin"},
    {Command::all, "all"},             {Command::calibrate, "calibrate"},
};

const char* const kGridKeys[] = {"x", "N", "T", "sigma", "s", "h"};

}  // namespace

const char* to_string(Command c) {
  for (const auto& n : kNames) {
    if (n.command == c) return n.name;
  }
  return "?";
}

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& n : kNames) {
    if (name == n.name) return n.command;
  }
  return std::nullopt;
}

const std::vector<Command>& suite_commands() {
  static const std::vector<Command> order = {
      Command::sieve,    Command::errterm, Command::series,  Command::correlations,
      Command::theorem4, Command::theorem5, Command::kober,  Command::jutila,
      Command::atkinson, Command::moments, Command::funceq,  Command::mellin,
  };
  return order;
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& file) {
  const auto kv = KeyValueConfig::load(file.string());
  for (const auto& [section, entries] : kv.sections()) {
    if (section != "run" && section != "grid") {
      throw ConfigError("config: unknown section [" + section + "]");
    }
    for (const auto& [key, value] : entries) {
      if (section == "grid") {
        if (std::find(std::begin(kGridKeys), std::end(kGridKeys), key) == std::end(kGridKeys)) {
          throw ConfigError("config: unknown grid '" + key + "'");
        }
        cfg.grids[key] = parse_double_list(value);
        continue;
      }
      if (key == "command") {
        const auto c = parse_command(value);
        if (!c) throw ConfigError("config: unknown command '" + value + "'");
        cfg.command = *c;
      } else if (key == "target") {
        cfg.calibrate_target = value;
      } else if (key == "out") {
        cfg.output_dir = value;
      } else if (key == "format") {
        if (value == "csv") cfg.format = Format::csv;
        else if (value == "json") cfg.format = Format::json;
        else throw ConfigError("config: format must be csv or json");
      } else if (key == "threads") {
        const double t = parse_double(value);
        if (t != std::floor(t)) throw ConfigError("config: threads must be an integer");
        cfg.threads = static_cast<int>(t);
      } else if (key == "budget_seconds") {
        cfg.budget_seconds = parse_double(value);
      } else if (key == "budget_memory_mb") {
        cfg.budget_memory_mb = parse_double(value);
      } else if (key == "cache") {
        cfg.cache_dir = value;
      } else {
        throw ConfigError("config: unknown key '" + key + "' in [run]");
      }
    }
  }
}

void validate(const RunConfig& cfg) {
  for (const auto& [key, values] : cfg.grids) {
    if (values.empty()) throw ConfigError("grid '" + key + "' is empty");
    for (double v : values) {
      if (!std::isfinite(v)) throw ConfigError("grid '" + key + "' has a non-finite value");
    }
  }
  if (!(cfg.budget_seconds > 0.0)) throw ConfigError("budget_seconds must be positive");
  if (!(cfg.budget_memory_mb > 0.0)) throw ConfigError("budget_memory_mb must be positive");
  if (cfg.threads < 1) throw ConfigError("threads must be at least 1");
  if (cfg.command == Command::calibrate && cfg.calibrate_target != "motohashi" &&
      cfg.calibrate_target != "theorem5_p2" && cfg.calibrate_target != "moment_i2") {
    throw ConfigError("calibrate target must be motohashi, theorem5_p2 or moment_i2");
  }
}

std::vector<double> grid_or(const RunConfig& cfg, const std::string& key, std::vector<double> fallback) {
  const auto it = cfg.grids.find(key);
  if (it != cfg.grids.end()) return it->second;
  return fallback;
}

}  // namespace latlab::cli
