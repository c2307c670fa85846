#include "latlab/frozen.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "frozen_data.hpp"
#include "latlab/error.hpp"

namespace latlab::frozen {

namespace {

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string provenance_block(const Provenance& p) {
  std::string out = "[provenance]\n";
  out += "name = " + p.name + "\n";
  out += "generated_by = " + p.generated_by + "\n";
  out += "date = " + p.date + "\n";
  out += "grid = " + p.grid + "\n";
  out += "notes = " + p.notes + "\n";
  return out;
}

}  // namespace

Provenance parse_provenance(const KeyValueConfig& cfg) {
  Provenance p;
  p.name = cfg.get("provenance", "name").value_or("");
  p.generated_by = cfg.get("provenance", "generated_by").value_or("");
  p.date = cfg.get("provenance", "date").value_or("");
  p.grid = cfg.get("provenance", "grid").value_or("");
  p.notes = cfg.get("provenance", "notes").value_or("");
  return p;
}

MotohashiCoefficients parse_motohashi(const KeyValueConfig& cfg) {
  MotohashiCoefficients m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const std::string key = "c" + std::to_string(i) + std::to_string(j);
      m.c[i][j] = cfg.require_double("coefficients", key);
      m.fixed[i][j] = cfg.get("fixed", key).has_value();
    }
  }
  // The three structural values are not negotiable, whatever the file says.
  if (m.c[2][2] != 0.0 || m.c[2][1] != 0.0 ||
      std::abs(m.c[2][0] - 6.0 / (std::numbers::pi * std::numbers::pi)) > 1e-15) {
    throw FitError("motohashi data: c22 = c21 = 0 and c20 = 6/pi^2 are required");
  }
  m.provenance = parse_provenance(cfg);
  return m;
}

FitReport parse_fit(const KeyValueConfig& cfg) {
  FitReport f;
  f.model = cfg.require("fit", "model");
  f.coefficients = parse_double_list(cfg.require("fit", "coefficients"));
  const auto pinned = cfg.require("fit", "pinned");
  for (char ch : pinned) {
    if (ch == '1') f.pinned.push_back(true);
    if (ch == '0') f.pinned.push_back(false);
  }
  if (f.pinned.size() != f.coefficients.size()) {
    throw ConfigError("fit data: pinned mask length differs from coefficient count");
  }
  f.residual_norm = cfg.require_double("fit", "residual_norm");
  f.grid = parse_double_list(cfg.require("fit", "grid"));
  return f;
}

std::string write_motohashi(const MotohashiCoefficients& m) {
  std::string out =
      "# Shift-correlation coefficients for sum_{n<=x} d(n)d(n+h).\n"
      "# c20, c21, c22 are structural; the rest come from the calibration fit below.\n";
  out += provenance_block(m.provenance);
  out += "\n[coefficients]\n";
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out += "c" + std::to_string(i) + std::to_string(j) + " = " + exact(m.c[i][j]) + "\n";
    }
  }
  out += "\n[fixed]\n";
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (m.fixed[i][j]) out += "c" + std::to_string(i) + std::to_string(j) + " = structural\n";
    }
  }
  return out;
}

std::string write_fit(const FitReport& fit, const Provenance& p, std::string_view description) {
  std::string out = "# " + std::string(description) + "\n";
  out += provenance_block(p);
  out += "\n[fit]\nmodel = " + fit.model + "\ncoefficients = ";
  for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
    out += (i ? ", " : "") + exact(fit.coefficients[i]);
  }
  out += "\npinned = ";
  for (bool b : fit.pinned) out += b ? '1' : '0';
  out += "\nresidual_norm = " + exact(fit.residual_norm) + "\ngrid = ";
  for (std::size_t i = 0; i < fit.grid.size(); ++i) out += (i ? ", " : "") + exact(fit.grid[i]);
  out += "\n";
  return out;
}

const MotohashiCoefficients& motohashi() {
  static const MotohashiCoefficients m = parse_motohashi(KeyValueConfig::parse(detail::kMotohashi));
  return m;
}

const FitReport& theorem5_p2() {
  static const FitReport f = parse_fit(KeyValueConfig::parse(detail::kTheorem5P2));
  return f;
}

const Provenance& theorem5_p2_provenance() {
  static const Provenance p = parse_provenance(KeyValueConfig::parse(detail::kTheorem5P2));
  return p;
}

const FitReport& moment_i2() {
  static const FitReport f = parse_fit(KeyValueConfig::parse(detail::kMomentI2));
  return f;
}

const Provenance& moment_i2_provenance() {
  static const Provenance p = parse_provenance(KeyValueConfig::parse(detail::kMomentI2));
  return p;
}

std::string_view raw(std::string_view name) {
  if (name == "motohashi") return detail::kMotohashi;
  if (name == "theorem5_p2") return detail::kTheorem5P2;
  if (name == "moment_i2") return detail::kMomentI2;
  throw RangeError("unknown frozen data set: " + std::string(name));
}

std::vector<Provenance> all_provenance() {
  return {motohashi().provenance, theorem5_p2_provenance(), moment_i2_provenance()};
}

}  // namespace latlab::frozen
