#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "latlab/fit.hpp"
#include "latlab/kvconfig.hpp"

// Calibration constants that the underlying theory calls "absolute" or
// "effectively computable" without listing them. Each one is produced by a
// `latlab calibrate ...` run, stored in core/data/*.cfg together with the
// generating command, and compiled into the library.
namespace latlab::frozen {

struct Provenance {
  std::string name;
  std::string generated_by;
  std::string date;
  std::string grid;
  std::string notes;
};

// Coefficients c_ij of x sum_i (log x)^i sum_j c_ij sum_{d|h} (log d)^j / d.
struct MotohashiCoefficients {
  std::array<std::array<double, 3>, 3> c{};
  std::array<std::array<bool, 3>, 3> fixed{};
  Provenance provenance;
};

const MotohashiCoefficients& motohashi();

// P2 of the divisor mean-square transform, descending powers of log T.
const FitReport& theorem5_p2();
const Provenance& theorem5_p2_provenance();

// a0..a4 of the fourth-moment main term, descending powers of log T.
const FitReport& moment_i2();
const Provenance& moment_i2_provenance();

// Raw embedded file text, keyed by data file stem.
std::string_view raw(std::string_view name);
std::vector<Provenance> all_provenance();

// Serialisers used by the calibrate command to write the data files.
std::string write_motohashi(const MotohashiCoefficients& m);
std::string write_fit(const FitReport& fit, const Provenance& p, std::string_view description);

// Parsers shared by the embedded loader and tests.
MotohashiCoefficients parse_motohashi(const KeyValueConfig& cfg);
FitReport parse_fit(const KeyValueConfig& cfg);
Provenance parse_provenance(const KeyValueConfig& cfg);

}  // namespace latlab::frozen
