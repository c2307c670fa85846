#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "latlab/arith.hpp"
#include "latlab/fit.hpp"
#include "latlab/quadrature.hpp"

namespace latlab::cli {

struct MotohashiFit {
  std::array<std::array<double, 3>, 3> c{};
  double rms = 0.0;  // of S(x, h) / x
  std::vector<double> x_grid;
  std::vector<std::uint64_t> h_values;
};

// Joint least-squares fit of sum_{n<=x} d(n) d(n+h) / x over every (x, h) to
//   sum_i (log x)^i sum_j c_ij sum_{d|h} (log d)^j / d
// with c21 = c22 = 0. c20 is fixed at 6/pi^2 when pin_leading is set.
MotohashiFit fit_motohashi(const arith::SieveTable& table, std::span<const double> x_grid,
                           std::span<const std::uint64_t> h_values, bool pin_leading);

// 60 log-spaced integers in [1e4, x_max].
std::vector<double> motohashi_x_grid(double x_max);

// I_2(T) / T on the grid as a quartic in log T; a0 pinned to 1/(2 pi^2) when asked.
FitReport fit_moment_i2(std::span<const double> T_grid, bool pin_leading, const QuadratureConfig& quad);
std::vector<double> moment_i2_grid();

}  // namespace latlab::cli
