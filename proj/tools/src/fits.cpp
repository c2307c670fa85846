#include "latlab_cli/fits.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "latlab/zeta.hpp"

namespace latlab::cli {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> motohashi_x_grid(double x_max) {
  std::vector<double> xs;
  constexpr int kPoints = 60;
  const double lo = std::log(1e4);
  const double hi = std::log(x_max);
  for (int i = 0; i < kPoints; ++i) {
    const double x = std::round(std::exp(lo + (hi - lo) * i / (kPoints - 1)));
    if (xs.empty() || x > xs.back()) xs.push_back(x);
  }
  return xs;
}

MotohashiFit fit_motohashi(const arith::SieveTable& table, std::span<const double> x_grid,
                           std::span<const std::uint64_t> h_values, bool pin_leading) {
  // Flattened (x, h) pairs, addressed by index through the basis functions.
  std::vector<double> lx;
  std::vector<double> dj[3];
  std::vector<double> ys;
  for (auto h : h_values) {
    const auto sums = arith::correlation_sums(arith::Sequence::d, h, x_grid, table);
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
      lx.push_back(std::log(x_grid[i]));
      for (int j = 0; j < 3; ++j) dj[j].push_back(arith::log_divisor_sum(h, j));
      ys.push_back(sums[i] / x_grid[i]);
    }
  }
  std::vector<double> index(ys.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = static_cast<double>(i);
  auto at = [](const std::vector<double>& v, double i) { return v[static_cast<std::size_t>(i)]; };

  // Unknowns c20, c10, c11, c12, c00, c01, c02.
  const int ij[7][2] = {{2, 0}, {1, 0}, {1, 1}, {1, 2}, {0, 0}, {0, 1}, {0, 2}};
  std::vector<BasisFunction> basis;
  for (const auto& p : ij) {
    const int i = p[0];
    const int j = p[1];
    basis.push_back([&, i, j](double k) { return std::pow(at(lx, k), i) * at(dj[j], k); });
  }
  std::vector<std::optional<double>> pins(basis.size());
  if (pin_leading) pins[0] = 6.0 / (kPi * kPi);
  const auto fit = fit_linear_model("motohashi", index, ys, basis, pins);

  MotohashiFit out;
  for (std::size_t k = 0; k < 7; ++k) out.c[ij[k][0]][ij[k][1]] = fit.coefficients[k];
  out.rms = fit.residual_norm;
  out.x_grid.assign(x_grid.begin(), x_grid.end());
  out.h_values.assign(h_values.begin(), h_values.end());
  return out;
}

std::vector<double> moment_i2_grid() {
  std::vector<double> g;
  for (double T = 1000.0; T <= 30000.0; T += 500.0) g.push_back(T);
  return g;
}

FitReport fit_moment_i2(std::span<const double> T_grid, bool pin_leading, const QuadratureConfig& quad) {
  const auto reports = zeta::moment_sweep(2, T_grid, quad);
  std::vector<double> ys;
  for (const auto& r : reports) ys.push_back(r.I_value / r.T);
  std::vector<std::optional<double>> pins(5);
  if (pin_leading) pins[0] = 1.0 / (2.0 * kPi * kPi);
  return fit_polynomial("I2(T) / T = a0 log^4 T + a1 log^3 T + a2 log^2 T + a3 log T + a4", T_grid, ys, 4,
                        pins, [](double T) { return std::log(T); });
}

}  // namespace latlab::cli
