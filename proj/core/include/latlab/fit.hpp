#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latlab {

// Least-squares fit of a linear model to values computed on a grid.
// Pinned coefficients are fixed before fitting and never altered.
struct FitReport {
  std::string model;
  std::vector<double> coefficients;
  std::vector<bool> pinned;
  // Root-mean-square residual over the grid.
  double residual_norm = 0.0;
  std::vector<double> grid;
};

using BasisFunction = std::function<double(double)>;

// Fits values[i] ~ sum_k c_k basis[k](grid[i]). `pins[k]`, when set, fixes c_k.
FitReport fit_linear_model(std::string model, std::span<const double> grid,
                           std::span<const double> values, std::span<const BasisFunction> basis,
                           std::span<const std::optional<double>> pins);

// Polynomial in u = transform(grid) with coefficients in descending powers:
// values ~ c_0 u^degree + c_1 u^{degree-1} + ... + c_degree.
FitReport fit_polynomial(std::string model, std::span<const double> grid,
                         std::span<const double> values, int degree,
                         std::span<const std::optional<double>> pins,
                         const std::function<double(double)>& transform);

// Descending-power Horner evaluation.
double polyval_desc(std::span<const double> coefficients, double u);

// Slope of the least-squares line through (log x, log y). All inputs positive.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace latlab
