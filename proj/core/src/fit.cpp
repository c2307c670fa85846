#include "latlab/fit.hpp"

#include <cmath>
#include <Eigen/Dense>

#include "latlab/error.hpp"

namespace latlab {

FitReport fit_linear_model(std::string model, std::span<const double> grid,
                           std::span<const double> values, std::span<const BasisFunction> basis,
                           std::span<const std::optional<double>> pins) {
  if (grid.size() != values.size()) throw FitError("fit: grid and values differ in length");
  if (pins.size() != basis.size()) throw FitError("fit: one pin slot per basis function");
  const auto rows = static_cast<Eigen::Index>(grid.size());

  std::vector<std::size_t> free_cols;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!pins[k]) free_cols.push_back(k);
  }
  if (rows < static_cast<Eigen::Index>(free_cols.size())) {
    throw FitError("fit: fewer grid points than free coefficients");
  }

  Eigen::VectorXd rhs(rows);
  Eigen::MatrixXd design(rows, static_cast<Eigen::Index>(free_cols.size()));
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double g = grid[static_cast<std::size_t>(i)];
    double y = values[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (pins[k]) y -= *pins[k] * basis[k](g);
    }
    rhs(i) = y;
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      design(i, static_cast<Eigen::Index>(j)) = basis[free_cols[j]](g);
    }
  }

  // Column equilibration keeps log-polynomial designs well scaled.
  Eigen::VectorXd scale = Eigen::VectorXd::Ones(design.cols());
  for (Eigen::Index j = 0; j < design.cols(); ++j) {
    const double n = design.col(j).norm();
    if (n > 0.0) {
      scale(j) = n;
      design.col(j) /= n;
    }
  }
  Eigen::VectorXd sol = Eigen::VectorXd::Zero(design.cols());
  if (design.cols() > 0) sol = design.colPivHouseholderQr().solve(rhs);

  FitReport report;
  report.model = std::move(model);
  report.grid.assign(grid.begin(), grid.end());
  report.coefficients.resize(basis.size());
  report.pinned.resize(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    report.pinned[k] = pins[k].has_value();
    if (pins[k]) report.coefficients[k] = *pins[k];
  }
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    report.coefficients[free_cols[j]] =
        sol(static_cast<Eigen::Index>(j)) / scale(static_cast<Eigen::Index>(j));
  }

  double ss = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double fitted = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      fitted += report.coefficients[k] * basis[k](grid[i]);
    }
    const double r = values[i] - fitted;
    ss += r * r;
  }
  report.residual_norm = grid.empty() ? 0.0 : std::sqrt(ss / static_cast<double>(grid.size()));
  return report;
}

FitReport fit_polynomial(std::string model, std::span<const double> grid,
                         std::span<const double> values, int degree,
                         std::span<const std::optional<double>> pins,
                         const std::function<double(double)>& transform) {
  if (degree < 0) throw FitError("fit_polynomial: negative degree");
  std::vector<BasisFunction> basis;
  for (int k = 0; k <= degree; ++k) {
    const int power = degree - k;
    basis.emplace_back([power, &transform](double g) { return std::pow(transform(g), power); });
  }
  return fit_linear_model(std::move(model), grid, values, basis, pins);
}

double polyval_desc(std::span<const double> coefficients, double u) {
  double acc = 0.0;
  for (double c : coefficients) acc = acc * u + c;
  return acc;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw FitError("loglog_slope: need two or more points");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw FitError("loglog_slope: non-positive input");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace latlab
