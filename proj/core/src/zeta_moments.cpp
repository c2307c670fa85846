#include <cmath>
#include <numbers>

#include "latlab/error.hpp"
#include "latlab/frozen.hpp"
#include "latlab/parallel.hpp"
#include "latlab/special.hpp"
#include "latlab/zeta.hpp"

namespace latlab::zeta {

double panel_width(double t, double panel_scale) {
  // |zeta|^2 oscillates on the zero-spacing scale 2 pi / log t; below t ~ 535
  // that exceeds 1, so the width is capped there.
  const double scale = 2.0 * std::numbers::pi / std::max(std::log(std::max(t, 1.0)), 2.0 * std::numbers::pi);
  return panel_scale * scale;
}

double zeta_envelope(double t) {
  const double tt = std::max(t, 3.0);
  return 0.63 * std::pow(tt, 1.0 / 6.0) * std::log(tt);
}

CriticalLineSamples sample_critical_line(std::span<const double> breakpoints,
                                         const QuadratureConfig& quad) {
  if (!(quad.panel_scale > 0.0) || quad.nodes_per_panel < 2) {
    throw DomainError("sample_critical_line: bad quadrature configuration");
  }
  const auto& rule = gauss_legendre(quad.nodes_per_panel);
  CriticalLineSamples out;
  double a = 0.0;
  for (double b : breakpoints) {
    if (!(b > a)) throw DomainError("sample_critical_line: breakpoints must be positive and increasing");
    double x = a;
    while (x < b) {
      const double w = panel_width(x, quad.panel_scale);
      double next = x + w;
      if (next > b - 0.25 * w) next = b;
      const double half = 0.5 * (next - x);
      const double mid = 0.5 * (next + x);
      for (int i = 0; i < rule.size(); ++i) {
        out.t.push_back(mid + half * rule.nodes()[static_cast<std::size_t>(i)]);
        out.weight.push_back(half * rule.weights()[static_cast<std::size_t>(i)]);
      }
      x = next;
    }
    out.breakpoints.push_back(b);
    out.break_index.push_back(out.t.size());
    a = b;
  }
  out.abs2.resize(out.t.size());
  constexpr std::size_t kChunk = 2048;
  const std::size_t chunks = (out.t.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, quad.threads, [&](std::size_t c) {
    quad.deadline.check("critical-line sampling");
    const std::size_t hi = std::min(out.t.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < hi; ++i) out.abs2[i] = zeta_abs2_critical(out.t[i]);
  });
  return out;
}

std::vector<double> cumulative_moment(const CriticalLineSamples& samples, int k) {
  if (k != 1 && k != 2) throw DomainError("cumulative_moment: k must be 1 or 2");
  std::vector<double> out;
  out.reserve(samples.break_index.size());
  double acc = 0.0;
  std::size_t i = 0;
  for (std::size_t end : samples.break_index) {
    for (; i < end; ++i) {
      const double v = samples.abs2[i];
      acc += samples.weight[i] * (k == 1 ? v : v * v);
    }
    out.push_back(acc);
  }
  return out;
}

double moment_I1_main(double T) {
  return T * (std::log(T / (2.0 * std::numbers::pi)) + 2.0 * special::kEulerGamma - 1.0);
}

double moment_I2_main(double T, const FitReport& coefficients) {
  return T * polyval_desc(coefficients.coefficients, std::log(T));
}

double moment_I2_main(double T) { return moment_I2_main(T, frozen::moment_i2()); }

namespace {

double main_term(int k, double T) { return k == 1 ? moment_I1_main(T) : moment_I2_main(T); }

MomentReport refined_moment(int k, double T, const QuadratureConfig& quad) {
  if (!(T >= 10.0)) throw DomainError("moment: requires T >= 10");
  const double bp[] = {T};
  const double coarse = cumulative_moment(sample_critical_line(bp, quad), k).back();
  QuadratureConfig fine = quad;
  fine.panel_scale = 0.5 * quad.panel_scale;
  const double refined = cumulative_moment(sample_critical_line(bp, fine), k).back();
  MomentReport r;
  r.T = T;
  r.k = k;
  r.I_value = refined;
  r.main_term = main_term(k, T);
  r.error_term = r.I_value - r.main_term;
  r.quadrature_change = std::abs(refined - coarse);
  if (r.quadrature_change > quad.refine_tol * std::abs(refined)) {
    throw ConvergenceError("moment: panel refinement changed I_" + std::to_string(k) + "(" +
                           std::to_string(T) + ") by " + std::to_string(r.quadrature_change));
  }
  return r;
}

}  // namespace

MomentReport moment_I1(double T, const QuadratureConfig& quad) { return refined_moment(1, T, quad); }

MomentReport moment_I2(double T, const QuadratureConfig& quad) { return refined_moment(2, T, quad); }

std::vector<MomentReport> moment_sweep(int k, std::span<const double> T_grid,
                                       const QuadratureConfig& quad) {
  for (double T : T_grid) {
    if (!(T >= 10.0)) throw DomainError("moment_sweep: requires T >= 10");
  }
  const auto samples = sample_critical_line(T_grid, quad);
  const auto cum = cumulative_moment(samples, k);
  std::vector<MomentReport> out;
  for (std::size_t i = 0; i < T_grid.size(); ++i) {
    MomentReport r;
    r.T = T_grid[i];
    r.k = k;
    r.I_value = cum[i];
    r.main_term = main_term(k, r.T);
    r.error_term = r.I_value - r.main_term;
    out.push_back(r);
  }
  return out;
}

}  // namespace latlab::zeta
