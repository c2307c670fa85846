#include "latlab/funceq.hpp"

#include <cmath>

#include "latlab/error.hpp"

namespace latlab::funceq {

void validate(const SolutionParams& p) {
  if (!(p.c >= 0.0) || !std::isfinite(p.c)) throw DomainError("funceq: c must be >= 0");
  if (!(p.w > 0.0) || p.w == 1.0 || !std::isfinite(p.w)) throw DomainError("funceq: w must be positive and != 1");
  if (p.w < 1.0 && !(p.h_of_w > 0.0)) throw DomainError("funceq: h(w) must be positive for w < 1");
  if (p.w > 1.0 && !(p.h_of_w < 0.0)) throw DomainError("funceq: h(w) must be negative for w > 1");
}

double solution(double t, const SolutionParams& p, double scale) {
  return scale * std::pow(t, p.c) * std::exp(std::pow(p.w, p.c) / p.h_of_w * t);
}

double ratio_integrand(double t, const SolutionParams& p) {
  validate(p);
  if (!(t >= 0.0)) throw DomainError("ratio_integrand: t must be non-negative");
  const double wc = std::pow(p.w, p.c);
  return wc * std::exp(wc / p.h_of_w * (p.w - 1.0) * t);
}

Theorem3Result verify_theorem3(const SolutionParams& p, const QuadratureConfig& quad) {
  validate(p);
  const double wc = std::pow(p.w, p.c);
  const double rate = wc * (1.0 - p.w) / p.h_of_w;  // > 0 on both branches
  Theorem3Result r;
  r.params = p;
  r.target = p.h_of_w / (1.0 - p.w);
  r.horizon = quad.horizon_factor / rate;
  const auto& rule = gauss_legendre(quad.nodes_per_panel);
  // The integrand decays by e^{-rate t}; panels of width 1/rate resolve it.
  r.integral = integrate_panels([&](double t) { return wc * std::exp(-rate * t); }, 0.0, r.horizon,
                                0.5 / rate, rule);
  r.tail_bound = wc * std::exp(-rate * r.horizon) / rate;
  r.residual = std::abs(r.integral - r.target) + r.tail_bound;
  return r;
}

HaymanResult hayman_check(double w, const QuadratureConfig& quad) {
  if (!(w > 0.0 && w < 1.0)) throw DomainError("hayman_check: w must lie in (0, 1)");
  HaymanResult r;
  r.w = w;
  r.target = 1.0 / (1.0 - w);
  r.horizon = quad.horizon_factor / (1.0 - w);
  const auto& rule = gauss_legendre(quad.nodes_per_panel);
  r.integral = integrate_panels([&](double t) { return std::exp((w - 1.0) * t); }, 0.0, r.horizon,
                                0.5 / (1.0 - w), rule);
  r.residual = std::abs(r.integral - r.target);
  return r;
}

std::vector<SolutionParams> default_grid() {
  std::vector<SolutionParams> g;
  for (double c : {0.0, 1.0, 2.5}) {
    for (double w : {0.3, 0.5, 0.9}) {
      for (double h : {0.5, 1.0, 4.0}) g.push_back({c, w, h});
    }
  }
  for (double c : {0.0, 1.0, 3.0}) {
    for (double w : {1.5, 2.0}) {
      for (double h : {-0.5, -2.0}) g.push_back({c, w, h});
    }
  }
  return g;
}

}  // namespace latlab::funceq
