#pragma once

#include <string>
#include <vector>

#include "latlab/quadrature.hpp"

// The solution family F(t, w) = t^c exp(w^c t / h(w)) of the integral equation
// int_0^inf F(wt, w) / F(t, w) dt = h(w) / (1 - w), checked pointwise in w.
namespace latlab::funceq {

struct SolutionParams {
  double c = 0.0;       // exponent, c >= 0
  double w = 0.5;       // in (0, 1) or (1, inf)
  double h_of_w = 1.0;  // > 0 for w < 1, < 0 for w > 1
};

// Throws DomainError unless c >= 0, w > 0, w != 1 and sign(h) matches the branch.
void validate(const SolutionParams& p);

// F(t, w) itself, scaled by an arbitrary positive constant `scale`.
double solution(double t, const SolutionParams& p, double scale = 1.0);

// F(wt, w) / F(t, w) = w^c exp((w^c / h)(w - 1) t)
double ratio_integrand(double t, const SolutionParams& p);

struct Theorem3Result {
  SolutionParams params;
  double integral = 0.0;
  double target = 0.0;  // h / (1 - w)
  double residual = 0.0;
  double horizon = 0.0;
  double tail_bound = 0.0;
};

// Panel Gauss-Legendre over (0, H), H = horizon_factor h / (w^c |w - 1|);
// residual = |integral - target| + tail_bound.
Theorem3Result verify_theorem3(const SolutionParams& p, const QuadratureConfig& quad);

struct HaymanResult {
  double w = 0.0;
  double integral = 0.0;
  double target = 0.0;  // 1 / (1 - w)
  double residual = 0.0;
  double horizon = 0.0;
};
// int_0^inf e^{(w-1)t} dt against 1/(1 - w), horizon 40 / (1 - w).
HaymanResult hayman_check(double w, const QuadratureConfig& quad);

// c in {0, 1, 2.5} x w in {0.3, 0.5, 0.9} x h in {0.5, 1, 4}, plus the
// w > 1, h < 0 branch c in {0, 1, 3} x w in {1.5, 2} x h in {-0.5, -2}.
std::vector<SolutionParams> default_grid();

}  // namespace latlab::funceq
