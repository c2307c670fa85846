#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latlab/arith.hpp"
#include "latlab/fit.hpp"
#include "latlab/quadrature.hpp"

// Riemann zeta near the critical line and the moment integrals
// I_k(T) = int_0^T |zeta(1/2 + it)|^{2k} dt for k = 1, 2.
namespace latlab::zeta {

// Riemann-Siegel is used on the critical line from this height up.
inline constexpr double kRsSwitch = 50.0;

// Euler-Maclaurin: sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + Bernoulli
// corrections. N and the number of corrections grow until the next correction
// bounds the remainder below `precision_target`. Throws DomainError at s = 1
// and BudgetError when N would exceed `max_terms`.
std::complex<double> zeta_em(std::complex<double> s, double precision_target = 1e-10,
                             std::uint64_t max_terms = 4'000'000);

// theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi, by its asymptotic series (t >= 10).
double riemann_siegel_theta(double t);

// Hardy's Z(t) by the Riemann-Siegel main sum plus `corrections` terms
// C_0 .. C_{corrections-1} of the remainder (0..5). Requires t >= kRsSwitch.
double hardy_z(double t, int corrections = 5);

// |zeta(1/2 + it)| = |Z(t)| on the Riemann-Siegel path (all five corrections).
double zeta_rs_mod(double t);

// zeta(1/2 + it) for any real t: Euler-Maclaurin below kRsSwitch, Z(t) e^{-i theta(t)} above.
std::complex<double> zeta_critical(double t);
// |zeta(1/2 + it)|^2, the moment integrand.
double zeta_abs2_critical(double t);

// |zeta(s)^2 - sum_{n<=N} d(n) n^{-s}| for Re s > 1.
double dirichlet_square_check(std::complex<double> s, std::uint64_t n_max,
                              const arith::SieveTable& table);

// zeta'(2) = -sum log n / n^2 with an Euler-Maclaurin tail.
double zeta_prime_2();

enum class ZetaMethod { euler_maclaurin, riemann_siegel };
const char* to_string(ZetaMethod m);

struct ZetaGrid {
  std::vector<double> t_values;
  std::vector<std::complex<double>> z_values;
  std::vector<ZetaMethod> methods;
};

// zeta(1/2 + it) on a strictly increasing grid.
ZetaGrid zeta_grid(std::span<const double> t_values, int threads = 1);
// Columns t, re, im, abs, method.
std::string to_csv(const ZetaGrid& grid);

// Quadrature nodes of int_0^{upper} on the critical line. Panel boundaries
// include every breakpoint; widths follow the oscillation scale 2 pi / log t.
struct CriticalLineSamples {
  std::vector<double> t;
  std::vector<double> weight;
  std::vector<double> abs2;  // |zeta(1/2 + it)|^2
  std::vector<double> breakpoints;
  // Index into t/weight/abs2 where each breakpoint's interval ends.
  std::vector<std::size_t> break_index;
};

double panel_width(double t, double panel_scale);

// `breakpoints` sorted, positive. Integration starts at 0.
CriticalLineSamples sample_critical_line(std::span<const double> breakpoints,
                                         const QuadratureConfig& quad);

// int_0^{breakpoints[j]} |zeta|^{2k} for every breakpoint, k in {1, 2}.
std::vector<double> cumulative_moment(const CriticalLineSamples& samples, int k);

// Envelope |zeta(1/2 + it)| <= 0.63 t^{1/6} log t (t >= 3) used for tail bounds.
double zeta_envelope(double t);

struct MomentReport {
  double T = 0.0;
  int k = 1;
  double I_value = 0.0;
  double main_term = 0.0;
  double error_term = 0.0;  // I_value - main_term
  // Difference between the panel scheme and its half-width refinement.
  double quadrature_change = 0.0;
};

// T (log(T / 2 pi) + 2 gamma - 1)
double moment_I1_main(double T);
// (a0 log^4 T + ... + a4) T with the frozen coefficients.
double moment_I2_main(double T);
double moment_I2_main(double T, const FitReport& coefficients);

// Throws ConvergenceError when the refinement disagrees beyond quad.refine_tol
// (relative).
MomentReport moment_I1(double T, const QuadratureConfig& quad);
MomentReport moment_I2(double T, const QuadratureConfig& quad);

// Reports at every T of a sorted grid from one sweep (no refinement pass).
std::vector<MomentReport> moment_sweep(int k, std::span<const double> T_grid,
                                       const QuadratureConfig& quad);

}  // namespace latlab::zeta
