#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latlab/arith.hpp"
#include "latlab/fit.hpp"
#include "latlab/quadrature.hpp"
#include "latlab/zeta.hpp"

// Laplace transforms: closed-form identities, the mean-square transforms of
// P and Delta, transforms of |zeta(1/2 + ix)|^{2k}, and the Mellin inversion of Gamma.
namespace latlab::laplace {

enum class LaplaceMethod { exact_piecewise, panel_quadrature, closed_form, series };
const char* to_string(LaplaceMethod m);

struct LaplaceEstimate {
  std::complex<double> parameter;
  std::complex<double> value;
  // Truncation point of the integral or series (last index for series).
  double horizon = 0.0;
  // Bound on the discarded tail.
  double tail_bound = 0.0;
  LaplaceMethod method = LaplaceMethod::closed_form;
};

// int_H^inf C x^alpha (log x)^beta e^{-s x} dx for H > e, bounded by
// g(H) e^{-sH} / (s - alpha/H - beta/(H log H)). Infinite if the denominator is not positive.
double envelope_tail(double s, double H, double C, double alpha, double beta);

// ---- Closed forms ------------------------------------------------------------

// pi s^{-2} sum r(n) e^{-pi^2 n / s}, summed until the tail bound is below tol.
// Throws RangeError if the sieve runs out first.
LaplaceEstimate laplace_P_closed(double s, const arith::SieveTable& table, double tol);
// int_0^{H} e^{-sx} P(x) dx exactly piecewise, H = horizon_factor / s.
LaplaceEstimate laplace_P_exact(double s, const arith::SieveTable& table,
                                double horizon_factor = 40.0);

// int_0^inf e^{-sx} x^{nu/2} J_nu(2 sqrt(a x)) dx = e^{-a/s} a^{nu/2} s^{-nu-1}, nu in {0, 1}.
double laplace_bessel_single(int nu, double a, double s);

// int_0^inf e^{-st} t J1(a sqrt t) J1(b sqrt t) dt
//   = e^{-(a^2+b^2)/4s} / (4 s^3) (2ab I0(ab/2s) - (a^2+b^2) I1(ab/2s)),
// evaluated with the exponentials combined as e^{-(a-b)^2/4s} times scaled I_nu.
double bessel_product_laplace(double a, double b, double s);

// ---- Constants ---------------------------------------------------------------

enum class ConstantKind { r_squared, d_squared };

// sum_n f(n)^2 n^{-3/2} with f = r or d: direct sum to the sieve limit N plus an
// Abel-summation tail from a least-squares model of S(x) = sum_{n<=x} f(n)^2
// (x (a log x + b) for r, x times a cubic in log x for d) fitted on [N/10, N].
struct ConstantSeries {
  double value = 0.0;
  double direct_part = 0.0;
  double tail_estimate = 0.0;
  // 5 max_{[N/2, N]} |S - model| N^{-3/2} (the Abel tail error if the model
  // error grows no faster than sqrt(x), with a factor 2 of slack) plus twice the
  // change in the tail when the fit window shrinks to [N/5, N].
  double tail_bound = 0.0;
  std::uint64_t n_max = 0;
};
ConstantSeries constant_series(ConstantKind kind, const arith::SieveTable& table);

// ---- Mean-square transforms --------------------------------------------------

struct TheoremCheck {
  double T = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs
  double tail_bound = 0.0;
  double horizon = 0.0;
};

// lhs = int_0^{H} P(x)^2 e^{-x/T} dx exactly piecewise, H = horizon_factor T;
// rhs = (1/4)(T/pi)^{3/2} sum r^2(n) n^{-3/2} - T.
TheoremCheck verify_theorem4(double T, const arith::SieveTable& table, const ConstantSeries& c,
                             double horizon_factor = 40.0);
// The same lhs by 10-point Gauss-Legendre per unit interval.
double theorem4_lhs_quadrature(double T, const arith::SieveTable& table,
                               double horizon_factor = 40.0);

// int_0^{H} Delta(x)^2 e^{-x/T} dx by 16-point Gauss-Legendre per unit interval.
double theorem5_lhs(double T, const arith::SieveTable& table, double horizon_factor = 40.0);
// (1/8)(T/pi)^{3/2} sum d^2(n) n^{-3/2}
double theorem5_leading(double T, const ConstantSeries& c);
// rhs = leading - T P2(log T). Throws FitError unless p2's leading coefficient is positive.
TheoremCheck verify_theorem5(double T, const arith::SieveTable& table, const ConstantSeries& c,
                             const FitReport& p2, double horizon_factor = 40.0);
// Least-squares quadratic P2 with (leading - lhs) / T = P2(log T) on the grid.
FitReport fit_theorem5_p2(std::span<const double> T_grid, const arith::SieveTable& table,
                          const ConstantSeries& c, double horizon_factor = 40.0);

// ---- Transforms of |zeta|^{2k} -----------------------------------------------

// L_k(s) = int_0^inf |zeta(1/2 + ix)|^{2k} e^{-sx} dx from precomputed samples,
// truncated at the last sample breakpoint, with an envelope tail bound.
LaplaceEstimate laplace_moment(const zeta::CriticalLineSamples& samples, int k, double s);
// Samples to horizon_factor / s first.
LaplaceEstimate laplace_moment(int k, double s, const QuadratureConfig& quad);

struct KoberPoint {
  double sigma = 0.0;
  double l1 = 0.0;       // L_1(2 sigma)
  double leading = 0.0;  // (gamma - log(4 pi sigma)) / (2 sin sigma)
  double defect = 0.0;   // l1 - leading
  double tail_bound = 0.0;
};
KoberPoint kober_check(double sigma, const QuadratureConfig& quad);
std::vector<KoberPoint> kober_sweep(std::span<const double> sigmas, const QuadratureConfig& quad);

struct JutilaPoint {
  double s = 0.0;
  std::complex<double> l1;
  std::complex<double> main_expr;
  std::complex<double> lambda1;
  double series_tail_bound = 0.0;
  double quadrature_tail_bound = 0.0;
  std::uint64_t series_terms = 0;
};
// main_expr = -i e^{is/2} (log 2 pi - gamma + (pi/2 - s) i)
//             + 2 pi e^{-is/2} sum d(n) exp(-2 pi i n e^{-is}).
// Requires 0.05 <= s <= 3.
JutilaPoint jutila_theorem6(double s, const arith::SieveTable& table, const QuadratureConfig& quad);
std::vector<JutilaPoint> jutila_sweep(std::span<const double> s_values,
                                      const arith::SieveTable& table, const QuadratureConfig& quad);

// A = 1/(2 pi^2); B = (2 log 2 pi - 6 gamma + 24 zeta'(2)/pi^2) / pi^2.
double atkinson_A();
double atkinson_B();

struct AtkinsonReport {
  std::vector<LaplaceEstimate> values;  // L_2(sigma) per grid point
  FitReport pinned;                     // A fixed
  FitReport unpinned;
  double B_formula = 0.0;
};
// Fits sigma L_2(sigma) to a quartic in log(1/sigma). sigma in [1/3000, 1/200].
AtkinsonReport atkinson_L2(std::span<const double> sigma_grid, const QuadratureConfig& quad);

// ---- Sandwich and converse identity -------------------------------------------

struct LkPoint {
  double T = 0.0;
  int k = 1;
  double I = 0.0;           // I_k(T)
  double L = 0.0;           // L_k(1/T)
  double converse = 0.0;    // (1/T) int_0^H I_k(t) e^{-t/T} dt
  double tail_bound = 0.0;  // combined tail bound of L and the converse integral
  bool sandwich = false;    // I <= e L
};
// One sweep covers every T: samples to horizon_factor * max(T).
std::vector<LkPoint> lk_bound_diagnostic(int k, std::span<const double> T_grid,
                                         const QuadratureConfig& quad);

// ---- Mellin inversion --------------------------------------------------------

struct MellinResult {
  double residual = 0.0;  // |e^{-z} - (1/2 pi i) int_{c-iH}^{c+iH} Gamma(s) z^{-s} ds|
  double height = 0.0;    // H
  std::complex<double> integral;
};
// H grows until the integrand modulus falls below 1e-16 relative to its peak;
// BudgetError past H = 1e4.
MellinResult mellin_gamma_check(std::complex<double> z, double c, const QuadratureConfig& quad);

// ---- Reports -----------------------------------------------------------------

// Columns parameter, lhs, rhs, residual, tail_bound.
std::string to_csv(std::span<const TheoremCheck> rows);

}  // namespace latlab::laplace
