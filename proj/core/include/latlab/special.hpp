#pragma once

#include <complex>

// Real Bessel functions of order 0 and 1, complex Gamma and the zeta
// functional-equation factor chi(s).
namespace latlab::special {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// Branch cutoffs. Below `*_series_cutoff` the power series is used, above it
// the asymptotic expansion (K1 uses Steed's continued fraction between its two
// cutoffs). Asymptotic sums stop at the smallest term or `asymptotic_terms`.
struct SwitchPolicy {
  double j1_series_cutoff = 18.0;
  double y1_series_cutoff = 18.0;
  double i_series_cutoff = 18.0;
  double k1_series_cutoff = 2.0;
  double k1_asymptotic_cutoff = 25.0;
  int asymptotic_terms = 40;
};

inline const SwitchPolicy kDefaultPolicy{};

double bessel_j1(double x, const SwitchPolicy& policy = kDefaultPolicy);
double bessel_y1(double x, const SwitchPolicy& policy = kDefaultPolicy);
double bessel_k1(double x, const SwitchPolicy& policy = kDefaultPolicy);
double bessel_i0(double x, const SwitchPolicy& policy = kDefaultPolicy);
double bessel_i1(double x, const SwitchPolicy& policy = kDefaultPolicy);

// e^{-x} I_nu(x), finite for any x >= 0.
double bessel_i0_scaled(double x, const SwitchPolicy& policy = kDefaultPolicy);
double bessel_i1_scaled(double x, const SwitchPolicy& policy = kDefaultPolicy);

// Individual branches, exposed so overlap windows can be tested directly.
namespace branch {
double j1_series(double x);
double j1_asymptotic(double x, int max_terms);
double y1_series(double x);
double y1_asymptotic(double x, int max_terms);
double k1_series(double x);
double k1_continued_fraction(double x);
double k1_asymptotic(double x, int max_terms);
// e^{-x} I_nu(x) by series / asymptotic expansion, nu in {0, 1}.
double i_scaled_series(int nu, double x);
double i_scaled_asymptotic(int nu, double x, int max_terms);
}  // namespace branch

// The three-term expansion e^x / sqrt(2 pi x) (1 - (4nu^2-1)/(8x) + (4nu^2-1)(4nu^2-9)/(128x^2)).
double bessel_i_three_term(int nu, double x);

// log Gamma(s) on a branch whose exponential is Gamma(s). Throws DomainError at
// non-positive integers.
std::complex<double> log_gamma(std::complex<double> s);
std::complex<double> gamma_complex(std::complex<double> s);

// log sin(pi z), stable for large |Im z|.
std::complex<double> log_sin_pi(std::complex<double> z);

// chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s), evaluated in log space.
// Throws DomainError at the poles s = 1, 3, 5, ...
std::complex<double> log_chi(std::complex<double> s);
std::complex<double> chi(std::complex<double> s);

// (2 pi / t)^{sigma + i t - 1/2} e^{i t + i pi / 4}, the large-t form of chi.
std::complex<double> chi_asymptotic(std::complex<double> s);

}  // namespace latlab::special
