#include "latlab/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "latlab/error.hpp"

namespace latlab::special {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-17;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be positive and finite");
  }
}

// Hankel P and Q for order nu: P = sum (-1)^k a_{2k}/x^{2k}, Q = sum (-1)^k a_{2k+1}/x^{2k+1},
// a_k = prod_{j=1..k} (mu - (2j-1)^2) / (k! 8^k), mu = 4 nu^2.
void hankel_pq(int nu, double x, int max_terms, double& p, double& q) {
  const double mu = 4.0 * nu * nu;
  p = 1.0;
  q = 0.0;
  double term = 1.0;
  double prev = INFINITY;
  for (int k = 1; k <= max_terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > prev || mag == 0.0) break;
    prev = mag;
    // k = 1 -> Q gets +a1/x; k = 2 -> P gets -a2/x^2; k = 3 -> Q gets -a3/x^3; ...
    const int r = k % 4;
    if (r == 1) q += term;
    if (r == 2) p -= term;
    if (r == 3) q -= term;
    if (r == 0) p += term;
    if (mag < kEps) break;
  }
}

// cos(x - 3 pi / 4) and sin(x - 3 pi / 4) without rounding 3 pi / 4 into x.
void phase(double x, double& c, double& s) {
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  c = (sx - cx) * std::numbers::sqrt2 * 0.5;
  s = -(sx + cx) * std::numbers::sqrt2 * 0.5;
}

// sum_{k>=0} (-sign)^k (x^2/4)^k / (k! (k+nu)!) in long double; sign = +1 for J, -1 for I.
long double small_series(int nu, long double x, int sign, long double* harmonic_sum) {
  const long double y = x * x / 4.0L;
  long double term = 1.0L;
  for (int j = 1; j <= nu; ++j) term /= j;
  long double sum = term;
  long double hsum = 0.0L;
  long double hk = 0.0L, hk1 = 0.0L;  // H_k, H_{k+1}
  for (int j = 1; j <= nu; ++j) hk1 += 1.0L / j;
  if (harmonic_sum) hsum = term * (hk + hk1);
  for (int k = 1; k < 500; ++k) {
    term *= (sign > 0 ? -y : y) / (static_cast<long double>(k) * (k + nu));
    hk += 1.0L / k;
    hk1 += 1.0L / (k + nu);
    sum += term;
    if (harmonic_sum) hsum += term * (hk + hk1);
    if (std::abs(term) < 1e-22L * std::abs(sum) && k > 2) break;
  }
  if (harmonic_sum) *harmonic_sum = hsum;
  return sum;
}

}  // namespace

namespace branch {

double j1_series(double x) {
  const long double s = small_series(1, x, +1, nullptr);
  return static_cast<double>(s * x / 2.0L);
}

double j1_asymptotic(double x, int max_terms) {
  require_positive(x, "j1_asymptotic");
  double p, q, c, s;
  hankel_pq(1, x, max_terms, p, q);
  phase(x, c, s);
  return std::sqrt(2.0 / (kPi * x)) * (p * c - q * s);
}

// Y1 = (2/pi) J1 log(x/2) - 2/(pi x)
//      - (1/pi) sum (-1)^k [psi(k+1) + psi(k+2)] (x/2)^{2k+1} / (k! (k+1)!)
// with psi(k+1) + psi(k+2) = H_k + H_{k+1} - 2 gamma.
double y1_series(double x) {
  require_positive(x, "y1_series");
  const long double lx = x;
  long double hs = 0.0L;
  const long double plain = small_series(1, lx, +1, &hs);
  const long double half = lx / 2.0L;
  const long double pi = std::numbers::pi_v<long double>;
  const long double j1 = plain * half;
  const long double psi_sum = (hs - 2.0L * static_cast<long double>(kEulerGamma) * plain) * half;
  const long double y = (2.0L / pi) * j1 * std::log(half) - 2.0L / (pi * lx) - psi_sum / pi;
  return static_cast<double>(y);
}

double y1_asymptotic(double x, int max_terms) {
  require_positive(x, "y1_asymptotic");
  double p, q, c, s;
  hankel_pq(1, x, max_terms, p, q);
  phase(x, c, s);
  return std::sqrt(2.0 / (kPi * x)) * (p * s + q * c);
}

// K1 = 1/x + log(x/2) I1 - (x/4) sum [psi(k+1) + psi(k+2)] (x^2/4)^k / (k! (k+1)!)
double k1_series(double x) {
  require_positive(x, "k1_series");
  const long double lx = x;
  long double hs = 0.0L;
  const long double plain = small_series(1, lx, -1, &hs);
  const long double i1 = plain * lx / 2.0L;
  const long double psi_sum = hs - 2.0L * static_cast<long double>(kEulerGamma) * plain;
  const long double k = 1.0L / lx + std::log(lx / 2.0L) * i1 - lx / 4.0L * psi_sum;
  return static_cast<double>(k);
}

// Steed's method on Temme's CF2 for K_0 and K_1 (mu = 0).
double k1_continued_fraction(double x) {
  require_positive(x, "k1_continued_fraction");
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25;
  double q = a1, c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i <= 100000; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 1e-16) break;
  }
  if (i > 100000) throw ConvergenceError("k1_continued_fraction: no convergence");
  h *= a1;
  const double k0 = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
  return k0 * (x + 0.5 - h) / x;
}

// K1 ~ sqrt(pi / 2x) e^{-x} sum a_k / x^k
double k1_asymptotic(double x, int max_terms) {
  require_positive(x, "k1_asymptotic");
  const double mu = 4.0;
  double term = 1.0, sum = 1.0, prev = INFINITY;
  for (int k = 1; k <= max_terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > prev || mag == 0.0) break;
    prev = mag;
    sum += term;
    if (mag < kEps) break;
  }
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

double i_scaled_series(int nu, double x) {
  const long double lx = x;
  long double s = small_series(nu, lx, -1, nullptr);
  if (nu == 1) s *= lx / 2.0L;
  return static_cast<double>(s * std::exp(-lx));
}

// I_nu ~ e^x / sqrt(2 pi x) sum (-1)^k a_k / x^k
double i_scaled_asymptotic(int nu, double x, int max_terms) {
  require_positive(x, "i_scaled_asymptotic");
  const double mu = 4.0 * nu * nu;
  double term = 1.0, sum = 1.0, prev = INFINITY;
  for (int k = 1; k <= max_terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > prev || mag == 0.0) break;
    prev = mag;
    sum += term;
    if (mag < kEps) break;
  }
  return sum / std::sqrt(2.0 * kPi * x);
}

}  // namespace branch

double bessel_j1(double x, const SwitchPolicy& policy) {
  if (!std::isfinite(x)) throw DomainError("bessel_j1: non-finite argument");
  if (x < 0.0) return -bessel_j1(-x, policy);
  if (x <= policy.j1_series_cutoff) return branch::j1_series(x);
  return branch::j1_asymptotic(x, policy.asymptotic_terms);
}

double bessel_y1(double x, const SwitchPolicy& policy) {
  require_positive(x, "bessel_y1");
  if (x <= policy.y1_series_cutoff) return branch::y1_series(x);
  return branch::y1_asymptotic(x, policy.asymptotic_terms);
}

double bessel_k1(double x, const SwitchPolicy& policy) {
  require_positive(x, "bessel_k1");
  if (x <= policy.k1_series_cutoff) return branch::k1_series(x);
  if (x <= policy.k1_asymptotic_cutoff) return branch::k1_continued_fraction(x);
  return branch::k1_asymptotic(x, policy.asymptotic_terms);
}

double bessel_i0_scaled(double x, const SwitchPolicy& policy) {
  if (!std::isfinite(x)) throw DomainError("bessel_i0_scaled: non-finite argument");
  x = std::abs(x);
  if (x <= policy.i_series_cutoff) return branch::i_scaled_series(0, x);
  return branch::i_scaled_asymptotic(0, x, policy.asymptotic_terms);
}

double bessel_i1_scaled(double x, const SwitchPolicy& policy) {
  if (!std::isfinite(x)) throw DomainError("bessel_i1_scaled: non-finite argument");
  if (x < 0.0) return -bessel_i1_scaled(-x, policy);
  if (x <= policy.i_series_cutoff) return branch::i_scaled_series(1, x);
  return branch::i_scaled_asymptotic(1, x, policy.asymptotic_terms);
}

double bessel_i0(double x, const SwitchPolicy& policy) {
  const double v = bessel_i0_scaled(x, policy);
  if (std::abs(x) > 700.0) throw RangeError("bessel_i0: overflow, use bessel_i0_scaled");
  return v * std::exp(std::abs(x));
}

double bessel_i1(double x, const SwitchPolicy& policy) {
  const double v = bessel_i1_scaled(x, policy);
  if (std::abs(x) > 700.0) throw RangeError("bessel_i1: overflow, use bessel_i1_scaled");
  return v * std::exp(std::abs(x));
}

double bessel_i_three_term(int nu, double x) {
  require_positive(x, "bessel_i_three_term");
  const double mu = 4.0 * nu * nu;
  const double corr = 1.0 - (mu - 1.0) / (8.0 * x) + (mu - 1.0) * (mu - 9.0) / (128.0 * x * x);
  return std::exp(x) / std::sqrt(2.0 * kPi * x) * corr;
}

cplx log_sin_pi(cplx z) {
  const double y = z.imag();
  const cplx i(0.0, 1.0);
  if (std::abs(y) < 15.0) return std::log(std::sin(kPi * z));
  if (y > 0.0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z})
    return cplx(-std::numbers::ln2, kPi / 2) - i * kPi * z + std::log(1.0 - std::exp(2.0 * kPi * i * z));
  }
  // sin(pi z) = (-i/2) e^{i pi z} (1 - e^{-2 pi i z})
  return cplx(-std::numbers::ln2, -kPi / 2) + i * kPi * z + std::log(1.0 - std::exp(-2.0 * kPi * i * z));
}

namespace {

bool is_nonpositive_integer(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real();
}

// B_{2k} / (2k (2k - 1)), k = 1..10
constexpr double kStirling[] = {
    1.0 / 12.0,           -1.0 / 360.0,           1.0 / 1260.0,      -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0,      1.0 / 156.0,       -3617.0 / 122400.0,
    43867.0 / 244188.0,   -174611.0 / 125400.0,
};

cplx log_gamma_right(cplx s) {
  // Shift to |s| >= 15 where the Stirling series above is accurate to 1e-16.
  cplx prod(1.0, 0.0);
  double shift_log = 0.0;
  while (std::abs(s) < 15.0 || s.real() < 0.5) {
    prod *= s;
    // Renormalise to keep the running product in range.
    const double m = std::abs(prod);
    if (m > 1e100 || m < 1e-100) {
      shift_log += std::log(m);
      prod /= m;
    }
    s += 1.0;
  }
  const cplx inv = 1.0 / s;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx pw = inv;
  for (double c : kStirling) {
    series += c * pw;
    pw *= inv2;
  }
  const cplx stirling =
      (s - 0.5) * std::log(s) - s + 0.5 * std::log(2.0 * kPi) + series;
  return stirling - std::log(prod) - shift_log;
}

}  // namespace

cplx log_gamma(cplx s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (is_nonpositive_integer(s)) throw DomainError("log_gamma: pole at non-positive integer");
  if (s.real() < 0.5) {
    // Gamma(s) Gamma(1 - s) = pi / sin(pi s)
    return std::log(kPi) - log_sin_pi(s) - log_gamma_right(1.0 - s);
  }
  return log_gamma_right(s);
}

cplx gamma_complex(cplx s) { return std::exp(log_gamma(s)); }

namespace {

// Distance from s to the nearest positive even integer, where sin(pi s/2) and
// Gamma(1 - s) have a cancelling zero/pole pair.
double distance_to_even(cplx s) {
  if (s.real() < 1.0) return INFINITY;
  const double k = 2.0 * std::round(s.real() / 2.0);
  if (k < 2.0) return INFINITY;
  return std::abs(s - k);
}

}  // namespace

cplx log_chi(cplx s) {
  if (s.imag() == 0.0 && s.real() >= 1.0 && std::floor(s.real()) == s.real() &&
      static_cast<long long>(s.real()) % 2 == 1) {
    throw DomainError("chi: pole at s = " + std::to_string(static_cast<long long>(s.real())));
  }
  if (distance_to_even(s) < 0.25) {
    // pi^{s - 1/2} Gamma((1 - s)/2) / Gamma(s/2) is regular there.
    return (s - 0.5) * std::log(kPi) + log_gamma((1.0 - s) / 2.0) - log_gamma(s / 2.0);
  }
  const cplx one_minus = 1.0 - s;
  if (is_nonpositive_integer(one_minus)) throw DomainError("chi: pole");
  return s * std::numbers::ln2 + (s - 1.0) * std::log(kPi) + log_sin_pi(s / 2.0) +
         log_gamma(one_minus);
}

cplx chi(cplx s) {
  // Trivial zeros s = 0, -2, -4, ...: sin(pi s / 2) vanishes exactly.
  if (s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real() / 2.0) * 2.0 == s.real()) {
    return 0.0;
  }
  return std::exp(log_chi(s));
}

cplx chi_asymptotic(cplx s) {
  const double t = s.imag();
  if (!(t > 0.0)) throw DomainError("chi_asymptotic: requires Im s > 0");
  const cplx i(0.0, 1.0);
  const cplx expo = (s - 0.5) * std::log(2.0 * kPi / t) + i * (t + kPi / 4.0);
  return std::exp(expo);
}

}  // namespace latlab::special
