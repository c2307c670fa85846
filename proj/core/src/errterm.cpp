#include "latlab/errterm.hpp"

#include <cmath>
#include <numbers>

#include "latlab/error.hpp"
#include "latlab/format.hpp"
#include "latlab/quadrature.hpp"
#include "latlab/special.hpp"

namespace latlab::errterm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGamma = special::kEulerGamma;

void check_x(double x, const arith::SieveTable& table, const char* what) {
  if (!(x > 0.0) || x > static_cast<double>(table.limit())) {
    throw RangeError(std::string(what) + ": x outside (0, sieve limit]");
  }
}

arith::Cutoff cutoff(double x, bool x_is_integer) {
  if (x_is_integer) {
    if (std::floor(x) != x) throw DomainError("x flagged integral but is not");
    return arith::Cutoff::integer(static_cast<std::uint64_t>(x));
  }
  return arith::Cutoff::real(x);
}

double delta_main(double x) { return x * (std::log(x) + 2.0 * kGamma - 1.0) + 0.25; }

// Delta on [k, k+1) given D_k = sum_{n<=k} d(n).
double delta_piece(double x, double dk) { return dk - delta_main(x); }

template <class Term>
ErrorTermSample series(double x, std::uint64_t N, Smoothing smoothing, const arith::SieveTable& table,
                       Term term) {
  if (!(x > 0.0)) throw DomainError("series: x must be positive");
  if (N < 2) throw DomainError("series: N must be >= 2");
  if (N > table.limit()) throw RangeError("series: N exceeds sieve limit");
  auto sum_to = [&](std::uint64_t n_max) {
    double s = 0.0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const double w = smoothing == Smoothing::smoothed ? taper(n, n_max) : 1.0;
      if (w != 0.0) s += w * term(n);
    }
    return s;
  };
  ErrorTermSample out;
  out.x = x;
  out.method = Method::series;
  out.terms_used = N;
  out.value = sum_to(N);
  out.truncation_estimate = std::abs(out.value - sum_to(N / 2));
  return out;
}

}  // namespace

const char* to_string(Method m) { return m == Method::direct ? "direct" : "series"; }

ErrorTermSample P_direct(double x, bool x_is_integer, const arith::SieveTable& table) {
  check_x(x, table, "P_direct");
  ErrorTermSample s;
  s.x = x;
  s.value = arith::summatory_r(cutoff(x, x_is_integer), table) - kPi * x + 1.0;
  return s;
}

ErrorTermSample Delta_direct(double x, bool x_is_integer, const arith::SieveTable& table) {
  check_x(x, table, "Delta_direct");
  ErrorTermSample s;
  s.x = x;
  s.value = arith::summatory_d(cutoff(x, x_is_integer), table) - delta_main(x);
  return s;
}

double taper(std::uint64_t n, std::uint64_t N) {
  if (n >= N) return 0.0;
  const double u = static_cast<double>(n) / static_cast<double>(N);
  return 1.0 - u + std::sin(2.0 * kPi * u) / (2.0 * kPi);
}

ErrorTermSample P_hardy(double x, std::uint64_t N, Smoothing smoothing, const arith::SieveTable& table) {
  const double sx = std::sqrt(x);
  auto s = series(x, N, smoothing, table, [&](std::uint64_t n) {
    const double r = table.r(n);
    if (r == 0.0) return 0.0;
    const double sn = std::sqrt(static_cast<double>(n));
    return r / sn * special::bessel_j1(2.0 * kPi * sx * sn);
  });
  s.value *= sx;
  s.truncation_estimate *= sx;
  return s;
}

ErrorTermSample Delta_voronoi(double x, std::uint64_t N, Smoothing smoothing,
                              const arith::SieveTable& table) {
  const double sx = std::sqrt(x);
  auto s = series(x, N, smoothing, table, [&](std::uint64_t n) {
    const double sn = std::sqrt(static_cast<double>(n));
    const double z = 4.0 * kPi * sx * sn;
    // K1 underflows to nothing long before it matters; skip it past z = 700.
    const double k1 = z < 700.0 ? special::bessel_k1(z) : 0.0;
    return table.d(n) / sn * (k1 + 0.5 * kPi * special::bessel_y1(z));
  });
  const double pre = -2.0 * sx / kPi;
  s.value *= pre;
  s.truncation_estimate *= std::abs(pre);
  return s;
}

double mean_square_direct(double T, Which which, const arith::SieveTable& table) {
  if (!(T > 0.0) || T > static_cast<double>(table.limit())) {
    throw RangeError("mean_square_direct: T outside (0, sieve limit]");
  }
  const auto last = static_cast<std::uint64_t>(std::floor(T));
  double total = 0.0;
  if (which == Which::P) {
    // On [k, k+1): P = c - pi x with c = R_k + 1, so int g^2 = (g(a)^3 - g(b)^3) / (3 pi).
    for (std::uint64_t k = 0; k <= last; ++k) {
      const double a = static_cast<double>(k);
      const double b = std::min(a + 1.0, T);
      if (!(b > a)) break;
      const double c = static_cast<double>(k == 0 ? 0 : table.r_prefix(k)) + 1.0;
      const double ga = c - kPi * a;
      const double gb = c - kPi * b;
      total += (ga * ga * ga - gb * gb * gb) / (3.0 * kPi);
    }
    return total;
  }
  const auto& rule = gauss_legendre(12);
  for (std::uint64_t k = 0; k <= last; ++k) {
    const double a = static_cast<double>(k);
    const double b = std::min(a + 1.0, T);
    if (!(b > a)) break;
    const double dk = static_cast<double>(k == 0 ? 0 : table.d_prefix(k));
    auto f = [&](double x) {
      const double v = delta_piece(x, dk);
      return v * v;
    };
    // x log x is not smooth at 0; the first interval gets the adaptive rule.
    total += k == 0 ? integrate_adaptive(f, a, b, 1e-13) : rule.integrate(f, a, b);
  }
  return total;
}

double mean_square_P_quadrature(double T, const arith::SieveTable& table) {
  if (!(T > 0.0) || T > static_cast<double>(table.limit())) {
    throw RangeError("mean_square_P_quadrature: T outside (0, sieve limit]");
  }
  const auto& rule = gauss_legendre(8);
  const auto last = static_cast<std::uint64_t>(std::floor(T));
  double total = 0.0;
  for (std::uint64_t k = 0; k <= last; ++k) {
    const double a = static_cast<double>(k);
    const double b = std::min(a + 1.0, T);
    if (!(b > a)) break;
    const double c = static_cast<double>(k == 0 ? 0 : table.r_prefix(k)) + 1.0;
    total += rule.integrate([&](double x) { return (c - kPi * x) * (c - kPi * x); }, a, b);
  }
  return total;
}

double mean_value_delta(double T, const arith::SieveTable& table) {
  if (!(T > 0.0) || T > static_cast<double>(table.limit())) {
    throw RangeError("mean_value_delta: T outside (0, sieve limit]");
  }
  // Antiderivative of x (log x + 2 gamma - 1) + 1/4 is x^2 log x / 2 + (gamma - 3/4) x^2 + x / 4.
  auto main_anti = [](double x) {
    if (x == 0.0) return 0.0;
    return 0.5 * x * x * std::log(x) + (kGamma - 0.75) * x * x + 0.25 * x;
  };
  const auto last = static_cast<std::uint64_t>(std::floor(T));
  double total = 0.0;
  for (std::uint64_t k = 1; k <= last; ++k) {
    const double b = std::min(static_cast<double>(k) + 1.0, T);
    total += static_cast<double>(table.d_prefix(k)) * (b - static_cast<double>(k));
  }
  total -= main_anti(T);
  return total / T;
}

std::string to_csv(std::span<const ErrorTermSample> samples) {
  CsvTable t;
  t.header = {"x", "method", "N", "value", "truncation_estimate"};
  for (const auto& s : samples) {
    t.rows.push_back({format_number(s.x), to_string(s.method), std::to_string(s.terms_used),
                      format_number(s.value), format_number(s.truncation_estimate)});
  }
  return t.str();
}

}  // namespace latlab::errterm
