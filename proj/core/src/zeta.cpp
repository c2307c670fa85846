#include "latlab/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "latlab/error.hpp"
#include "latlab/format.hpp"
#include "latlab/parallel.hpp"

namespace latlab::zeta {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

#include "rs_coefficients.inc"

constexpr int kBernoulliTerms = 40;

// B_{2k} / (2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}, k = 1..kBernoulliTerms.
const std::array<double, kBernoulliTerms + 1>& bernoulli_ratios() {
  static const auto table = [] {
    std::array<double, kBernoulliTerms + 1> b{};
    for (int k = 1; k <= kBernoulliTerms; ++k) {
      const int m = 2 * k;
      // zeta(m) by a short direct sum plus its own Euler-Maclaurin tail at n = 64.
      const double n0 = 64.0;
      double z = 0.0;
      for (int n = 63; n >= 1; --n) z += std::pow(n, -m);
      // Tail with three Bernoulli corrections; the next is below 1e-20 relative for m = 2.
      z += std::pow(n0, 1 - m) / (m - 1) + 0.5 * std::pow(n0, -m) + m / 12.0 * std::pow(n0, -m - 1) -
           m * (m + 1.0) * (m + 2.0) / 720.0 * std::pow(n0, -m - 3) +
           m * (m + 1.0) * (m + 2.0) * (m + 3.0) * (m + 4.0) / 30240.0 * std::pow(n0, -m - 5);
      const double mag = 2.0 * z * std::pow(2.0 * kPi, -m);
      b[static_cast<std::size_t>(k)] = (k % 2 == 1) ? mag : -mag;
    }
    return b;
  }();
  return table;
}

struct EmAttempt {
  cplx value;
  double bound;
};

EmAttempt em_with(cplx s, std::uint64_t n_cut, double target) {
  const auto& b = bernoulli_ratios();
  // Direct part, summed from the small terms upward.
  cplx sum = 0.0;
  for (std::uint64_t n = n_cut - 1; n >= 1; --n) {
    sum += std::exp(-s * std::log(static_cast<double>(n)));
  }
  const double ln = std::log(static_cast<double>(n_cut));
  const cplx n_pow = std::exp(-s * ln);  // N^{-s}
  sum += n_pow * static_cast<double>(n_cut) / (s - 1.0) + 0.5 * n_pow;

  // T_k = b_k s (s+1) ... (s+2k-2) N^{-s-2k+1}
  const double inv_n = 1.0 / static_cast<double>(n_cut);
  cplx poch = s;
  cplx power = n_pow * inv_n;
  double bound = INFINITY;
  for (int k = 1; k < kBernoulliTerms; ++k) {
    const cplx term = b[static_cast<std::size_t>(k)] * poch * power;
    // Next term's modulus times |s+2k+1|/(sigma+2k+1) bounds the remainder after k.
    const cplx next_poch = poch * (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    const cplx next_power = power * inv_n * inv_n;
    const double next = std::abs(b[static_cast<std::size_t>(k + 1)] * next_poch * next_power);
    const double denom = s.real() + 2.0 * k + 1.0;
    const double rem = denom > 0.0 ? next * std::abs(s + (2.0 * k + 1.0)) / denom : INFINITY;
    sum += term;
    bound = rem;
    if (rem < target) break;
    if (std::abs(term) < next) break;  // corrections started growing: larger N needed
    poch = next_poch;
    power = next_power;
  }
  return {sum, bound};
}

}  // namespace

cplx zeta_em(cplx s, double precision_target, std::uint64_t max_terms) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("zeta_em: non-finite s");
  if (s == cplx(1.0, 0.0)) throw DomainError("zeta_em: pole at s = 1");
  if (!(precision_target > 0.0)) throw DomainError("zeta_em: precision target must be positive");
  auto n_cut = static_cast<std::uint64_t>(std::max(12.0, std::ceil(0.5 * std::abs(s)) + 8.0));
  for (;;) {
    if (n_cut > max_terms) {
      throw BudgetError("zeta_em: term count " + std::to_string(n_cut) + " exceeds cap");
    }
    const auto attempt = em_with(s, n_cut, precision_target);
    if (attempt.bound < precision_target) return attempt.value;
    n_cut *= 2;
  }
}

double riemann_siegel_theta(double t) {
  if (!(t >= 10.0)) throw DomainError("riemann_siegel_theta: requires t >= 10");
  const double it = 1.0 / t;
  const double it2 = it * it;
  const double series =
      it * (1.0 / 48.0 +
            it2 * (7.0 / 5760.0 +
                   it2 * (31.0 / 80640.0 + it2 * (127.0 / 430080.0 + it2 * (511.0 / 1216512.0)))));
  return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + series;
}

namespace {

template <std::size_t M>
double horner(const double (&c)[M], double q) {
  double v = 0.0;
  for (std::size_t i = M; i-- > 0;) v = v * q + c[i];
  return v;
}

}  // namespace

double hardy_z(double t, int corrections) {
  if (!(t >= kRsSwitch) || !std::isfinite(t)) {
    throw DomainError("hardy_z: Riemann-Siegel path requires t >= 50");
  }
  if (corrections < 0 || corrections > 5) throw DomainError("hardy_z: corrections must be 0..5");
  const double a = std::sqrt(t / (2.0 * kPi));
  const auto n_main = static_cast<std::uint64_t>(std::floor(a));
  const double theta = riemann_siegel_theta(t);
  double sum = 0.0;
  for (std::uint64_t n = 1; n <= n_main; ++n) {
    const double dn = static_cast<double>(n);
    sum += std::cos(theta - t * std::log(dn)) / std::sqrt(dn);
  }
  sum *= 2.0;
  const double q = a - static_cast<double>(n_main) - 0.5;
  const double c[5] = {horner(kRsC0, q), horner(kRsC1, q), horner(kRsC2, q), horner(kRsC3, q),
                       horner(kRsC4, q)};
  double rem = 0.0;
  double apow = 1.0;
  for (int k = 0; k < corrections; ++k) {
    rem += c[k] * apow;
    apow /= a;
  }
  const double sign = (n_main % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return sum + sign * rem / std::sqrt(a);
}

double zeta_rs_mod(double t) { return std::abs(hardy_z(t, 5)); }

cplx zeta_critical(double t) {
  if (!std::isfinite(t)) throw DomainError("zeta_critical: non-finite t");
  if (t < 0.0) return std::conj(zeta_critical(-t));
  if (t < kRsSwitch) return zeta_em(cplx(0.5, t), 1e-12);
  const double theta = riemann_siegel_theta(t);
  return hardy_z(t, 5) * std::polar(1.0, -theta);
}

double zeta_abs2_critical(double t) {
  if (std::abs(t) >= kRsSwitch) {
    const double z = hardy_z(std::abs(t), 5);
    return z * z;
  }
  return std::norm(zeta_em(cplx(0.5, t), 1e-12));
}

double dirichlet_square_check(cplx s, std::uint64_t n_max, const arith::SieveTable& table) {
  if (!(s.real() > 1.0)) throw DomainError("dirichlet_square_check: requires Re s > 1");
  if (n_max > table.limit()) throw RangeError("dirichlet_square_check: N exceeds sieve limit");
  const cplx z = zeta_em(s, 1e-14);
  cplx partial = 0.0;
  for (std::uint64_t n = n_max; n >= 1; --n) {
    partial += static_cast<double>(table.d(n)) * std::exp(-s * std::log(static_cast<double>(n)));
  }
  return std::abs(z * z - partial);
}

double zeta_prime_2() {
  // f(x) = -log x / x^2; sum_{n >= N} f(n) = int_N^inf f + f(N)/2 - f'(N)/12 + f'''(N)/720 - ...
  constexpr int n0 = 1000;
  double s = 0.0;
  for (int n = n0 - 1; n >= 1; --n) s -= std::log(n) / (static_cast<double>(n) * n);
  const double x = n0;
  const double lx = std::log(x);
  const double integral = -(lx + 1.0) / x;
  const double f = -lx / (x * x);
  const double f1 = (2.0 * lx - 1.0) / (x * x * x);
  const double f3 = (24.0 * lx - 26.0) / std::pow(x, 5);
  return s + integral + 0.5 * f - f1 / 12.0 + f3 / 720.0;
}

const char* to_string(ZetaMethod m) {
  return m == ZetaMethod::euler_maclaurin ? "euler_maclaurin" : "riemann_siegel";
}

ZetaGrid zeta_grid(std::span<const double> t_values, int threads) {
  for (std::size_t i = 1; i < t_values.size(); ++i) {
    if (!(t_values[i] > t_values[i - 1])) throw DomainError("zeta_grid: t values must increase strictly");
  }
  ZetaGrid g;
  g.t_values.assign(t_values.begin(), t_values.end());
  g.z_values.resize(t_values.size());
  g.methods.resize(t_values.size());
  parallel_for(t_values.size(), threads, [&](std::size_t i) {
    const double t = t_values[i];
    g.z_values[i] = zeta_critical(t);
    g.methods[i] = std::abs(t) < kRsSwitch ? ZetaMethod::euler_maclaurin : ZetaMethod::riemann_siegel;
  });
  return g;
}

std::string to_csv(const ZetaGrid& grid) {
  CsvTable table;
  table.header = {"t", "re", "im", "abs", "method"};
  for (std::size_t i = 0; i < grid.t_values.size(); ++i) {
    const auto z = grid.z_values[i];
    table.rows.push_back({format_number(grid.t_values[i]), format_number(z.real()),
                          format_number(z.imag()), format_number(std::abs(z)),
                          to_string(grid.methods[i])});
  }
  return table.str();
}

}  // namespace latlab::zeta
