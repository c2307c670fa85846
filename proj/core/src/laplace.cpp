#include "latlab/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "latlab/error.hpp"
#include "latlab/format.hpp"
#include "latlab/special.hpp"

namespace latlab::laplace {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kGamma = special::kEulerGamma;

// |P(x)| <= 2 sqrt(2) pi sqrt(x) + 2 pi + 1 (lattice squares meeting the circle).
constexpr double kPEnvA = 2.0 * std::numbers::sqrt2 * kPi;
constexpr double kPEnvB = 2.0 * kPi + 1.0;

// m_j = int_0^h u^j e^{-lambda u} du for j = 0, 1, 2.
std::array<double, 3> exp_moments(double lambda, double h) {
  std::array<double, 3> m{};
  const double lh = lambda * h;
  if (lh < 1.0) {
    // Alternating series; no cancellation for lambda h < 1.
    for (int j = 0; j < 3; ++j) {
      double term = std::pow(h, j + 1);  // (-lambda)^k h^{j+k+1} / k!
      double sum = 0.0;
      for (int k = 0; k < 60; ++k) {
        const double add = term / (j + k + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
        term *= -lh / (k + 1);
      }
      m[static_cast<std::size_t>(j)] = sum;
    }
    return m;
  }
  const double e = std::exp(-lh);
  m[0] = -std::expm1(-lh) / lambda;
  m[1] = (m[0] - h * e) / lambda;
  m[2] = (2.0 * m[1] - h * h * e) / lambda;
  return m;
}

void require_sieve(double horizon, const arith::SieveTable& table, const char* what) {
  if (std::ceil(horizon) > static_cast<double>(table.limit())) {
    throw RangeError(std::string(what) + ": sieve limit " + std::to_string(table.limit()) +
                     " below horizon " + std::to_string(horizon));
  }
}

double r_cumulative(const arith::SieveTable& t, std::uint64_t k) {
  return k == 0 ? 0.0 : static_cast<double>(t.r_prefix(k));
}

double d_cumulative(const arith::SieveTable& t, std::uint64_t k) {
  return k == 0 ? 0.0 : static_cast<double>(t.d_prefix(k));
}

double delta_at(double x, double dk) { return dk - x * (std::log(x) + 2.0 * kGamma - 1.0) - 0.25; }

}  // namespace

const char* to_string(LaplaceMethod m) {
  switch (m) {
    case LaplaceMethod::exact_piecewise: return "exact_piecewise";
    case LaplaceMethod::panel_quadrature: return "panel_quadrature";
    case LaplaceMethod::closed_form: return "closed_form";
    case LaplaceMethod::series: return "series";
  }
  return "unknown";
}

double envelope_tail(double s, double H, double C, double alpha, double beta) {
  if (!(H > std::numbers::e)) throw DomainError("envelope_tail: requires H > e");
  const double lh = std::log(H);
  const double denom = s - alpha / H - beta / (H * lh);
  if (!(denom > 0.0)) return INFINITY;
  return C * std::pow(H, alpha) * std::pow(lh, beta) * std::exp(-s * H) / denom;
}

LaplaceEstimate laplace_P_closed(double s, const arith::SieveTable& table, double tol) {
  if (!(s > 0.0)) throw DomainError("laplace_P_closed: s must be positive");
  const double c = kPi * kPi / s;
  const double pre = kPi / (s * s);
  double sum = 0.0;
  for (std::uint64_t n = 1; n <= table.limit(); ++n) {
    const double dn = static_cast<double>(n);
    sum += table.r(n) * std::exp(-c * dn);
    // r(n) <= 8 sqrt(n); the tail past n is dominated by a geometric series.
    const double q = std::sqrt((dn + 2.0) / (dn + 1.0)) * std::exp(-c);
    if (q < 1.0) {
      const double bound = pre * 8.0 * std::sqrt(dn + 1.0) * std::exp(-c * (dn + 1.0)) / (1.0 - q);
      if (bound < tol) {
        LaplaceEstimate e;
        e.parameter = s;
        e.value = pre * sum;
        e.horizon = dn;
        e.tail_bound = bound;
        e.method = LaplaceMethod::series;
        return e;
      }
    }
  }
  throw RangeError("laplace_P_closed: tolerance not reached within the sieve limit");
}

LaplaceEstimate laplace_P_exact(double s, const arith::SieveTable& table, double horizon_factor) {
  if (!(s > 0.0)) throw DomainError("laplace_P_exact: s must be positive");
  const double H = std::max(horizon_factor / s, 4.0);
  require_sieve(H, table, "laplace_P_exact");
  const auto pieces = static_cast<std::uint64_t>(std::ceil(H));
  const auto unit = exp_moments(s, 1.0);
  double sum = 0.0;
  for (std::uint64_t k = 0; k < pieces; ++k) {
    const double a = static_cast<double>(k);
    const double h = std::min(1.0, H - a);
    const auto m = h == 1.0 ? unit : exp_moments(s, h);
    // P = p - pi u on [k, k + h), u = x - k.
    const double p = r_cumulative(table, k) + 1.0 - kPi * a;
    sum += std::exp(-s * a) * (p * m[0] - kPi * m[1]);
  }
  LaplaceEstimate e;
  e.parameter = s;
  e.value = sum;
  e.horizon = H;
  e.tail_bound = envelope_tail(s, std::max(H, 3.0), kPEnvA, 0.5, 0.0) + kPEnvB * std::exp(-s * H) / s;
  e.method = LaplaceMethod::exact_piecewise;
  return e;
}

double laplace_bessel_single(int nu, double a, double s) {
  if (nu != 0 && nu != 1) throw DomainError("laplace_bessel_single: nu must be 0 or 1");
  if (!(a > 0.0) || !(s > 0.0)) throw DomainError("laplace_bessel_single: a, s must be positive");
  return std::exp(-a / s) * std::pow(a, 0.5 * nu) * std::pow(s, -nu - 1.0);
}

double bessel_product_laplace(double a, double b, double s) {
  if (!(a > 0.0) || !(b > 0.0) || !(s > 0.0)) {
    throw DomainError("bessel_product_laplace: a, b, s must be positive");
  }
  const double z = a * b / (2.0 * s);
  const double pre = std::exp(-(a - b) * (a - b) / (4.0 * s)) / (4.0 * s * s * s);
  const double v = pre * (2.0 * a * b * special::bessel_i0_scaled(z) -
                          (a * a + b * b) * special::bessel_i1_scaled(z));
  if (!std::isfinite(v)) throw RangeError("bessel_product_laplace: result out of range");
  return v;
}

ConstantSeries constant_series(ConstantKind kind, const arith::SieveTable& table) {
  const std::uint64_t N = table.limit();
  if (N < 1000) throw RangeError("constant_series: sieve limit must be at least 1000");
  auto f = [&](std::uint64_t n) -> double {
    const double v = kind == ConstantKind::r_squared ? table.r(n) : table.d(n);
    return v * v;
  };
  ConstantSeries out;
  out.n_max = N;
  for (std::uint64_t n = N; n >= 1; --n) {
    const double dn = static_cast<double>(n);
    out.direct_part += f(n) / (dn * std::sqrt(dn));
  }

  const int degree = kind == ConstantKind::r_squared ? 1 : 3;
  const double dN = static_cast<double>(N);
  // Abel tail from a model of S(x) = sum_{n<=x} f(n) fitted on [N/divisor, N].
  // Returns the estimate and max |S - model| over [N/2, N].
  auto tail_from_window = [&](std::uint64_t divisor) {
    constexpr int kGrid = 400;
    std::vector<double> xs;
    std::vector<double> ss;
    {
      std::vector<std::uint64_t> marks;
      for (int i = 0; i <= kGrid; ++i) {
        marks.push_back(N / divisor + (N - N / divisor) * static_cast<std::uint64_t>(i) / kGrid);
      }
      double acc = 0.0;
      std::uint64_t n = 0;
      for (auto m : marks) {
        for (; n < m;) acc += f(++n);
        xs.push_back(static_cast<double>(m));
        ss.push_back(acc);
      }
    }
    std::vector<BasisFunction> basis;
    for (int j = degree; j >= 0; --j) {
      basis.push_back([j](double x) { return x * std::pow(std::log(x), j); });
    }
    std::vector<std::optional<double>> pins(basis.size());
    const auto fit = fit_linear_model("S(x) = x * poly(log x)", xs, ss, basis, pins);

    double err = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] < 0.5 * dN) continue;
      double model = 0.0;
      for (std::size_t j = 0; j < basis.size(); ++j) model += fit.coefficients[j] * basis[j](xs[i]);
      err = std::max(err, std::abs(ss[i] - model));
    }

    // sum_{n>N} f(n) n^{-3/2} = -S(N) N^{-3/2} + (3/2) int_N^inf S(x) x^{-5/2} dx,
    // with int_N^inf (log x)^j x^{-3/2} dx = 2 L^j N^{-1/2} + 2 j I_{j-1}.
    const double L = std::log(dN);
    std::vector<double> I(static_cast<std::size_t>(degree) + 1);
    I[0] = 2.0 / std::sqrt(dN);
    for (int j = 1; j <= degree; ++j) {
      I[static_cast<std::size_t>(j)] = 2.0 * std::pow(L, j) / std::sqrt(dN) + 2.0 * j * I[static_cast<std::size_t>(j - 1)];
    }
    double integral = 0.0;
    for (int j = degree; j >= 0; --j) {
      integral += fit.coefficients[static_cast<std::size_t>(degree - j)] * I[static_cast<std::size_t>(j)];
    }
    return std::pair{-ss.back() / (dN * std::sqrt(dN)) + 1.5 * integral, err};
  };
  const auto [tail, err] = tail_from_window(10);
  // The same tail from a window half as wide: the spread measures how far the
  // fitted model extrapolates reliably.
  const auto [tail_narrow, err_narrow] = tail_from_window(5);
  (void)err_narrow;
  out.tail_estimate = tail;
  out.tail_bound = 5.0 * err / (dN * std::sqrt(dN)) + 2.0 * std::abs(tail - tail_narrow);
  out.value = out.direct_part + out.tail_estimate;
  return out;
}

TheoremCheck verify_theorem4(double T, const arith::SieveTable& table, const ConstantSeries& c,
                             double horizon_factor) {
  if (!(T > 0.0)) throw DomainError("verify_theorem4: T must be positive");
  const double H = std::max(horizon_factor * T, 4.0);
  require_sieve(H, table, "verify_theorem4");
  const double lambda = 1.0 / T;
  const auto pieces = static_cast<std::uint64_t>(std::ceil(H));
  const auto unit = exp_moments(lambda, 1.0);
  double lhs = 0.0;
  for (std::uint64_t k = 0; k < pieces; ++k) {
    const double a = static_cast<double>(k);
    const double h = std::min(1.0, H - a);
    const auto m = h == 1.0 ? unit : exp_moments(lambda, h);
    const double p = r_cumulative(table, k) + 1.0 - kPi * a;
    lhs += std::exp(-lambda * a) * (p * p * m[0] - 2.0 * kPi * p * m[1] + kPi * kPi * m[2]);
  }
  TheoremCheck out;
  out.T = T;
  out.horizon = H;
  out.lhs = lhs;
  out.rhs = 0.25 * std::pow(T / kPi, 1.5) * c.value - T;
  out.residual = out.lhs - out.rhs;
  // P^2 <= 2 A^2 x + 2 B^2 integrates in closed form against e^{-x/T} past H.
  const double lhs_tail = T * std::exp(-H / T) * (2.0 * kPEnvA * kPEnvA * (H + T) + 2.0 * kPEnvB * kPEnvB);
  out.tail_bound = lhs_tail + 0.25 * std::pow(T / kPi, 1.5) * c.tail_bound;
  return out;
}

double theorem4_lhs_quadrature(double T, const arith::SieveTable& table, double horizon_factor) {
  const double H = std::max(horizon_factor * T, 4.0);
  require_sieve(H, table, "theorem4_lhs_quadrature");
  const auto& rule = gauss_legendre(10);
  const auto pieces = static_cast<std::uint64_t>(std::ceil(H));
  double sum = 0.0;
  for (std::uint64_t k = 0; k < pieces; ++k) {
    const double a = static_cast<double>(k);
    const double b = std::min(a + 1.0, H);
    const double c = r_cumulative(table, k) + 1.0;
    sum += rule.integrate([&](double x) { return (c - kPi * x) * (c - kPi * x) * std::exp(-x / T); }, a, b);
  }
  return sum;
}

double theorem5_lhs(double T, const arith::SieveTable& table, double horizon_factor) {
  if (!(T > 0.0)) throw DomainError("theorem5_lhs: T must be positive");
  const double H = std::max(horizon_factor * T, 4.0);
  require_sieve(H, table, "theorem5_lhs");
  const auto& rule = gauss_legendre(16);
  const auto pieces = static_cast<std::uint64_t>(std::ceil(H));
  double sum = 0.0;
  for (std::uint64_t k = 0; k < pieces; ++k) {
    const double a = static_cast<double>(k);
    const double b = std::min(a + 1.0, H);
    const double dk = d_cumulative(table, k);
    auto f = [&](double x) {
      const double v = delta_at(x, dk);
      return v * v * std::exp(-x / T);
    };
    sum += k == 0 ? integrate_adaptive(f, a, b, 1e-14) : rule.integrate(f, a, b);
  }
  return sum;
}

double theorem5_leading(double T, const ConstantSeries& c) {
  return 0.125 * std::pow(T / kPi, 1.5) * c.value;
}

TheoremCheck verify_theorem5(double T, const arith::SieveTable& table, const ConstantSeries& c,
                             const FitReport& p2, double horizon_factor) {
  if (p2.coefficients.size() != 3) throw FitError("verify_theorem5: P2 needs three coefficients");
  if (!(p2.coefficients[0] > 0.0)) throw FitError("verify_theorem5: P2 leading coefficient must be positive");
  TheoremCheck out;
  out.T = T;
  out.horizon = std::max(horizon_factor * T, 4.0);
  out.lhs = theorem5_lhs(T, table, horizon_factor);
  out.rhs = theorem5_leading(T, c) - T * polyval_desc(p2.coefficients, std::log(T));
  out.residual = out.lhs - out.rhs;
  // |Delta(x)| <= 2 sqrt(x) for x >= 1.
  const double H = out.horizon;
  out.tail_bound = 4.0 * T * std::exp(-H / T) * (H + T) + 0.125 * std::pow(T / kPi, 1.5) * c.tail_bound;
  return out;
}

FitReport fit_theorem5_p2(std::span<const double> T_grid, const arith::SieveTable& table,
                          const ConstantSeries& c, double horizon_factor) {
  std::vector<double> ys;
  for (double T : T_grid) ys.push_back((theorem5_leading(T, c) - theorem5_lhs(T, table, horizon_factor)) / T);
  std::vector<std::optional<double>> pins(3);
  return fit_polynomial("P2(log T) = a0 log^2 T + a1 log T + a2", T_grid, ys, 2, pins,
                        [](double T) { return std::log(T); });
}

LaplaceEstimate laplace_moment(const zeta::CriticalLineSamples& samples, int k, double s) {
  if (k != 1 && k != 2) throw DomainError("laplace_moment: k must be 1 or 2");
  if (!(s > 0.0)) throw DomainError("laplace_moment: s must be positive");
  if (samples.breakpoints.empty()) throw DomainError("laplace_moment: no samples");
  double sum = 0.0;
  for (std::size_t i = 0; i < samples.t.size(); ++i) {
    const double v = samples.abs2[i];
    sum += samples.weight[i] * (k == 1 ? v : v * v) * std::exp(-s * samples.t[i]);
  }
  LaplaceEstimate e;
  e.parameter = s;
  e.value = sum;
  e.horizon = samples.breakpoints.back();
  e.tail_bound = envelope_tail(s, e.horizon, std::pow(0.63, 2 * k), k / 3.0, 2.0 * k);
  e.method = LaplaceMethod::panel_quadrature;
  return e;
}

LaplaceEstimate laplace_moment(int k, double s, const QuadratureConfig& quad) {
  if (!(s > 0.0)) throw DomainError("laplace_moment: s must be positive");
  const double bp[] = {std::max(quad.horizon_factor / s, 10.0)};
  return laplace_moment(zeta::sample_critical_line(bp, quad), k, s);
}

std::vector<KoberPoint> kober_sweep(std::span<const double> sigmas, const QuadratureConfig& quad) {
  if (sigmas.empty()) return {};
  double smin = INFINITY;
  for (double s : sigmas) {
    if (!(s >= 0.01 && s <= 0.2)) throw DomainError("kober: sigma must lie in [0.01, 0.2]");
    smin = std::min(smin, s);
  }
  const double bp[] = {quad.horizon_factor / (2.0 * smin)};
  const auto samples = zeta::sample_critical_line(bp, quad);
  std::vector<KoberPoint> out;
  for (double sigma : sigmas) {
    const auto e = laplace_moment(samples, 1, 2.0 * sigma);
    KoberPoint p;
    p.sigma = sigma;
    p.l1 = e.value.real();
    p.tail_bound = e.tail_bound;
    p.leading = (kGamma - std::log(4.0 * kPi * sigma)) / (2.0 * std::sin(sigma));
    p.defect = p.l1 - p.leading;
    out.push_back(p);
  }
  return out;
}

KoberPoint kober_check(double sigma, const QuadratureConfig& quad) {
  const double s[] = {sigma};
  return kober_sweep(s, quad).front();
}

namespace {

// 2 pi e^{-is/2} sum d(n) exp(-2 pi i n e^{-is}) with its tail bound.
cplx jutila_series(double s, const arith::SieveTable& table, double& bound, std::uint64_t& terms) {
  const double decay = 2.0 * kPi * std::sin(s);
  const double q = std::exp(-decay);
  cplx sum = 0.0;
  for (std::uint64_t n = 1; n <= table.limit(); ++n) {
    const double dn = static_cast<double>(n);
    sum += static_cast<double>(table.d(n)) * std::polar(std::exp(-decay * dn), -2.0 * kPi * dn * std::cos(s));
    // d(n) <= 2 sqrt(n)
    const double ratio = q * std::sqrt((dn + 2.0) / (dn + 1.0));
    if (ratio < 1.0) {
      const double b = 2.0 * kPi * 2.0 * std::sqrt(dn + 1.0) * std::exp(-decay * (dn + 1.0)) / (1.0 - ratio);
      if (b < 1e-14) {
        bound = b;
        terms = n;
        return 2.0 * kPi * std::polar(1.0, -0.5 * s) * sum;
      }
    }
  }
  throw ConvergenceError("jutila: divisor series did not converge within the sieve limit");
}

}  // namespace

std::vector<JutilaPoint> jutila_sweep(std::span<const double> s_values, const arith::SieveTable& table,
                                      const QuadratureConfig& quad) {
  if (s_values.empty()) return {};
  double smin = INFINITY;
  for (double s : s_values) {
    if (!(s >= 0.05 && s <= 3.0)) throw DomainError("jutila: s must lie in [0.05, 3]");
    smin = std::min(smin, s);
  }
  const double bp[] = {std::max(quad.horizon_factor / smin, 10.0)};
  const auto samples = zeta::sample_critical_line(bp, quad);
  std::vector<JutilaPoint> out;
  const cplx i(0.0, 1.0);
  for (double s : s_values) {
    JutilaPoint p;
    p.s = s;
    const auto e = laplace_moment(samples, 1, s);
    p.l1 = e.value;
    p.quadrature_tail_bound = e.tail_bound;
    const cplx head = -i * std::polar(1.0, 0.5 * s) *
                      (std::log(2.0 * kPi) - kGamma + (0.5 * kPi - s) * i);
    p.main_expr = head + jutila_series(s, table, p.series_tail_bound, p.series_terms);
    p.lambda1 = p.l1 - p.main_expr;
    out.push_back(p);
  }
  return out;
}

JutilaPoint jutila_theorem6(double s, const arith::SieveTable& table, const QuadratureConfig& quad) {
  const double v[] = {s};
  return jutila_sweep(v, table, quad).front();
}

double atkinson_A() { return 1.0 / (2.0 * kPi * kPi); }

double atkinson_B() {
  return (2.0 * std::log(2.0 * kPi) - 6.0 * kGamma + 24.0 * zeta::zeta_prime_2() / (kPi * kPi)) /
         (kPi * kPi);
}

AtkinsonReport atkinson_L2(std::span<const double> sigma_grid, const QuadratureConfig& quad) {
  if (sigma_grid.size() < 6) throw DomainError("atkinson_L2: need at least 6 grid points");
  for (std::size_t i = 0; i < sigma_grid.size(); ++i) {
    const double s = sigma_grid[i];
    if (!(s >= 1.0 / 3000.0 - 1e-15 && s <= 1.0 / 200.0 + 1e-15)) {
      throw DomainError("atkinson_L2: sigma must lie in [1/3000, 1/200]");
    }
    if (i > 0 && !(s > sigma_grid[i - 1])) throw DomainError("atkinson_L2: sigma grid must be sorted");
  }
  const double bp[] = {quad.horizon_factor / sigma_grid.front()};
  const auto samples = zeta::sample_critical_line(bp, quad);
  AtkinsonReport rep;
  std::vector<double> ys;
  for (double sigma : sigma_grid) {
    rep.values.push_back(laplace_moment(samples, 2, sigma));
    ys.push_back(sigma * rep.values.back().value.real());
  }
  auto u = [](double sigma) { return std::log(1.0 / sigma); };
  std::vector<std::optional<double>> free(5);
  std::vector<std::optional<double>> pinned(5);
  pinned[0] = atkinson_A();
  rep.unpinned = fit_polynomial("sigma L2(sigma) = quartic in log(1/sigma)", sigma_grid, ys, 4, free, u);
  rep.pinned = fit_polynomial("sigma L2(sigma) = quartic in log(1/sigma), A pinned", sigma_grid, ys, 4,
                              pinned, u);
  rep.B_formula = atkinson_B();
  return rep;
}

std::vector<LkPoint> lk_bound_diagnostic(int k, std::span<const double> T_grid, const QuadratureConfig& quad) {
  if (k != 1 && k != 2) throw DomainError("lk_bound_diagnostic: k must be 1 or 2");
  if (T_grid.empty()) return {};
  double tmax = 0.0;
  for (double T : T_grid) {
    if (!(T >= 10.0)) throw DomainError("lk_bound_diagnostic: T must be >= 10");
    tmax = std::max(tmax, T);
  }
  const double H = std::ceil(quad.horizon_factor * tmax);
  // Outer rule for int I_k(t) e^{-t/T} dt: 8 Gauss-Legendre nodes per unit.
  // The inner integral I_k is accumulated exactly up to every outer node.
  const auto& outer = gauss_legendre(8);
  std::vector<double> bps;
  std::vector<double> outer_w;
  const auto units = static_cast<std::uint64_t>(H);
  bps.reserve(units * 8 + T_grid.size() + 1);
  for (std::uint64_t j = 0; j < units; ++j) {
    for (int i = 0; i < outer.size(); ++i) {
      bps.push_back(static_cast<double>(j) + 0.5 * (1.0 + outer.nodes()[static_cast<std::size_t>(i)]));
      outer_w.push_back(0.5 * outer.weights()[static_cast<std::size_t>(i)]);
    }
  }
  const std::size_t n_outer = bps.size();
  std::vector<double> all = bps;
  for (double T : T_grid) all.push_back(T);
  all.push_back(H);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  QuadratureConfig inner = quad;
  inner.nodes_per_panel = std::min(quad.nodes_per_panel, 8);
  const auto samples = zeta::sample_critical_line(all, inner);
  const auto cum = cumulative_moment(samples, k);
  auto cum_at = [&](double x) {
    const auto it = std::lower_bound(all.begin(), all.end(), x);
    return cum[static_cast<std::size_t>(it - all.begin())];
  };
  const double I_H = cum.back();
  const double C = std::pow(0.63, 2 * k);
  std::vector<LkPoint> out;
  for (double T : T_grid) {
    LkPoint p;
    p.T = T;
    p.k = k;
    p.I = cum_at(T);
    const auto L = laplace_moment(samples, k, 1.0 / T);
    p.L = L.value.real();
    double conv = 0.0;
    for (std::size_t i = 0; i < n_outer; ++i) conv += outer_w[i] * cum_at(bps[i]) * std::exp(-bps[i] / T);
    p.converse = conv / T;
    // I_k(t) <= I_k(H) + t * envelope(t)^{2k} for t >= H.
    const double conv_tail = I_H * std::exp(-H / T) + envelope_tail(1.0 / T, H, C, 1.0 + k / 3.0, 2.0 * k) / T;
    p.tail_bound = L.tail_bound + conv_tail;
    p.sandwich = p.I <= std::numbers::e * p.L;
    out.push_back(p);
  }
  return out;
}

MellinResult mellin_gamma_check(cplx z, double c, const QuadratureConfig& quad) {
  if (!(z.real() > 0.0)) throw DomainError("mellin_gamma_check: requires Re z > 0");
  if (!(c > 0.0)) throw DomainError("mellin_gamma_check: requires c > 0");
  const cplx logz = std::log(z);
  // ds = i dy, so (1/2 pi i) ds = dy / (2 pi).
  auto f = [&](double y) {
    const cplx s(c, y);
    return std::exp(special::log_gamma(s) - s * logz) / (2.0 * kPi);
  };
  const double peak = std::abs(f(0.0));
  double H = 10.0;
  while (std::abs(f(H)) > 1e-17 * peak || std::abs(f(-H)) > 1e-17 * peak) {
    H += 10.0;
    if (H > 1e4) throw BudgetError("mellin_gamma_check: height budget exceeded");
    quad.deadline.check("mellin_gamma_check");
  }
  const auto& rule = gauss_legendre(quad.nodes_per_panel);
  const cplx integral = integrate_panels(f, -H, H, 0.5 * quad.panel_scale, rule);
  MellinResult r;
  r.integral = integral;
  r.height = H;
  r.residual = std::abs(std::exp(-z) - integral);
  return r;
}

std::string to_csv(std::span<const TheoremCheck> rows) {
  CsvTable t;
  t.header = {"parameter", "lhs", "rhs", "residual", "tail_bound"};
  for (const auto& r : rows) {
    t.rows.push_back({format_number(r.T), format_number(r.lhs), format_number(r.rhs),
                      format_number(r.residual), format_number(r.tail_bound)});
  }
  return t.str();
}

}  // namespace latlab::laplace
