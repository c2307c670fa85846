#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "latlab_cli/fits.hpp"
#include "latlab/error.hpp"
#include "latlab/errterm.hpp"
#include "latlab/format.hpp"
#include "latlab/frozen.hpp"
#include "latlab/funceq.hpp"
#include "latlab/laplace.hpp"
#include "latlab/parallel.hpp"
#include "latlab/zeta.hpp"
#include "latlab_cli/cli.hpp"

namespace latlab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) { return format_number(v); }

Criterion check(std::string id, std::string description, bool passed, std::string detail = {},
                bool hard = true) {
  return {std::move(id), std::move(description), passed, hard, std::move(detail)};
}

std::uint64_t as_count(double v, const char* what) {
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e12) {
    throw ConfigError(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

// Sample points in [10, 1000], each at least 0.3 from an integer: truncation
// at N only resolves the jumps of the sums on a scale of about sqrt(x / N).
const std::vector<double> kSeriesX = {10.5,  25.5,  50.3,  100.7, 137.5,
                                      250.5, 400.5, 555.5, 777.5, 999.5};

// ---- sieve -----------------------------------------------------------------

void sieve_suite(Context& ctx, SuiteResult& r) {
  const auto Ns = grid_or(ctx.config(), "N", {1e6});
  r.grid["N"] = Ns;
  std::uint64_t n_max = 0;
  for (double v : Ns) n_max = std::max(n_max, as_count(v, "N"));
  const auto& t = ctx.sieve(n_max);

  Table tab{"sieve", {"N", "sum_r", "lattice_points", "sum_d", "hyperbola_sum"}, {}};
  bool lattice_ok = true;
  bool hyper_ok = true;
  for (double v : Ns) {
    const auto N = static_cast<std::uint64_t>(v);
    const auto m = isqrt(N);
    // Points with a^2 + b^2 <= N other than the origin.
    std::uint64_t lattice = 0;
    for (std::uint64_t a = 0; a <= m; ++a) {
      const std::uint64_t column = 2 * isqrt(N - a * a) + 1;
      lattice += a == 0 ? column : 2 * column;
    }
    lattice -= 1;
    std::uint64_t hyper = 0;
    for (std::uint64_t k = 1; k <= m; ++k) hyper += N / k;
    hyper = 2 * hyper - m * m;
    lattice_ok = lattice_ok && lattice == t.r_prefix(N);
    hyper_ok = hyper_ok && hyper == t.d_prefix(N);
    tab.rows.push_back({static_cast<std::int64_t>(N), static_cast<std::int64_t>(t.r_prefix(N)),
                        static_cast<std::int64_t>(lattice), static_cast<std::int64_t>(t.d_prefix(N)),
                        static_cast<std::int64_t>(hyper)});
  }
  r.tables.push_back(std::move(tab));
  r.criteria.push_back(check("lattice", "sum r(n) equals the lattice-point count", lattice_ok));
  r.criteria.push_back(check("hyperbola", "sum d(n) equals the hyperbola-method count", hyper_ok));
}

// ---- errterm ---------------------------------------------------------------

void errterm_suite(Context& ctx, SuiteResult& r) {
  const auto xs = grid_or(ctx.config(), "x", kSeriesX);
  const auto Ts = grid_or(ctx.config(), "T", {1000.0, 5000.0, 10000.0});
  r.grid["x"] = xs;
  r.grid["T"] = Ts;
  const auto& t = ctx.sieve(static_cast<std::uint64_t>(std::max(max_of(xs), max_of(Ts))) + 2);

  for (auto which : {errterm::Which::P, errterm::Which::Delta}) {
    const bool isP = which == errterm::Which::P;
    Table tab{isP ? "errterm_P" : "errterm_Delta", {"x", "method", "N", "value", "truncation_estimate"}, {}};
    for (double x : xs) {
      const bool integral = x == std::floor(x);
      const auto s = isP ? errterm::P_direct(x, integral, t) : errterm::Delta_direct(x, integral, t);
      tab.rows.push_back({x, std::string(errterm::to_string(s.method)), std::int64_t{0}, s.value,
                          s.truncation_estimate});
    }
    r.tables.push_back(std::move(tab));
  }

  Table ms{"errterm_mean_square", {"T", "function", "mean_square", "normalized"}, {}};
  for (double T : Ts) {
    ctx.deadline().check("errterm");
    const double p = errterm::mean_square_direct(T, errterm::Which::P, t);
    const double d = errterm::mean_square_direct(T, errterm::Which::Delta, t);
    ms.rows.push_back({T, std::string("P"), p, p / std::pow(T, 1.5)});
    ms.rows.push_back({T, std::string("Delta"), d, d / std::pow(T, 1.5)});
  }
  r.tables.push_back(std::move(ms));

  const double exact = errterm::mean_square_direct(100.0, errterm::Which::P, t);
  const double quad = errterm::mean_square_P_quadrature(100.0, t);
  const double rel = std::abs(exact - quad) / std::abs(exact);
  r.criteria.push_back(check("piecewise_vs_quadrature", "int_0^100 P^2: exact piecewise vs Gauss-Legendre <= 1e-9 relative",
                             rel <= 1e-9, "rel " + num(rel)));
  const double mean = errterm::mean_value_delta(1000.0, t);
  r.criteria.push_back(check("delta_mean", "|(1/T) int_0^T Delta| <= 1 at T = 1000", std::abs(mean) <= 1.0,
                             "mean " + num(mean)));
}

// ---- series ----------------------------------------------------------------

void series_suite(Context& ctx, SuiteResult& r) {
  const auto xs = grid_or(ctx.config(), "x", kSeriesX);
  const auto Ns = grid_or(ctx.config(), "N", {1e5});
  r.grid["x"] = xs;
  r.grid["N"] = Ns;
  const auto N = as_count(Ns.front(), "N");
  if (N < 4) throw ConfigError("series: N must be at least 4");
  const auto& t = ctx.sieve(std::max<std::uint64_t>(N, static_cast<std::uint64_t>(max_of(xs)) + 2));

  for (auto which : {errterm::Which::P, errterm::Which::Delta}) {
    const bool isP = which == errterm::Which::P;
    struct Row {
      errterm::ErrorTermSample direct, half, full;
    };
    std::vector<Row> rows(xs.size());
    const auto& deadline = ctx.deadline();
    parallel_for(xs.size(), ctx.config().threads, [&](std::size_t i) {
      deadline.check("series");
      const double x = xs[i];
      const auto sm = errterm::Smoothing::smoothed;
      rows[i].direct = isP ? errterm::P_direct(x, false, t) : errterm::Delta_direct(x, false, t);
      rows[i].half = isP ? errterm::P_hardy(x, N / 2, sm, t) : errterm::Delta_voronoi(x, N / 2, sm, t);
      rows[i].full = isP ? errterm::P_hardy(x, N, sm, t) : errterm::Delta_voronoi(x, N, sm, t);
    });
    Table tab{isP ? "series_P" : "series_Delta", {"x", "method", "N", "value", "truncation_estimate"}, {}};
    double err_half = 0.0, err_full = 0.0, rms_half = 0.0, rms_full = 0.0;
    double trunc_half = 0.0, trunc_full = 0.0;
    bool integral_x = false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      integral_x = integral_x || xs[i] == std::floor(xs[i]);
      for (const auto* s : {&rows[i].direct, &rows[i].half, &rows[i].full}) {
        tab.rows.push_back({s->x, std::string(errterm::to_string(s->method)),
                            static_cast<std::int64_t>(s->terms_used), s->value, s->truncation_estimate});
      }
      const double eh = std::abs(rows[i].half.value - rows[i].direct.value);
      const double ef = std::abs(rows[i].full.value - rows[i].direct.value);
      err_half = std::max(err_half, eh);
      err_full = std::max(err_full, ef);
      rms_half += eh * eh;
      rms_full += ef * ef;
      trunc_half = std::max(trunc_half, rows[i].half.truncation_estimate);
      trunc_full = std::max(trunc_full, rows[i].full.truncation_estimate);
    }
    rms_half = std::sqrt(rms_half / static_cast<double>(xs.size()));
    rms_full = std::sqrt(rms_full / static_cast<double>(xs.size()));
    r.tables.push_back(std::move(tab));
    const std::string f = isP ? "P" : "Delta";
    r.criteria.push_back(check(f + "_non_integral", "comparison points are non-integral", !integral_x));
    r.criteria.push_back(check(f + "_within", "smoothed series within 0.1 of the direct value at N",
                               err_full <= 0.1, "max error " + num(err_full)));
    r.criteria.push_back(check(f + "_decreases", "max and RMS error decrease from N/2 to N",
                               err_full < err_half && rms_full < rms_half,
                               "max " + num(err_half) + " -> " + num(err_full) + ", rms " + num(rms_half) +
                                   " -> " + num(rms_full)));
    r.criteria.push_back(check(f + "_truncation", "largest truncation estimate decreases from N/2 to N",
                               trunc_full < trunc_half, num(trunc_half) + " -> " + num(trunc_full)));
  }
}

// ---- correlations ----------------------------------------------------------

void correlations_suite(Context& ctx, SuiteResult& r) {
  const auto xs = grid_or(ctx.config(), "x", {1e5});
  const auto hs_raw = grid_or(ctx.config(), "h", {1, 2, 3, 4, 5, 6, 7, 8});
  r.grid["x"] = xs;
  r.grid["h"] = hs_raw;
  std::vector<std::uint64_t> hs;
  for (double h : hs_raw) hs.push_back(as_count(h, "h"));
  const std::uint64_t h_max = *std::max_element(hs.begin(), hs.end());
  const double x_moto = 1e6;
  const double x_need = std::max({max_of(xs), 3e5, x_moto});
  const auto& t = ctx.sieve(static_cast<std::uint64_t>(x_need) + h_max + 1);

  Table tab{"correlations", {"x", "h", "sequence", "exact", "main", "residual", "within_uniformity"}, {}};
  bool chamizo_ok = true;
  double worst = 0.0;
  for (double x : xs) {
    for (auto h : hs) {
      ctx.deadline().check("correlations");
      const auto cr = arith::correlation_r(x, h, t);
      const auto cd = arith::correlation_d(x, h, t);
      for (const auto& [name, c] : {std::pair{"r", cr}, std::pair{"d", cd}}) {
        tab.rows.push_back({c.x, static_cast<std::int64_t>(c.h), std::string(name), c.exact_sum, c.main_term,
                            c.residual, std::string(c.within_uniformity ? "yes" : "no")});
      }
      const double ratio = std::abs(cr.residual) / (20.0 * std::pow(x, 0.7));
      worst = std::max(worst, ratio);
      chamizo_ok = chamizo_ok && ratio <= 1.0;
    }
  }
  r.tables.push_back(std::move(tab));
  r.criteria.push_back(check("chamizo_bound", "|exact - main| <= 20 x^0.7 for r(n) r(n+h)", chamizo_ok,
                             "worst |residual| / (20 x^0.7) = " + num(worst)));

  const std::vector<double> env_x = {1e4, 1e5, 3e5};
  Table env{"correlations_envelope", {"h", "x", "envelope", "slope"}, {}};
  bool slope_ok = true;
  double worst_slope = 0.0;
  for (auto h : hs) {
    const auto e = arith::correlation_residual_envelope(arith::Sequence::r, h, env_x, t);
    const double slope = loglog_slope(env_x, e);
    worst_slope = std::max(worst_slope, slope);
    slope_ok = slope_ok && slope < 0.8;
    for (std::size_t i = 0; i < env_x.size(); ++i) {
      env.rows.push_back({static_cast<std::int64_t>(h), env_x[i], e[i], slope});
    }
  }
  r.tables.push_back(std::move(env));
  r.criteria.push_back(check("residual_slope", "log-log slope of the residual envelope over x = 1e4..3e5 below 0.8",
                             slope_ok, "max slope " + num(worst_slope)));

  const auto grid = motohashi_x_grid(x_moto);
  const std::vector<std::uint64_t> moto_h = {1, 2, 3, 4, 5, 6, 7, 8};
  const auto fit = fit_motohashi(t, grid, moto_h, false);
  const double target = 6.0 / (kPi * kPi);
  const double rel = std::abs(fit.c[2][0] - target) / target;
  Table mt{"motohashi_fit", {"coefficient", "unpinned_fit", "frozen"}, {}};
  const auto& frozen = frozen::motohashi();
  for (int i = 2; i >= 0; --i) {
    for (int j = 0; j < 3; ++j) {
      mt.rows.push_back({"c" + std::to_string(i) + std::to_string(j), fit.c[i][j], frozen.c[i][j]});
    }
  }
  r.tables.push_back(std::move(mt));
  r.criteria.push_back(check("motohashi_leading", "unpinned leading coefficient within 10% of 6/pi^2 at x = 1e6",
                             rel <= 0.1, "fitted " + num(fit.c[2][0]) + ", rel " + num(rel)));
}

// ---- mean-square transforms of P and Delta ---------------------------------

Table theorem_table(const std::string& name, const std::vector<laplace::TheoremCheck>& rows) {
  Table tab{name, {"parameter", "lhs", "rhs", "residual", "tail_bound"}, {}};
  for (const auto& c : rows) tab.rows.push_back({c.T, c.lhs, c.rhs, c.residual, c.tail_bound});
  return tab;
}

void theorem4_suite(Context& ctx, SuiteResult& r) {
  const auto Ts = grid_or(ctx.config(), "T", {200, 500, 1000, 2000});
  r.grid["T"] = Ts;
  const auto& c = ctx.constant(laplace::ConstantKind::r_squared);
  const auto& t = ctx.sieve(static_cast<std::uint64_t>(80.0 * max_of(Ts)) + 2);
  std::vector<laplace::TheoremCheck> rows;
  bool bound_ok = true;
  bool tail_ok = true;
  std::string detail;
  std::string tail_detail;
  for (double T : Ts) {
    ctx.deadline().check("theorem4");
    rows.push_back(laplace::verify_theorem4(T, t, c));
    const auto& row = rows.back();
    const double lim = 5.0 * std::pow(T, 0.75);
    bound_ok = bound_ok && std::abs(row.residual) <= lim;
    detail += (detail.empty() ? "" : ", ") + num(row.residual) + "/" + num(lim);
    const double doubled = laplace::verify_theorem4(T, t, c, 80.0).lhs;
    const double change = std::abs(doubled - row.lhs);
    tail_ok = tail_ok && change <= row.tail_bound && row.tail_bound >= 0.0;
    tail_detail += (tail_detail.empty() ? "" : ", ") + num(change) + "<=" + num(row.tail_bound);
  }
  r.tables.push_back(theorem_table("theorem4", rows));
  r.criteria.push_back(check("residual_bound", "|lhs - rhs| <= 5 T^{3/4}", bound_ok, detail));
  if (rows.size() >= 2) {
    std::vector<double> xs, ys;
    for (const auto& row : rows) {
      xs.push_back(row.T);
      ys.push_back(std::abs(row.residual));
    }
    const double slope = loglog_slope(xs, ys);
    r.criteria.push_back(check("residual_slope", "log-log slope of |residual| below 0.8", slope < 0.8,
                               "slope " + num(slope)));
  }
  r.criteria.push_back(check("tail_bound", "doubling the horizon moves lhs by less than tail_bound", tail_ok,
                             tail_detail));
}

void theorem5_suite(Context& ctx, SuiteResult& r) {
  const auto Ts = grid_or(ctx.config(), "T", {300, 700, 1500});
  r.grid["T"] = Ts;
  const auto& c = ctx.constant(laplace::ConstantKind::d_squared);
  const auto& t = ctx.sieve(static_cast<std::uint64_t>(80.0 * max_of(Ts)) + 2);
  const auto& p2 = frozen::theorem5_p2();
  std::vector<laplace::TheoremCheck> rows;
  bool bound_ok = true;
  bool tail_ok = true;
  std::string detail;
  std::string tail_detail;
  try {
    for (double T : Ts) {
      ctx.deadline().check("theorem5");
      rows.push_back(laplace::verify_theorem5(T, t, c, p2));
      const auto& row = rows.back();
      const double lim = 5.0 * std::pow(T, 0.75);
      bound_ok = bound_ok && std::abs(row.residual) <= lim;
      detail += (detail.empty() ? "" : ", ") + num(row.residual) + "/" + num(lim);
      const double change = std::abs(laplace::theorem5_lhs(T, t, 80.0) - row.lhs);
      tail_ok = tail_ok && change <= row.tail_bound;
      tail_detail += (tail_detail.empty() ? "" : ", ") + num(change) + "<=" + num(row.tail_bound);
    }
  } catch (const FitError& e) {
    r.criteria.push_back(check("p2_valid", "frozen P2 has a positive leading coefficient", false, e.what()));
    r.tables.push_back(theorem_table("theorem5", rows));
    return;
  }
  r.tables.push_back(theorem_table("theorem5", rows));
  r.criteria.push_back(check("p2_valid", "frozen P2 has a positive leading coefficient", true,
                             "a0 = " + num(p2.coefficients[0])));
  r.criteria.push_back(check("residual_bound", "|lhs - rhs| <= 5 T^{3/4} at held-out T", bound_ok, detail));
  r.criteria.push_back(check("tail_bound", "doubling the horizon moves lhs by less than tail_bound", tail_ok,
                             tail_detail));
}

// ---- kober -----------------------------------------------------------------

void kober_suite(Context& ctx, SuiteResult& r) {
  const auto sigmas = grid_or(ctx.config(), "sigma", {0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1});
  r.grid["sigma"] = sigmas;
  if (sigmas.size() < 3) throw ConfigError("kober: need at least 3 sigma values");
  const auto pts = laplace::kober_sweep(sigmas, ctx.quadrature());
  std::vector<double> defects;
  Table tab{"kober", {"sigma", "l1", "leading", "defect", "tail_bound"}, {}};
  for (const auto& p : pts) {
    defects.push_back(p.defect);
    tab.rows.push_back({p.sigma, p.l1, p.leading, p.defect, p.tail_bound});
  }
  std::vector<std::optional<double>> pins(2);
  const auto fit = fit_polynomial("defect = c1 sigma + c0", sigmas, defects, 1, pins, [](double s) { return s; });
  r.tables.push_back(std::move(tab));
  r.tables.push_back({"kober_fit",
                      {"c1", "c0", "rms"},
                      {{fit.coefficients[0], fit.coefficients[1], fit.residual_norm}}});
  r.criteria.push_back(check("defect_linear", "defect fits a line with RMS <= 1e-2", fit.residual_norm <= 1e-2,
                             "rms " + num(fit.residual_norm)));
  bool within = true;
  bool dominant = true;
  for (const auto& p : pts) {
    const double line = fit.coefficients[0] * p.sigma + fit.coefficients[1];
    within = within && std::abs(p.l1 - p.leading) <= std::abs(line) + 3.0 * fit.residual_norm;
    if (p.sigma <= 0.06) dominant = dominant && std::abs(p.defect) < std::abs(p.leading);
  }
  r.criteria.push_back(check("leading_within_defect",
                             "|quadrature - leading| within the fitted defect magnitude; leading dominates for sigma <= 0.06",
                             within && dominant));
}

// ---- jutila ----------------------------------------------------------------

void jutila_suite(Context& ctx, SuiteResult& r) {
  const auto ss = grid_or(ctx.config(), "s", {0.1, 0.5, 1, 2, 3});
  r.grid["s"] = ss;
  const auto& t = ctx.sieve(100'000);
  const auto pts = laplace::jutila_sweep(ss, t, ctx.quadrature());
  Table tab{"jutila",
            {"s", "l1_re", "l1_im", "main_re", "main_im", "lambda1_re", "lambda1_im", "abs_lambda1",
             "series_terms", "series_tail_bound", "quadrature_tail_bound"},
            {}};
  bool bound_ok = true;
  bool trend_ok = true;
  std::string detail;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const double a = std::abs(p.lambda1);
    tab.rows.push_back({p.s, p.l1.real(), p.l1.imag(), p.main_expr.real(), p.main_expr.imag(), p.lambda1.real(),
                        p.lambda1.imag(), a, static_cast<std::int64_t>(p.series_terms), p.series_tail_bound,
                        p.quadrature_tail_bound});
    bound_ok = bound_ok && a <= 1.5;
    if (i > 0) trend_ok = trend_ok && a <= std::abs(pts[i - 1].lambda1);
    detail += (detail.empty() ? "" : ", ") + num(a);
  }
  r.tables.push_back(std::move(tab));
  r.criteria.push_back(check("lambda_bound", "|lambda1(s)| <= 1.5 on the grid", bound_ok, detail));
  r.criteria.push_back(check("lambda_trend", "|lambda1(s)| non-increasing along the grid", trend_ok, detail));
}

// ---- atkinson --------------------------------------------------------------

void atkinson_suite(Context& ctx, SuiteResult& r) {
  std::vector<double> fallback;
  for (int i = 0; i < 8; ++i) {
    const double lo = std::log(1.0 / 3000.0);
    const double hi = std::log(1.0 / 200.0);
    fallback.push_back(std::exp(lo + (hi - lo) * i / 7.0));
  }
  fallback.front() = 1.0 / 3000.0;
  fallback.back() = 1.0 / 200.0;
  const auto sigmas = grid_or(ctx.config(), "sigma", fallback);
  r.grid["sigma"] = sigmas;
  const auto rep = laplace::atkinson_L2(sigmas, ctx.quadrature());
  Table tab{"atkinson", {"sigma", "L2", "sigma_L2", "tail_bound"}, {}};
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    const double v = rep.values[i].value.real();
    tab.rows.push_back({sigmas[i], v, sigmas[i] * v, rep.values[i].tail_bound});
  }
  r.tables.push_back(std::move(tab));
  Table fit{"atkinson_fit", {"variant", "A", "B", "c2", "c3", "c4", "rms"}, {}};
  for (const auto* f : {&rep.unpinned, &rep.pinned}) {
    std::vector<Cell> row{std::string(f == &rep.pinned ? "A_pinned" : "unpinned")};
    for (double c : f->coefficients) row.push_back(c);
    row.push_back(f->residual_norm);
    fit.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(fit));

  const double A = laplace::atkinson_A();
  const double a_rel = std::abs(rep.unpinned.coefficients[0] - A) / A;
  r.criteria.push_back(check("A_unpinned", "unpinned quartic fit recovers A = 1/(2 pi^2) within 25%", a_rel <= 0.25,
                             "A " + num(rep.unpinned.coefficients[0]) + ", rel " + num(a_rel)));
  const double B = rep.pinned.coefficients[1];
  const double Bf = rep.B_formula;
  r.criteria.push_back(check("B_sign", "pinned-A fit: B has the sign of the closed-form B", (B > 0) == (Bf > 0),
                             "fitted " + num(B) + ", closed form " + num(Bf)));
  const double mag = std::abs(std::log10(std::abs(B) / std::abs(Bf)));
  r.criteria.push_back(check("B_magnitude", "pinned-A fit: |B| within a factor 10 of the closed form", mag <= 1.0,
                             "log10 ratio " + num(mag)));
  const double corrected = std::abs(B + Bf) / std::abs(Bf);
  r.criteria.push_back(check("B_sign_corrected", "pinned-A fit vs the closed form with its overall sign flipped (5%)",
                             corrected <= 0.05, "rel " + num(corrected), false));
}

// ---- moments ---------------------------------------------------------------

void moments_suite(Context& ctx, SuiteResult& r) {
  const auto Ts = grid_or(ctx.config(), "T", {100, 1000, 5000});
  r.grid["T"] = Ts;
  const auto quad = ctx.quadrature();

  Table e{"moments_E", {"T", "I1", "main", "E", "bound", "quadrature_change"}, {}};
  bool e_ok = true;
  std::string detail;
  for (double T : Ts) {
    ctx.deadline().check("moments");
    const auto m = zeta::moment_I1(T, quad);
    const double bound = 3.0 * std::pow(T, 0.35);
    e.rows.push_back({T, m.I_value, m.main_term, m.error_term, bound, m.quadrature_change});
    e_ok = e_ok && std::abs(m.error_term) <= bound;
    detail += (detail.empty() ? "" : ", ") + num(m.error_term) + "/" + num(bound);
  }
  r.tables.push_back(std::move(e));
  r.criteria.push_back(check("E_bound", "|E(T)| <= 3 T^0.35", e_ok, detail));

  const auto grid = moment_i2_grid();
  const auto sweep = zeta::moment_sweep(2, grid, quad);
  Table i2{"moments_I2", {"T", "I2", "main", "E2"}, {}};
  std::vector<double> ys;
  bool monotone = true;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const auto& m = sweep[i];
    i2.rows.push_back({m.T, m.I_value, m.main_term, m.error_term});
    ys.push_back(m.I_value / m.T);
    if (i > 0) monotone = monotone && m.I_value >= sweep[i - 1].I_value;
  }
  r.tables.push_back(std::move(i2));
  std::vector<std::optional<double>> pins(5);
  const auto fit = fit_polynomial("I2(T) / T quartic in log T", grid, ys, 4, pins,
                                  [](double T) { return std::log(T); });
  const double a0 = 1.0 / (2.0 * kPi * kPi);
  const double rel = std::abs(fit.coefficients[0] - a0) / a0;
  r.criteria.push_back(check("I2_leading", "unpinned quartic fit of I2 over T in [1e3, 3e4]: a0 within 25% of 1/(2 pi^2)",
                             rel <= 0.25, "a0 " + num(fit.coefficients[0]) + ", rel " + num(rel)));
  r.criteria.push_back(check("I2_monotone", "I2(T) non-decreasing over the fit grid", monotone));

  const std::vector<double> sandwich_T = {200, 500, 1000};
  Table sw{"moments_sandwich", {"T", "k", "I", "L", "e_L", "converse", "tail_bound"}, {}};
  bool sandwich = true;
  double worst_conv = 0.0;
  for (int k : {1, 2}) {
    for (const auto& p : laplace::lk_bound_diagnostic(k, sandwich_T, quad)) {
      sw.rows.push_back({p.T, std::int64_t{k}, p.I, p.L, std::numbers::e * p.L, p.converse, p.tail_bound});
      sandwich = sandwich && p.sandwich;
      worst_conv = std::max(worst_conv, std::abs(p.L - p.converse) / p.L);
    }
  }
  r.tables.push_back(std::move(sw));
  r.criteria.push_back(check("sandwich", "I_k(T) <= e L_k(1/T) for k = 1, 2 and T in {200, 500, 1000}", sandwich));
  r.criteria.push_back(check("converse", "L_k(1/T) equals (1/T) int I_k(t) e^{-t/T} dt to 1e-6 relative",
                             worst_conv <= 1e-6, "worst rel " + num(worst_conv)));
}

// ---- funceq ----------------------------------------------------------------

void funceq_suite(Context& ctx, SuiteResult& r) {
  const auto quad = ctx.quadrature();
  const auto grid = funceq::default_grid();
  std::vector<funceq::Theorem3Result> res(grid.size());
  std::vector<funceq::Theorem3Result> scaled(grid.size());
  constexpr double kLambda = 3.0;
  parallel_for(grid.size(), ctx.config().threads, [&](std::size_t i) {
    res[i] = funceq::verify_theorem3(grid[i], quad);
    auto p = grid[i];
    p.h_of_w *= kLambda;
    scaled[i] = funceq::verify_theorem3(p, quad);
  });
  Table tab{"funceq", {"c", "w", "h", "integral", "target", "residual", "horizon"}, {}};
  double worst = 0.0;
  double worst_scale = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& x = res[i];
    tab.rows.push_back({x.params.c, x.params.w, x.params.h_of_w, x.integral, x.target, x.residual, x.horizon});
    worst = std::max(worst, x.residual);
    worst_scale = std::max(worst_scale, std::abs(scaled[i].integral - kLambda * x.integral) / kLambda);
  }
  r.tables.push_back(std::move(tab));
  r.criteria.push_back(check("theorem3", "residual <= 1e-8 on the grid, both branches", worst <= 1e-8,
                             "worst " + num(worst)));
  r.criteria.push_back(check("h_scaling", "h -> 3h scales the integral by 3 (to 1e-8)", worst_scale <= 1e-8,
                             "worst " + num(worst_scale)));

  Table hay{"funceq_hayman", {"w", "integral", "target", "residual", "horizon"}, {}};
  double worst_h = 0.0;
  for (double w : {0.5, 0.9, 0.99}) {
    const auto h = funceq::hayman_check(w, quad);
    hay.rows.push_back({h.w, h.integral, h.target, h.residual, h.horizon});
    worst_h = std::max(worst_h, h.residual);
  }
  r.tables.push_back(std::move(hay));
  r.criteria.push_back(check("hayman", "exponential case exact to 1e-10", worst_h <= 1e-10, "worst " + num(worst_h)));
}

// ---- mellin ----------------------------------------------------------------

void mellin_suite(Context& ctx, SuiteResult& r) {
  const auto quad = ctx.quadrature();
  const std::complex<double> zs[] = {{1.0, 0.0}, {2.0, 1.0}, {0.5, 0.5}, {3.0, -2.0}};
  const auto cs = grid_or(ctx.config(), "s", {0.5, 1.0, 2.0});
  r.grid["c"] = cs;
  Table tab{"mellin", {"z_re", "z_im", "c", "height", "integral_re", "integral_im", "residual"}, {}};
  double worst = 0.0;
  double spread = 0.0;
  for (auto z : zs) {
    std::vector<std::complex<double>> vals;
    for (double c : cs) {
      ctx.deadline().check("mellin");
      const auto m = laplace::mellin_gamma_check(z, c, quad);
      tab.rows.push_back({z.real(), z.imag(), c, m.height, m.integral.real(), m.integral.imag(), m.residual});
      worst = std::max(worst, m.residual);
      for (auto v : vals) spread = std::max(spread, std::abs(v - m.integral));
      vals.push_back(m.integral);
    }
  }
  r.tables.push_back(std::move(tab));
  r.criteria.push_back(check("inversion", "|e^{-z} - inverse Mellin integral| <= 1e-6", worst <= 1e-6,
                             "worst " + num(worst)));
  r.criteria.push_back(check("c_invariance", "integral independent of c to 1e-6", spread <= 1e-6,
                             "spread " + num(spread)));
}

}  // namespace

SuiteResult run_suite(Command c, Context& ctx) {
  SuiteResult r;
  r.suite = to_string(c);
  try {
    switch (c) {
      case Command::sieve: sieve_suite(ctx, r); break;
      case Command::errterm: errterm_suite(ctx, r); break;
      case Command::series: series_suite(ctx, r); break;
      case Command::correlations: correlations_suite(ctx, r); break;
      case Command::theorem4: theorem4_suite(ctx, r); break;
      case Command::theorem5: theorem5_suite(ctx, r); break;
      case Command::kober: kober_suite(ctx, r); break;
      case Command::jutila: jutila_suite(ctx, r); break;
      case Command::atkinson: atkinson_suite(ctx, r); break;
      case Command::moments: moments_suite(ctx, r); break;
      case Command::funceq: funceq_suite(ctx, r); break;
      case Command::mellin: mellin_suite(ctx, r); break;
      case Command::all:
      case Command::calibrate: throw ConfigError("run_suite: not a single suite");
    }
  } catch (const BudgetError& e) {
    r.partial = true;
    r.note = e.what();
  }
  return r;
}

}  // namespace latlab::cli
