#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <numbers>

#include "latlab_cli/fits.hpp"
#include "latlab/error.hpp"
#include "latlab/format.hpp"
#include "latlab/frozen.hpp"
#include "latlab/laplace.hpp"
#include "latlab_cli/cli.hpp"

namespace latlab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// UTC date of the run; SOURCE_DATE_EPOCH pins it for reproducible output.
std::string today() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) now = static_cast<std::time_t>(std::atoll(epoch));
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[16];
  std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
  return buf;
}

std::string describe(const std::vector<double>& g) {
  if (g.size() <= 4) {
    std::string s;
    for (double v : g) s += (s.empty() ? "" : ", ") + format_number(v);
    return s;
  }
  return std::to_string(g.size()) + " points in [" + format_number(g.front()) + ", " + format_number(g.back()) + "]";
}

Table fit_table(const FitReport& f) {
  Table t{"calibration_fit", {"index", "coefficient", "pinned"}, {}};
  for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
    t.rows.push_back({static_cast<std::int64_t>(i), f.coefficients[i], std::string(f.pinned[i] ? "yes" : "no")});
  }
  return t;
}

void calibrate_motohashi(Context& ctx, SuiteResult& r) {
  const double x_max = 1e6;
  const std::vector<std::uint64_t> hs = {1, 2, 3, 4, 5, 6, 7, 8};
  const auto& t = ctx.sieve(static_cast<std::uint64_t>(x_max) + 9);
  const auto grid = motohashi_x_grid(x_max);
  r.grid["x"] = grid;
  r.grid["h"] = {1, 2, 3, 4, 5, 6, 7, 8};
  const auto pinned = fit_motohashi(t, grid, hs, true);
  const auto free = fit_motohashi(t, grid, hs, false);

  frozen::MotohashiCoefficients m;
  m.c = pinned.c;
  m.c[2][0] = 6.0 / (kPi * kPi);
  m.c[2][1] = 0.0;
  m.c[2][2] = 0.0;
  m.fixed[2][0] = m.fixed[2][1] = m.fixed[2][2] = true;
  m.provenance = {"motohashi", "latlab calibrate motohashi", today(),
                  "x: " + describe(grid) + " (log-spaced integers); h = 1..8",
                  "joint least squares of S(x, h) / x; rms " + format_number(pinned.rms) +
                      "; unpinned c20 = " + format_number(free.c[2][0])};
  r.files.emplace_back("motohashi.cfg", frozen::write_motohashi(m));

  Table tab{"calibration_motohashi", {"coefficient", "value", "fixed"}, {}};
  for (int i = 2; i >= 0; --i) {
    for (int j = 0; j < 3; ++j) {
      tab.rows.push_back({"c" + std::to_string(i) + std::to_string(j), m.c[i][j],
                          std::string(m.fixed[i][j] ? "yes" : "no")});
    }
  }
  r.tables.push_back(std::move(tab));
  const double target = 6.0 / (kPi * kPi);
  const double rel = std::abs(free.c[2][0] - target) / target;
  r.criteria.push_back({"leading_free", "unpinned c20 within 10% of 6/pi^2", rel <= 0.1, true,
                        "c20 " + format_number(free.c[2][0])});
}

void calibrate_theorem5(Context& ctx, SuiteResult& r) {
  std::vector<double> fallback;
  for (double T = 200; T <= 2000; T += 200) fallback.push_back(T);
  const auto Ts = grid_or(ctx.config(), "T", fallback);
  r.grid["T"] = Ts;
  double tmax = 0.0;
  for (double T : Ts) tmax = std::max(tmax, T);
  const auto& c = ctx.constant(laplace::ConstantKind::d_squared);
  const auto& t = ctx.sieve(static_cast<std::uint64_t>(40.0 * tmax) + 2);
  const auto fit = laplace::fit_theorem5_p2(Ts, t, c);
  const frozen::Provenance p{"theorem5_p2", "latlab calibrate theorem5_p2", today(), "T: " + describe(Ts),
                             "least squares of (leading - lhs) / T; rms " + format_number(fit.residual_norm)};
  r.files.emplace_back("theorem5_p2.cfg",
                       frozen::write_fit(fit, p, "Quadratic P2(log T) of the divisor mean-square transform."));
  r.tables.push_back(fit_table(fit));
  r.criteria.push_back({"a0_positive", "fitted P2 has a positive leading coefficient", fit.coefficients[0] > 0.0, true,
                        "a0 " + format_number(fit.coefficients[0])});
}

void calibrate_moment_i2(Context& ctx, SuiteResult& r) {
  const auto Ts = grid_or(ctx.config(), "T", moment_i2_grid());
  r.grid["T"] = Ts;
  const auto quad = ctx.quadrature();
  const auto fit = fit_moment_i2(Ts, true, quad);
  const auto free = fit_moment_i2(Ts, false, quad);
  const frozen::Provenance p{"moment_i2", "latlab calibrate moment_i2", today(), "T: " + describe(Ts),
                             "a0 pinned to 1/(2 pi^2); rms " + format_number(fit.residual_norm) +
                                 "; unpinned a0 = " + format_number(free.coefficients[0])};
  r.files.emplace_back("moment_i2.cfg",
                       frozen::write_fit(fit, p, "Quartic main term of the fourth moment, a0..a4 in log T."));
  r.tables.push_back(fit_table(fit));
  const double a0 = 1.0 / (2.0 * kPi * kPi);
  const double rel = std::abs(free.coefficients[0] - a0) / a0;
  r.criteria.push_back({"leading_free", "unpinned a0 within 25% of 1/(2 pi^2)", rel <= 0.25, true,
                        "a0 " + format_number(free.coefficients[0])});
}

}  // namespace

SuiteResult run_calibration(const std::string& target, Context& ctx) {
  SuiteResult r;
  r.suite = "calibrate_" + target;
  try {
    if (target == "motohashi") calibrate_motohashi(ctx, r);
    else if (target == "theorem5_p2") calibrate_theorem5(ctx, r);
    else if (target == "moment_i2") calibrate_moment_i2(ctx, r);
    else throw ConfigError("unknown calibration target '" + target + "'");
  } catch (const BudgetError& e) {
    r.partial = true;
    r.note = e.what();
  }
  return r;
}

}  // namespace latlab::cli
