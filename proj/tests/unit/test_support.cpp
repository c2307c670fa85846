#include <doctest.h>

#include <atomic>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "latlab/error.hpp"
#include "latlab/fit.hpp"
#include "latlab/format.hpp"
#include "latlab/frozen.hpp"
#include "latlab/kvconfig.hpp"
#include "latlab/parallel.hpp"
#include "latlab/quadrature.hpp"

using namespace latlab;

TEST_SUITE("support") {

TEST_CASE("number format") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-2.5) == "-2.5");
  CHECK(format_number(std::numbers::pi) == "3.14159265359");
  CHECK(format_number(123456.789012345) == "123456.789012");
  CHECK(format_number(1e-4) == "0.0001");
  CHECK(format_number(9.99e-5) == "9.99000000000e-05");
  CHECK(format_number(1e8) == "1.00000000000e+08");
  CHECK(format_number(99999999.4) == "99999999.4");
  CHECK(format_number(NAN) == "nan");
}

TEST_CASE("key-value config") {
  const auto c = KeyValueConfig::parse("# comment\ntop = 1\n[run]\n  command = theorem4 \n; other\n[grid]\nT = 200, 500\n");
  CHECK(c.get("", "top") == "1");
  CHECK(c.require("run", "command") == "theorem4");
  CHECK(parse_double_list(c.require("grid", "T")) == std::vector<double>{200.0, 500.0});
  CHECK_FALSE(c.has("run", "missing"));
  CHECK_THROWS_AS(c.require("run", "missing"), ConfigError);
  CHECK_THROWS_AS(KeyValueConfig::parse("[run\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(KeyValueConfig::parse("no equals sign\n"), ConfigError);
  CHECK_THROWS_AS(parse_double_list("1, two"), ConfigError);
  CHECK_THROWS_AS(KeyValueConfig::load("/nonexistent/latlab.cfg"), ConfigError);
}

TEST_CASE("polynomial fit recovers exact coefficients and honours pins") {
  std::vector<double> x, y;
  for (double v = 1.0; v <= 10.0; v += 0.5) {
    x.push_back(v);
    y.push_back(2.0 * v * v - 3.0 * v + 0.5);
  }
  std::vector<std::optional<double>> none(3);
  const auto f = fit_polynomial("q", x, y, 2, none, [](double v) { return v; });
  CHECK(f.coefficients[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f.coefficients[1] == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(f.coefficients[2] == doctest::Approx(0.5).epsilon(1e-11));
  CHECK(f.residual_norm < 1e-10);
  std::vector<std::optional<double>> pin(3);
  pin[0] = 1.0;
  const auto g = fit_polynomial("q", x, y, 2, pin, [](double v) { return v; });
  CHECK(g.coefficients[0] == 1.0);
  CHECK(g.pinned[0]);
  CHECK(g.residual_norm > 1.0);
  CHECK(polyval_desc(f.coefficients, 2.0) == doctest::Approx(2.5));
  const double xs[] = {1.0, 10.0, 100.0};
  const double ys[] = {2.0, 20.0, 200.0};
  CHECK(loglog_slope(xs, ys) == doctest::Approx(1.0));
}

TEST_CASE("frozen data parse and round trip") {
  const auto& m = frozen::motohashi();
  CHECK(m.c[2][0] == doctest::Approx(6.0 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-15));
  CHECK(m.fixed[2][0]);
  CHECK(m.provenance.generated_by == "latlab calibrate motohashi");
  const auto& p2 = frozen::theorem5_p2();
  REQUIRE(p2.coefficients.size() == 3);
  CHECK(p2.coefficients[0] > 0.0);
  const auto& i2 = frozen::moment_i2();
  REQUIRE(i2.coefficients.size() == 5);
  CHECK(i2.pinned[0]);
  CHECK(i2.coefficients[0] == doctest::Approx(1.0 / (2.0 * std::numbers::pi * std::numbers::pi)).epsilon(1e-15));
  // write -> parse is lossless
  const auto text = frozen::write_fit(p2, frozen::theorem5_p2_provenance(), "round trip");
  const auto back = frozen::parse_fit(KeyValueConfig::parse(text));
  CHECK(back.coefficients == p2.coefficients);
  CHECK(back.grid == p2.grid);
  const auto mt = frozen::parse_motohashi(KeyValueConfig::parse(frozen::write_motohashi(m)));
  CHECK(mt.c == m.c);
  CHECK(frozen::all_provenance().size() == 3);
}

TEST_CASE("frozen Motohashi data must keep the structural coefficients") {
  auto text = std::string(frozen::raw("motohashi"));
  const auto pos = text.find("c21 = 0");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 7, "c21 = 1");
  CHECK_THROWS_AS(frozen::parse_motohashi(KeyValueConfig::parse(text)), FitError);
}

TEST_CASE("Gauss-Legendre rules") {
  const auto& g = gauss_legendre(12);
  CHECK(g.size() == 12);
  // exact for degree 23
  CHECK(g.integrate([](double x) { return std::pow(x, 22); }, -1.0, 1.0) == doctest::Approx(2.0 / 23.0).epsilon(1e-14));
  CHECK(integrate_panels([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 0.3, g) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(integrate_adaptive([](double x) { return std::sqrt(1.0 + x); }, 0.0, 1.0, 1e-12) ==
        doctest::Approx((2.0 / 3.0) * (2.0 * std::sqrt(2.0) - 1.0)).epsilon(1e-11));
}

TEST_CASE("deadline") {
  Deadline never;
  CHECK_NOTHROW(never.check("x"));
  const auto past = Deadline::after(std::chrono::duration<double>(-1.0));
  CHECK(past.expired());
  CHECK_THROWS_AS(past.check("x"), BudgetError);
}

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(100, 3,
                               [](std::size_t i) {
                                 if (i == 57) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
  CHECK(hardware_threads() >= 1);
}

}  // TEST_SUITE
