#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/special_functions/zeta.hpp>

#include "common.hpp"
#include "latlab/error.hpp"
#include "latlab/special.hpp"
#include "latlab/zeta.hpp"

using namespace latlab::zeta;
using cplx = std::complex<double>;

TEST_SUITE("zeta") {

TEST_CASE("Euler-Maclaurin on the real line against Boost") {
  for (double s : {-3.5, -1.0, 0.0, 0.5, 0.9, 1.1, 2.0, 3.0, 10.0}) {
    const double want = boost::math::zeta(s);
    CHECK(std::abs(zeta_em(cplx(s, 0.0)).real() - want) <= 1e-10 * std::max(1.0, std::abs(want)));
  }
  CHECK(zeta_em(2.0, 1e-14).real() == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-13));
  CHECK(zeta_em(-1.0, 1e-14).real() == doctest::Approx(-1.0 / 12).epsilon(1e-13));
}

TEST_CASE("Euler-Maclaurin off the line against mpmath") {
  // tests/oracles/zeta_refs.py
  const struct {
    cplx s, z;
  } refs[] = {
      {{0.5, 10.0}, {1.5448952202967527669, -0.11533646527127337544}},
      {{0.5, 49.0}, {0.66641831144925627046, -0.2036629656454079746}},
      {{2.0, 30.0}, {0.82587982431582637523, -0.26903382749730631099}},
      {{-1.5, 20.0}, {-4.8569772204705677381, -8.774823385208828581}},
      {{0.5, 200.0}, {4.5905773749690526592, -3.1894012475791441342}},
  };
  for (const auto& r : refs) CHECK(std::abs(zeta_em(r.s) - r.z) < 1e-9);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(zeta_em(1.0), latlab::DomainError);
  CHECK_THROWS_AS(zeta_em(cplx(0.5, 1e7), 1e-10, 1000), latlab::BudgetError);
  CHECK_THROWS_AS(hardy_z(20.0), latlab::DomainError);
  CHECK_THROWS_AS(riemann_siegel_theta(5.0), latlab::DomainError);
}

TEST_CASE("functional equation on a 50-point grid") {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double sigma = -2.0 + 5.0 * (i % 10) / 9.0;
    const double t = (i % 2 ? -1.0 : 1.0) * (1.0 + 49.0 * (i / 10) / 4.0);
    const cplx s(sigma, t);
    worst = std::max(worst, std::abs(zeta_em(s) - latlab::special::chi(s) * zeta_em(1.0 - s)));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("theta and Z against mpmath") {
  CHECK(riemann_siegel_theta(60.0) == doctest::Approx(37.301673020532934592).epsilon(1e-14));
  CHECK(riemann_siegel_theta(100.0) == doctest::Approx(87.972165231787219625).epsilon(1e-14));
  CHECK(riemann_siegel_theta(1000.0) == doctest::Approx(2034.5464280380316087).epsilon(1e-14));
  // Accuracy is set by the first omitted correction, C5, largest at low t.
  CHECK(std::abs(hardy_z(60.0) - 0.58695049071087436762) < 3e-7);
  CHECK(std::abs(hardy_z(100.0) - 2.692697056664463475) < 1e-7);
  CHECK(std::abs(hardy_z(1000.0) - 0.99779463752158661399) < 1e-8);
  // Sign change around the 100th zero, 236.5242296658162058.
  CHECK(hardy_z(236.52) * hardy_z(236.53) < 0.0);
  CHECK(std::abs(hardy_z(236.5242296658162058)) < 1e-7);
}

TEST_CASE("Euler-Maclaurin and Riemann-Siegel agree for 50 <= t <= 2000") {
  double worst = 0.0;
  for (double t = 50.0; t <= 2000.0; t += 48.75) {
    const double em = std::abs(zeta_em(cplx(0.5, t), 1e-12));
    worst = std::max(worst, std::abs(em - zeta_rs_mod(t)));
  }
  CHECK(worst <= 1e-4);
}

TEST_CASE("critical-line value switches path continuously") {
  CHECK(std::abs(zeta_critical(49.999) - zeta_critical(50.0)) < 1e-2);
  CHECK(std::abs(zeta_critical(-30.0) - std::conj(zeta_critical(30.0))) == 0.0);
  CHECK(zeta_abs2_critical(100.0) == doctest::Approx(std::norm(zeta_critical(100.0))).epsilon(1e-12));
}

TEST_CASE("zeta'(2)") {
  CHECK(zeta_prime_2() == doctest::Approx(-0.93754825431584375370).epsilon(1e-13));
}

TEST_CASE("Dirichlet series of zeta^2") {
  const auto& t = sieve(100'000);
  // Tail sum_{n > N} d(n) n^{-2} ~ (log N + 2 gamma) / N.
  CHECK(dirichlet_square_check(2.0, 100'000, t) < 2e-4);
  CHECK(dirichlet_square_check(cplx(3.0, 5.0), 1000, t) < 1e-5);
}

TEST_CASE("grid report") {
  const double ts[] = {10.0, 60.0};
  const auto g = zeta_grid(ts, 2);
  CHECK(g.methods[0] == ZetaMethod::euler_maclaurin);
  CHECK(g.methods[1] == ZetaMethod::riemann_siegel);
  const auto csv = to_csv(g);
  CHECK(csv.rfind("t,re,im,abs,method\n10,", 0) == 0);
  const double bad[] = {5.0, 5.0};
  CHECK_THROWS_AS(zeta_grid(bad), latlab::DomainError);
}

TEST_CASE("I1(100) against mpmath quadrature") {
  latlab::QuadratureConfig q;
  const auto m = moment_I1(100.0, q);
  // Limited by the Riemann-Siegel truncation on [50, 100].
  CHECK(m.I_value == doctest::Approx(295.6350990547191).epsilon(5e-8));
  CHECK(m.quadrature_change < 1e-6 * m.I_value);
  CHECK(m.main_term == doctest::Approx(moment_I1_main(100.0)));
}

TEST_CASE("moments are non-decreasing and the frozen I2 main term is used") {
  latlab::QuadratureConfig q;
  const double Ts[] = {20.0, 50.0, 100.0, 200.0, 400.0};
  for (int k : {1, 2}) {
    const auto sweep = moment_sweep(k, Ts, q);
    for (std::size_t i = 1; i < sweep.size(); ++i) CHECK(sweep[i].I_value >= sweep[i - 1].I_value);
  }
  const auto m2 = moment_I2(1000.0, q);
  CHECK(m2.main_term == doctest::Approx(moment_I2_main(1000.0)));
  CHECK(m2.quadrature_change < q.refine_tol * m2.I_value);
}

TEST_CASE("panel widths follow the oscillation scale") {
  CHECK(panel_width(10.0, 1.0) == doctest::Approx(1.0));
  CHECK(panel_width(1e4, 1.0) == doctest::Approx(2.0 * std::numbers::pi / std::log(1e4)));
  CHECK(panel_width(1e4, 0.5) == doctest::Approx(std::numbers::pi / std::log(1e4)));
}

}  // TEST_SUITE
