#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "common.hpp"
#include "latlab/error.hpp"
#include "latlab/special.hpp"

using namespace latlab::special;
namespace bm = boost::math;
using cplx = std::complex<double>;

namespace {

// Sample points spanning all branch switches.
const double kXs[] = {1e-6, 1e-3, 0.1, 0.5, 1.0, 1.9, 2.1, 3.7, 7.5, 12.0, 15.2, 17.9,
                      18.1, 20.5, 24.9, 25.1, 40.0, 77.7, 150.0, 333.3, 1000.0};

// Relative error, or absolute error scaled by the envelope near zeros.
double err(double got, double want, double scale) {
  return std::abs(got - want) / std::max(std::abs(want), scale);
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("J1 and Y1 against Boost") {
  for (double x : kXs) {
    const double env = std::min(1.0, std::sqrt(2.0 / (std::numbers::pi * x)));
    CHECK(err(bessel_j1(x), bm::cyl_bessel_j(1, x), env) < 1e-12);
    CHECK(err(bessel_y1(x), bm::cyl_neumann(1, x), env) < 1e-12);
  }
}

TEST_CASE("K1, I0, I1 and the scaled forms against Boost") {
  for (double x : kXs) {
    if (x < 700.0) {  // K1 underflows past ~705
      CHECK(rel_err(bessel_k1(x), bm::cyl_bessel_k(1, x)) < 1e-12);
      CHECK(rel_err(bessel_i0(x), bm::cyl_bessel_i(0, x)) < 1e-12);
      CHECK(rel_err(bessel_i1(x), bm::cyl_bessel_i(1, x)) < 1e-12);
    }
    if (x < 600.0) {
      CHECK(rel_err(bessel_i0_scaled(x), std::exp(-x) * bm::cyl_bessel_i(0, x)) < 1e-12);
      CHECK(rel_err(bessel_i1_scaled(x), std::exp(-x) * bm::cyl_bessel_i(1, x)) < 1e-12);
    }
  }
}

TEST_CASE("series and asymptotic branches agree on the overlap window") {
  for (double x = 15.0; x <= 21.0; x += 0.25) {
    CHECK(std::abs(branch::j1_series(x) - branch::j1_asymptotic(x, 40)) < 1e-8);
    CHECK(std::abs(branch::y1_series(x) - branch::y1_asymptotic(x, 40)) < 1e-8);
    CHECK(rel_err(branch::i_scaled_series(0, x), branch::i_scaled_asymptotic(0, x, 40)) < 1e-8);
    CHECK(rel_err(branch::i_scaled_series(1, x), branch::i_scaled_asymptotic(1, x, 40)) < 1e-8);
  }
  for (double x = 1.5; x <= 3.0; x += 0.25) {
    CHECK(rel_err(branch::k1_series(x), branch::k1_continued_fraction(x)) < 1e-10);
  }
  for (double x = 20.0; x <= 30.0; x += 1.0) {
    CHECK(rel_err(branch::k1_continued_fraction(x), branch::k1_asymptotic(x, 40)) < 1e-10);
  }
}

TEST_CASE("Bessel derivative identities by central differences") {
  // J1' = J0 - J1/x, Y1' = Y0 - Y1/x, with J0, Y0 from the recurrence
  // J0 = J1' + J1/x checked against Boost.
  for (double x : {0.7, 3.3, 9.1, 16.0, 19.5, 31.0}) {
    const double h = 1e-5 * std::max(1.0, x);
    const double dj = (bessel_j1(x + h) - bessel_j1(x - h)) / (2 * h);
    const double dy = (bessel_y1(x + h) - bessel_y1(x - h)) / (2 * h);
    CHECK(std::abs(dj + bessel_j1(x) / x - bm::cyl_bessel_j(0, x)) < 1e-8);
    CHECK(std::abs(dy + bessel_y1(x) / x - bm::cyl_neumann(0, x)) < 1e-8);
    // Wronskian J1 Y1' - J1' Y1 = 2 / (pi x)
    CHECK(std::abs(bessel_j1(x) * dy - dj * bessel_y1(x) - 2.0 / (std::numbers::pi * x)) < 1e-8);
  }
}

TEST_CASE("three-term large-x form of I_nu") {
  // The first omitted term is O(x^-3).
  for (int nu : {0, 1}) {
    for (double x : {30.0, 100.0}) {
      CHECK(rel_err(bessel_i_three_term(nu, x), bm::cyl_bessel_i(nu, x)) < 0.2 / (x * x * x));
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bessel_y1(0.0), latlab::DomainError);
  CHECK_THROWS_AS(bessel_k1(-1.0), latlab::DomainError);
  CHECK_THROWS_AS(bessel_i0(701.0), latlab::RangeError);
  CHECK_THROWS_AS(log_gamma(cplx(-2.0, 0.0)), latlab::DomainError);
}

TEST_CASE("log Gamma against Boost on the real line and by recurrence off it") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 20.0, 171.5}) {
    CHECK(std::abs(log_gamma(cplx(x, 0.0)).real() - bm::lgamma(x)) < 1e-12 * std::max(1.0, bm::lgamma(x)));
  }
  CHECK(std::abs(gamma_complex(cplx(-2.5, 0.0)).real() - bm::tgamma(-2.5)) < 1e-13);
  // Gamma(s + 1) = s Gamma(s)
  for (cplx s : {cplx(0.3, 2.0), cplx(-3.7, 0.4), cplx(5.0, -40.0), cplx(0.25, 500.0)}) {
    const cplx lhs = log_gamma(s + 1.0);
    const cplx rhs = log_gamma(s) + std::log(s);
    const cplx d = std::exp(lhs - rhs);
    CHECK(std::abs(d - 1.0) < 1e-12);
  }
  // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
  for (double t : {1.0, 10.0, 50.0}) {
    const double lhs = 2.0 * log_gamma(cplx(0.5, t)).real();
    CHECK(std::abs(lhs - (std::log(std::numbers::pi) - std::log(std::cosh(std::numbers::pi * t)))) < 1e-11);
  }
}

TEST_CASE("log sin(pi z) against the direct formula") {
  for (cplx z : {cplx(0.3, 0.2), cplx(-1.7, 3.0), cplx(2.25, -8.0)}) {
    const cplx direct = std::log(std::sin(std::numbers::pi * z));
    const cplx d = std::exp(log_sin_pi(z) - direct);
    CHECK(std::abs(d - 1.0) < 1e-12);
  }
  // Large imaginary part: Re log sin(pi z) ~ pi |Im z| - log 2.
  const cplx big(0.4, 200.0);
  CHECK(std::abs(log_sin_pi(big).real() - (std::numbers::pi * 200.0 - std::log(2.0))) < 1e-9);
}

TEST_CASE("chi(s) chi(1 - s) = 1 on a 50-point grid") {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double sigma = -2.0 + 5.0 * (i % 10) / 9.0;
    const double t = (i / 10 % 2 ? -1.0 : 1.0) * (1.0 + 49.0 * (i / 10) / 4.0);
    const cplx s(sigma, t);
    worst = std::max(worst, std::abs(chi(s) * chi(1.0 - s) - 1.0));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("chi matches its large-t asymptotic") {
  for (double t : {100.0, 1000.0}) {
    const cplx s(0.5, t);
    CHECK(std::abs(chi(s) - chi_asymptotic(s)) < 0.1 / t);
  }
  // |chi(1/2 + it)| = 1
  CHECK(std::abs(std::abs(chi(cplx(0.5, 77.0))) - 1.0) < 1e-12);
}

}  // TEST_SUITE
