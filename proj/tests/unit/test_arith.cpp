#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "common.hpp"
#include "latlab/error.hpp"
#include "oracles.hpp"

using namespace latlab::arith;

TEST_SUITE("arith") {

TEST_CASE("sieve matches enumeration and trial division for n <= 1e4") {
  const auto& t = sieve(10'000);
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    REQUIRE(t.r(n) == oracle::r_brute(n));
    REQUIRE(t.d(n) == oracle::d_brute(n));
  }
}

TEST_CASE("hyperbola identity") {
  const auto& t = sieve(100'000);
  for (std::uint64_t N : {1ull, 2ull, 999ull, 1000ull, 65'536ull, 100'000ull}) {
    CHECK(t.d_prefix(N) == oracle::divisor_floor_sum(N));
  }
}

TEST_CASE("prefix sums count lattice points") {
  const auto& t = sieve(10'000);
  for (double x : {1.0, 2.0, 25.0, 100.0, 9999.0}) {
    CHECK(t.r_prefix(static_cast<std::uint64_t>(x)) + 1 == oracle::lattice_points(x));
  }
}

TEST_CASE("half-term convention at integers") {
  const auto& t = sieve(1000);
  for (std::uint64_t n : {5ull, 25ull, 65ull, 100ull, 997ull}) {
    const double left = summatory_r(Cutoff::real(n - 0.5), t);
    const double right = summatory_r(Cutoff::real(static_cast<double>(n)), t);
    CHECK(summatory_r(Cutoff::integer(n), t) == 0.5 * (left + right));
    CHECK(right - left == t.r(n));
    const double dl = summatory_d(Cutoff::real(n - 0.5), t);
    const double dr = summatory_d(Cutoff::real(static_cast<double>(n)), t);
    CHECK(summatory_d(Cutoff::integer(n), t) == 0.5 * (dl + dr));
  }
  // Known values: sum_{n<=10} d(n) = 27, sum'_{n<=10} d(n) = 27 - 2.
  CHECK(summatory_d(Cutoff::real(10.0), t) == 27.0);
  CHECK(summatory_d(Cutoff::integer(10), t) == 25.0);
}

TEST_CASE("summatory_r is non-decreasing") {
  const auto& t = sieve(1000);
  double prev = 0.0;
  for (double x = 0.0; x <= 1000.0; x += 0.37) {
    const double v = summatory_r(Cutoff::real(x), t);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("divisor sums") {
  CHECK(signed_divisor_sum(1) == -1);
  CHECK(signed_divisor_sum(2) == 1);   // -1 + 2
  CHECK(signed_divisor_sum(6) == 4);   // -1 + 2 - 3 + 6
  CHECK(signed_divisor_sum(8) == 13);  // -1 + 2 + 4 + 8
  CHECK(log_divisor_sum(6, 0) == doctest::Approx(1.0 + 0.5 + 1.0 / 3 + 1.0 / 6));
  CHECK(log_divisor_sum(4, 1) == doctest::Approx(std::log(2.0) / 2 + std::log(4.0) / 4));
}

TEST_CASE("correlation sums against a direct loop") {
  const auto& t = sieve(20'000);
  for (std::uint64_t h : {1ull, 2ull, 4ull, 7ull}) {
    std::uint64_t sr = 0, sd = 0;
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
      sr += oracle::r_brute(n) * oracle::r_brute(n + h);
      sd += oracle::d_brute(n) * oracle::d_brute(n + h);
    }
    const auto cr = correlation_r(10'000.0, h, t);
    const auto cd = correlation_d(10'000.0, h, t);
    CHECK(cr.exact_sum == static_cast<double>(sr));
    CHECK(cd.exact_sum == static_cast<double>(sd));
    // (-1)^h (8x/h) sum_{d|h} (-1)^d d
    const double main = (h % 2 ? -1.0 : 1.0) * 8.0 * 10'000.0 / h * signed_divisor_sum(h);
    CHECK(cr.main_term == doctest::Approx(main));
    CHECK(cr.residual == doctest::Approx(cr.exact_sum - main));
  }
}

TEST_CASE("Chamizo residual at h = 4, x = 1e4 stays below x^{2/3} scale") {
  const auto c = correlation_r(10'000.0, 4, sieve(20'000));
  CHECK(std::abs(c.residual) < 20.0 * std::pow(1e4, 0.7));
}

TEST_CASE("uniformity flag") {
  const auto& t = sieve(2000);
  CHECK(correlation_r(1000.0, 31, t).within_uniformity);
  CHECK_FALSE(correlation_r(1000.0, 32, t).within_uniformity);
}

TEST_CASE("range errors") {
  const auto& t = sieve(1000);
  CHECK_THROWS_AS(correlation_r(999.0, 5, t), latlab::RangeError);
  CHECK_THROWS_AS(build_sieve(1000, 100), latlab::RangeError);
}

TEST_CASE("sieve cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "latlab_unit_cache";
  std::filesystem::remove_all(dir);
  bool hit = true;
  const auto a = load_or_build_sieve(5000, dir, &hit);
  CHECK_FALSE(hit);
  const auto b = load_or_build_sieve(5000, dir, &hit);
  CHECK(hit);
  REQUIRE(b.limit() == 5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    REQUIRE(a.r(n) == b.r(n));
    REQUIRE(a.d(n) == b.d(n));
  }
  CHECK(b.r_prefix(5000) == a.r_prefix(5000));
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
