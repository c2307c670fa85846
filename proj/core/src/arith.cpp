#include "latlab/arith.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "latlab/error.hpp"
#include "latlab/frozen.hpp"

namespace latlab::arith {

__extension__ using u128 = unsigned __int128;

SieveTable::SieveTable(std::vector<std::uint32_t> r, std::vector<std::uint32_t> d)
    : r_(std::move(r)), d_(std::move(d)) {
  if (r_.size() != d_.size() || r_.size() < 2) {
    throw RangeError("SieveTable: r and d arrays must have equal length >= 2");
  }
  limit_ = r_.size() - 1;
  r_prefix_.resize(r_.size());
  d_prefix_.resize(d_.size());
  r_prefix_[0] = 0;
  d_prefix_[0] = 0;
  for (std::uint64_t n = 1; n <= limit_; ++n) {
    r_prefix_[n] = r_prefix_[n - 1] + r_[n];
    d_prefix_[n] = d_prefix_[n - 1] + d_[n];
  }
}

SieveTable build_sieve(std::uint64_t limit, std::uint64_t cap) {
  if (limit < 1) throw RangeError("build_sieve: limit must be >= 1");
  if (limit > cap) {
    throw RangeError("build_sieve: limit " + std::to_string(limit) + " exceeds cap " +
                     std::to_string(cap));
  }
  const std::size_t n_max = static_cast<std::size_t>(limit);

  std::vector<std::uint32_t> d(n_max + 1, 0);
  for (std::size_t k = 1; k <= n_max; ++k) {
    for (std::size_t m = k; m <= n_max; m += k) ++d[m];
  }

  // Linear sieve for the smallest prime factor.
  std::vector<std::uint32_t> spf(n_max + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i <= n_max; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || i * p > n_max) break;
      spf[i * p] = p;
    }
  }

  // r(n)/4 is multiplicative: prod over p = 1 mod 4 of (e + 1), zero if some
  // p = 3 mod 4 has odd exponent, and 2 contributes 1. Each n is split as
  // p^e * rest with p = spf(n) and gcd(p, rest) = 1.
  std::vector<std::uint32_t> r(n_max + 1, 0);
  std::vector<std::uint32_t> rest(n_max + 1, 1);
  std::vector<std::uint8_t> expo(n_max + 1, 0);
  r[1] = 1;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const std::uint32_t p = spf[n];
    const std::size_t q = n / p;
    if (q % p != 0) {
      expo[n] = 1;
      rest[n] = static_cast<std::uint32_t>(q);
    } else {
      expo[n] = static_cast<std::uint8_t>(expo[q] + 1);
      rest[n] = rest[q];
    }
    const unsigned e = expo[n];
    std::uint32_t local = 1;
    if (p % 4 == 1) {
      local = e + 1;
    } else if (p % 4 == 3) {
      local = (e % 2 == 0) ? 1 : 0;
    }
    r[n] = r[rest[n]] * local;
  }
  for (std::size_t n = 1; n <= n_max; ++n) r[n] *= 4;
  r[0] = 0;
  d[0] = 0;
  return SieveTable(std::move(r), std::move(d));
}

namespace {

template <class Prefix, class Value>
double summatory(Cutoff x, const SieveTable& table, Prefix prefix, Value value) {
  const double v = x.value();
  if (!(v >= 0.0) || v > static_cast<double>(table.limit())) {
    throw RangeError("summatory: x = " + std::to_string(v) + " outside [0, " +
                     std::to_string(table.limit()) + "]");
  }
  const auto k = static_cast<std::uint64_t>(std::floor(v));
  if (x.exact_integer()) {
    if (static_cast<double>(k) != v) throw DomainError("summatory: exact-integer cutoff is not integral");
    if (k == 0) return 0.0;
    return static_cast<double>(prefix(k)) - 0.5 * static_cast<double>(value(k));
  }
  return static_cast<double>(prefix(k));
}

void check_correlation_range(double x, std::uint64_t h, const SieveTable& table) {
  if (h < 1) throw DomainError("correlation: shift h must be >= 1");
  if (!(x >= 1.0)) throw RangeError("correlation: x must be >= 1");
  const auto k = static_cast<std::uint64_t>(std::floor(x));
  if (k + h > table.limit()) {
    throw RangeError("correlation: x + h exceeds sieve limit " + std::to_string(table.limit()));
  }
}

std::uint32_t value_of(Sequence which, const SieveTable& t, std::uint64_t n) {
  return which == Sequence::r ? t.r(n) : t.d(n);
}

double main_term_of(Sequence which, double x, std::uint64_t h) {
  if (which == Sequence::r) {
    const double sign = (h % 2 == 0) ? 1.0 : -1.0;
    return sign * 8.0 * x / static_cast<double>(h) * static_cast<double>(signed_divisor_sum(h));
  }
  return motohashi_main_term(x, h, frozen::motohashi().c);
}

CorrelationResult correlate(Sequence which, double x, std::uint64_t h, const SieveTable& table) {
  check_correlation_range(x, h, table);
  const auto k = static_cast<std::uint64_t>(std::floor(x));
  u128 acc = 0;
  for (std::uint64_t n = 1; n <= k; ++n) {
    acc += static_cast<std::uint64_t>(value_of(which, table, n)) * value_of(which, table, n + h);
  }
  CorrelationResult res;
  res.x = x;
  res.h = h;
  res.exact_sum = static_cast<double>(acc);
  res.main_term = main_term_of(which, x, h);
  res.residual = res.exact_sum - res.main_term;
  res.within_uniformity = static_cast<double>(h) * static_cast<double>(h) <= x;
  return res;
}

}  // namespace

double summatory_r(Cutoff x, const SieveTable& table) {
  return summatory(
      x, table, [&](std::uint64_t k) { return table.r_prefix(k); },
      [&](std::uint64_t k) { return table.r(k); });
}

double summatory_d(Cutoff x, const SieveTable& table) {
  return summatory(
      x, table, [&](std::uint64_t k) { return table.d_prefix(k); },
      [&](std::uint64_t k) { return table.d(k); });
}

std::int64_t signed_divisor_sum(std::uint64_t h) {
  std::int64_t s = 0;
  for (std::uint64_t dv = 1; dv * dv <= h; ++dv) {
    if (h % dv != 0) continue;
    const std::uint64_t other = h / dv;
    s += (dv % 2 == 0) ? static_cast<std::int64_t>(dv) : -static_cast<std::int64_t>(dv);
    if (other != dv) {
      s += (other % 2 == 0) ? static_cast<std::int64_t>(other) : -static_cast<std::int64_t>(other);
    }
  }
  return s;
}

double log_divisor_sum(std::uint64_t h, int j) {
  double s = 0.0;
  for (std::uint64_t dv = 1; dv <= h; ++dv) {
    if (h % dv != 0) continue;
    const double ld = std::log(static_cast<double>(dv));
    s += std::pow(ld, j) / static_cast<double>(dv);
  }
  return s;
}

double motohashi_main_term(double x, std::uint64_t h,
                           const std::array<std::array<double, 3>, 3>& c) {
  const double lx = std::log(x);
  std::array<double, 3> dsum{};
  for (int j = 0; j < 3; ++j) dsum[j] = log_divisor_sum(h, j);
  double total = 0.0;
  double lxi = 1.0;
  for (int i = 0; i < 3; ++i) {
    double inner = 0.0;
    for (int j = 0; j < 3; ++j) inner += c[i][j] * dsum[j];
    total += lxi * inner;
    lxi *= lx;
  }
  return x * total;
}

CorrelationResult correlation_r(double x, std::uint64_t h, const SieveTable& table) {
  return correlate(Sequence::r, x, h, table);
}

CorrelationResult correlation_d(double x, std::uint64_t h, const SieveTable& table) {
  return correlate(Sequence::d, x, h, table);
}

std::vector<double> correlation_sums(Sequence which, std::uint64_t h,
                                     std::span<const double> x_grid, const SieveTable& table) {
  std::vector<double> out;
  out.reserve(x_grid.size());
  if (x_grid.empty()) return out;
  check_correlation_range(x_grid.back(), h, table);
  u128 acc = 0;
  std::uint64_t n = 0;
  for (double x : x_grid) {
    const auto k = static_cast<std::uint64_t>(std::floor(x));
    if (k < n) throw DomainError("correlation_sums: grid must be sorted");
    for (; n < k;) {
      ++n;
      acc += static_cast<std::uint64_t>(value_of(which, table, n)) * value_of(which, table, n + h);
    }
    out.push_back(static_cast<double>(acc));
  }
  return out;
}

std::vector<double> correlation_residual_envelope(Sequence which, std::uint64_t h,
                                                  std::span<const double> x_grid,
                                                  const SieveTable& table) {
  std::vector<double> out;
  out.reserve(x_grid.size());
  if (x_grid.empty()) return out;
  check_correlation_range(x_grid.back(), h, table);
  u128 acc = 0;
  double envelope = 0.0;
  std::uint64_t n = 0;
  for (double x : x_grid) {
    const auto k = static_cast<std::uint64_t>(std::floor(x));
    if (k < n) throw DomainError("correlation_residual_envelope: grid must be sorted");
    for (; n < k;) {
      ++n;
      acc += static_cast<std::uint64_t>(value_of(which, table, n)) * value_of(which, table, n + h);
      const double res =
          static_cast<double>(acc) - main_term_of(which, static_cast<double>(n), h);
      envelope = std::max(envelope, std::abs(res));
    }
    out.push_back(envelope);
  }
  return out;
}

}  // namespace latlab::arith
