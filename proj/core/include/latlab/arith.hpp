#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

// Sieved arithmetic functions r(n), d(n), their summatory functions and
// shift-correlation sums.
namespace latlab::arith {

// Default memory cap on sieve construction (entries).
inline constexpr std::uint64_t kDefaultSieveCap = 60'000'000;

// r(n) = #{(a, b) in Z^2 : a^2 + b^2 = n} and d(n) = #{delta >= 1 : delta | n}
// for 1 <= n <= limit, with prefix sums. Immutable once built.
class SieveTable {
 public:
  SieveTable() = default;
  // Takes ownership of raw value arrays indexed 1..limit (index 0 unused and 0).
  SieveTable(std::vector<std::uint32_t> r, std::vector<std::uint32_t> d);

  std::uint64_t limit() const { return limit_; }
  std::uint32_t r(std::uint64_t n) const { return r_[n]; }
  std::uint32_t d(std::uint64_t n) const { return d_[n]; }
  // sum_{n <= k} r(n), k in [0, limit]
  std::uint64_t r_prefix(std::uint64_t k) const { return r_prefix_[k]; }
  std::uint64_t d_prefix(std::uint64_t k) const { return d_prefix_[k]; }

  // Whole arrays including the unused slot 0.
  std::span<const std::uint32_t> r_values() const { return r_; }
  std::span<const std::uint32_t> d_values() const { return d_; }

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> r_;
  std::vector<std::uint32_t> d_;
  std::vector<std::uint64_t> r_prefix_;
  std::vector<std::uint64_t> d_prefix_;
};

// O(N log N): d(n) by incrementing multiples; r(n) = 4 sum_{d|n} chi_4(d)
// from a smallest-prime-factor table. Throws RangeError above `cap`.
SieveTable build_sieve(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap);

// A summation cutoff. The half-term convention applies only when the caller
// states that x is an exact integer; no floating-point proximity test is made.
class Cutoff {
 public:
  static Cutoff integer(std::uint64_t n) { return Cutoff(static_cast<double>(n), true); }
  // x is taken as a real number; if it happens to be integral, the n = x term
  // is counted in full.
  static Cutoff real(double x) { return Cutoff(x, false); }

  double value() const { return x_; }
  bool exact_integer() const { return exact_; }

 private:
  Cutoff(double x, bool exact) : x_(x), exact_(exact) {}
  double x_;
  bool exact_;
};

// sum'_{1 <= n <= x} r(n); the n = x term is halved for exact integers.
double summatory_r(Cutoff x, const SieveTable& table);
// sum'_{1 <= n <= x} d(n).
double summatory_d(Cutoff x, const SieveTable& table);

struct CorrelationResult {
  double x = 0.0;
  std::uint64_t h = 0;
  // sum_{n <= x} f(n) f(n + h), accumulated exactly in 128 bits.
  double exact_sum = 0.0;
  double main_term = 0.0;
  double residual = 0.0;
  // 1 <= h <= sqrt(x), the range in which the main terms are uniform.
  bool within_uniformity = true;
};

// sum_{d|h} (-1)^d d
std::int64_t signed_divisor_sum(std::uint64_t h);
// sum_{d|h} (log d)^j / d
double log_divisor_sum(std::uint64_t h, int j);

// Chamizo: main term (-1)^h (8x/h) sum_{d|h} (-1)^d d.
CorrelationResult correlation_r(double x, std::uint64_t h, const SieveTable& table);
// Motohashi: main term x sum_i (log x)^i sum_j c_ij sum_{d|h} (log d)^j / d with
// the frozen c_ij.
CorrelationResult correlation_d(double x, std::uint64_t h, const SieveTable& table);
// Same main term with caller-supplied coefficients (used by calibration).
double motohashi_main_term(double x, std::uint64_t h,
                           const std::array<std::array<double, 3>, 3>& c);

enum class Sequence { r, d };

// Running envelope max_{1 <= y <= x} |exact(y) - main(y)| evaluated at each
// (sorted) grid point; integer y only.
std::vector<double> correlation_residual_envelope(Sequence which, std::uint64_t h,
                                                  std::span<const double> x_grid,
                                                  const SieveTable& table);

// Exact correlation sums sum_{n <= x} f(n) f(n+h) at every grid point (sorted).
std::vector<double> correlation_sums(Sequence which, std::uint64_t h,
                                     std::span<const double> x_grid, const SieveTable& table);

// Sieve cache file: "LATLAB01", N as u64 LE, then r[1..N] and d[1..N] as u32 LE.
void write_sieve_cache(const SieveTable& table, const std::filesystem::path& file);
SieveTable read_sieve_cache(const std::filesystem::path& file);
// $LATLAB_CACHE_DIR, else $XDG_CACHE_HOME/latlab, else ~/.cache/latlab.
std::filesystem::path default_cache_dir();
std::filesystem::path cache_file_for(const std::filesystem::path& dir, std::uint64_t limit);
// Reads dir/sieve_<limit>.bin if present, otherwise builds the table and
// writes that file.
SieveTable load_or_build_sieve(std::uint64_t limit, const std::filesystem::path& dir,
                               bool* cache_hit = nullptr);

}  // namespace latlab::arith
