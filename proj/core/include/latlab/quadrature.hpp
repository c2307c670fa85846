#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace latlab {

// Wall-clock limit shared by long-running computations. A default-constructed
// deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool expired() const { return at_ && Clock::now() >= *at_; }
  // Throws BudgetError naming `what` when the deadline has passed.
  void check(const char* what) const;

 private:
  std::optional<Clock::time_point> at_;
};

// Panel scheme shared by every semi-infinite or oscillatory integral.
struct QuadratureConfig {
  int nodes_per_panel = 12;
  // Multiplier on the oscillation-adapted panel width.
  double panel_scale = 1.0;
  // Semi-infinite integrals with decay e^{-rate x} stop at horizon_factor / rate.
  double horizon_factor = 40.0;
  // Relative disagreement allowed between a panel scheme and its refinement.
  double refine_tol = 1e-6;
  int threads = 1;
  Deadline deadline;
};

// Gauss-Legendre rule on [-1, 1], nodes ascending.
class GaussLegendre {
 public:
  explicit GaussLegendre(int n);

  int size() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  template <class F>
  auto integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    decltype(f(mid)) sum{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      sum += weights_[i] * f(mid + half * nodes_[i]);
    }
    return sum * half;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

// Cached rule; thread safe.
const GaussLegendre& gauss_legendre(int n);

// Composite rule on [a, b] with panels of width at most `width`.
template <class F>
auto integrate_panels(F&& f, double a, double b, double width, const GaussLegendre& rule) {
  decltype(f(a)) sum{};
  if (!(b > a)) return sum;
  const auto panels = static_cast<std::size_t>(std::ceil((b - a) / width));
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t k = 0; k < panels; ++k) {
    const double lo = a + h * static_cast<double>(k);
    const double hi = (k + 1 == panels) ? b : lo + h;
    sum += rule.integrate(f, lo, hi);
  }
  return sum;
}

// Adaptive Gauss-Legendre on [a, b]: bisects until a panel and the sum over its
// two halves agree to `tol` (absolute). Throws ConvergenceError when the depth
// limit is hit.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int n = 10, int max_depth = 40);

}  // namespace latlab
