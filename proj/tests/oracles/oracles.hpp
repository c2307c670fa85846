#pragma once

#include <cstdint>
#include <functional>

// Reference computations that share no code with the library: brute-force
// counting, and Boost.Math quadrature for the integral identities.
namespace oracle {

// #{(a, b) : a^2 + b^2 = n} by enumeration.
std::uint64_t r_brute(std::uint64_t n);
// Divisor count by trial division up to sqrt(n).
std::uint64_t d_brute(std::uint64_t n);
// #{(a, b) : a^2 + b^2 <= x}, origin included.
std::uint64_t lattice_points(double x);
// sum_{k <= N} floor(N / k), term by term.
std::uint64_t divisor_floor_sum(std::uint64_t N);

// Gauss-Kronrod (61 points) with adaptive bisection on [a, b], at most 12 levels deep.
double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-12);
// int_a^inf by exp-sinh.
double integrate_to_infinity(const std::function<double(double)>& f, double a, double rel_tol = 1e-12);

}  // namespace oracle
