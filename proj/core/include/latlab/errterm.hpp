#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "latlab/arith.hpp"

// The circle and divisor error terms
//   P(x) = sum'_{n<=x} r(n) - pi x + 1,
//   Delta(x) = sum'_{n<=x} d(n) - x (log x + 2 gamma - 1) - 1/4,
// directly and by truncated Hardy / Voronoi Bessel series.
namespace latlab::errterm {

enum class Method { direct, series };
enum class Smoothing { sharp, smoothed };
enum class Which { P, Delta };

const char* to_string(Method m);

struct ErrorTermSample {
  double x = 0.0;
  double value = 0.0;
  Method method = Method::direct;
  std::uint64_t terms_used = 0;  // 0 for direct
  // Series only: |S_N - S_{N/2}|, the change over the last halving of N.
  double truncation_estimate = 0.0;
};

ErrorTermSample P_direct(double x, bool x_is_integer, const arith::SieveTable& table);
ErrorTermSample Delta_direct(double x, bool x_is_integer, const arith::SieveTable& table);

// Taper applied to the n-th series term when truncating at N:
// w(u) = 1 - u + sin(2 pi u) / (2 pi), u = n / N. w(0) = 1, and w, w', w''
// vanish at u = 1 (C^2 join to zero).
double taper(std::uint64_t n, std::uint64_t N);

// x^{1/2} sum_{n<=N} r(n) n^{-1/2} J1(2 pi sqrt(xn)) [w(n/N)]
ErrorTermSample P_hardy(double x, std::uint64_t N, Smoothing smoothing,
                        const arith::SieveTable& table);
// -(2 sqrt(x) / pi) sum_{n<=N} d(n) n^{-1/2} (K1(4 pi sqrt(xn)) + (pi/2) Y1(4 pi sqrt(xn))) [w(n/N)]
ErrorTermSample Delta_voronoi(double x, std::uint64_t N, Smoothing smoothing,
                              const arith::SieveTable& table);

// int_0^T value(x)^2 dx: exact piecewise for P, 12-point Gauss-Legendre per
// unit interval for Delta.
double mean_square_direct(double T, Which which, const arith::SieveTable& table);
// Same integral for P by Gauss-Legendre, used as a cross-check.
double mean_square_P_quadrature(double T, const arith::SieveTable& table);
// (1/T) int_0^T Delta(x) dx
double mean_value_delta(double T, const arith::SieveTable& table);

// Columns x, method, N, value, truncation_estimate.
std::string to_csv(std::span<const ErrorTermSample> samples);

}  // namespace latlab::errterm
