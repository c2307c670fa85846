#pragma once

#include <cstdint>
#include <map>
#include <mutex>

#include "latlab/arith.hpp"

// Sieves shared across test cases, built once per limit.
inline const latlab::arith::SieveTable& sieve(std::uint64_t limit) {
  static std::mutex m;
  static std::map<std::uint64_t, latlab::arith::SieveTable> tables;
  std::lock_guard lock(m);
  auto it = tables.find(limit);
  if (it == tables.end()) it = tables.emplace(limit, latlab::arith::build_sieve(limit)).first;
  return it->second;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }
