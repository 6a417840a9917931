#pragma once

// Small integer utilities: factorisation, p-adic valuations, modular helpers.

#include <cstdint>
#include <numeric>
#include <vector>

namespace ggraph::numtheory {

/// Distinct prime factors of n in increasing order (n >= 1).
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Exponent of p in n; n >= 1, p prime.
inline int valuation(std::int64_t p, std::int64_t n) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Least non-negative residue of a mod m (m >= 1).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline bool coprime(std::int64_t a, std::int64_t b) { return std::gcd(a, b) == 1; }

/// Units of Z/mZ, ascending. For m = 1 the single residue 0 is a unit.
inline std::vector<std::int64_t> units(std::int64_t m) {
  std::vector<std::int64_t> out;
  if (m == 1) return {0};
  for (std::int64_t a = 1; a < m; ++a)
    if (std::gcd(a, m) == 1) out.push_back(a);
  return out;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  a = mod(a, m);
  for (std::int64_t x = 0; x < m; ++x)
    if (mod(a * x, m) == mod(1, m)) return x;
  return -1;
}

}  // namespace ggraph::numtheory
