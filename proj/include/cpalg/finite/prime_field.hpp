#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cpalg::finite {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t next_prime_above(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 acc = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Smallest generator of the multiplicative group mod p.
inline std::uint32_t primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto factors = distinct_prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t f : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace cpalg::finite
