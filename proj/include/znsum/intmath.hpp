#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace znsum {

/// Floor division with a positive divisor; correct for negative numerators.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  std::int64_t r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

/// Canonical residue of a modulo m, in [0, m). Requires m > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::vector<std::uint32_t> divisors(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint32_t> small, large;
  for (std::uint32_t d = 1; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Inverse of a modulo m via extended Euclid. Requires gcd(a, m) = 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  std::int64_t r0 = m, r1 = mod_floor(a, m);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: argument is not a unit");
  return mod_floor(t0, m);
}

/// All units of Z/nZ in ascending order. units_mod(1) = {0}.
inline std::vector<std::uint32_t> units_mod(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("units_mod: n must be positive");
  if (n == 1) return {0};
  std::vector<std::uint32_t> out;
  for (std::uint32_t g = 1; g < n; ++g) {
    if (std::gcd(g, n) == 1) out.push_back(g);
  }
  return out;
}

}  // namespace znsum
