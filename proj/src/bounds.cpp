#include "znsum/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "znsum/intmath.hpp"

namespace znsum {

namespace {

void check_params(std::uint32_t n, int k, int l) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  if (l < 1 || k <= l) throw std::invalid_argument("coefficients must satisfy k > l >= 1");
}

std::int64_t clamp0(std::int64_t v) { return v < 0 ? 0 : v; }

}  // namespace

std::int64_t chi_bound(std::uint32_t n, int k, int l, std::int64_t c) {
  check_params(n, k, l);
  if (c < 2) throw std::invalid_argument("noise length c must be at least 2");
  return floor_div(n + 2 * (c - 2), k + l) - (c - 2);
}

std::int64_t torus_upper(std::uint32_t n, int k, int l) {
  check_params(n, k, l);
  return static_cast<std::int64_t>(n) / (k + l);
}

std::int64_t bajnok_matzke(std::uint32_t n, int k, int l) {
  check_params(n, k, l);
  std::int64_t best = 0;
  for (std::uint32_t d : divisors(n)) {
    std::int64_t dd = std::gcd<std::int64_t>(d, k - l);
    std::int64_t f = ceil_div(d - dd, k + l);
    std::int64_t r = mod_floor(static_cast<std::int64_t>(l) * f, dd);
    std::int64_t term = ceil_div(d - (dd - r), k + l) * (n / d);
    best = std::max(best, term);
  }
  return best;
}

std::int64_t bier_chin_prime(std::uint32_t p, int k, int l) {
  check_params(p, k, l);
  if (!is_prime(p)) throw std::invalid_argument("bier_chin_prime: modulus must be prime");
  if ((k - l) % static_cast<int>(p) == 0) return 0;
  return ceil_div(static_cast<std::int64_t>(p) - 1, k + l);
}

BoundsReport bounds_prefix_noise(std::uint32_t n, int k, int l, std::int64_t c) {
  check_params(n, k, l);
  if (c < 2) throw std::invalid_argument("noise length c must be at least 2");

  BoundsReport rep;
  rep.method = "prefix-interval";
  rep.delta = std::gcd<std::int64_t>(n, k - l);
  rep.chi = chi_bound(n, k, l, c);

  // two algebraically equal forms of the residue correction
  std::int64_t r1 = mod_floor(-static_cast<std::int64_t>(k) * rep.chi - (k - 1) * (c - 2), rep.delta);
  std::int64_t r2 = mod_floor(-static_cast<std::int64_t>(k) * floor_div(n + 2 * (c - 2), k + l) + (c - 2), rep.delta);
  if (r1 != r2) throw std::logic_error("residue correction forms disagree");
  rep.r = r1;

  rep.raw_upper = rep.chi;
  rep.raw_lower = floor_div(n + 2 * (c - 2) - rep.r, k + l) - (c - 2);
  rep.lower = clamp0(rep.raw_lower);
  rep.upper = clamp0(rep.raw_upper);
  return rep;
}

BoundsReport bounds_two_element(std::uint32_t n, int k, int l, std::int64_t s) {
  check_params(n, k, l);
  if (s < 1 || s >= static_cast<std::int64_t>(n)) {
    throw std::invalid_argument("second noise element must satisfy 1 <= s < n");
  }
  std::int64_t d = std::gcd(s, static_cast<std::int64_t>(n));
  if (d == 1) {
    // {0,s} with s a unit is equivalent to {0,1}
    BoundsReport rep = bounds_prefix_noise(n, k, l, 2);
    rep.method = "two-element-unit";
    return rep;
  }

  BoundsReport rep;
  rep.method = "two-element";
  std::int64_t coset = 0;
  for (std::uint32_t e : divisors(static_cast<std::uint32_t>(d))) {
    std::int64_t term = bajnok_matzke(e, k, l) * (n / e);
    rep.per_divisor_terms.emplace_back(e, term);
    coset = std::max(coset, term);
  }

  BoundsReport prefix = bounds_prefix_noise(n, k, l, s + 1);
  rep.delta = prefix.delta;
  rep.chi = prefix.chi;
  rep.r = prefix.r;
  rep.raw_lower = std::max(coset, prefix.raw_lower);
  rep.raw_upper = std::max(coset, torus_upper(n, k, l));
  rep.lower = clamp0(rep.raw_lower);
  rep.upper = clamp0(rep.raw_upper);
  return rep;
}

BoundsReport bounds_zero_p(std::uint32_t n, int k, int l, std::uint32_t p) {
  check_params(n, k, l);
  if (!is_prime(p)) throw std::invalid_argument("bounds_zero_p: p must be prime");
  if (p >= n || n % p != 0) {
    throw std::invalid_argument("bounds_zero_p: p must be a proper divisor of n");
  }

  BoundsReport rep;
  rep.method = "zero-p";
  std::int64_t coset = std::max<std::int64_t>(0, bier_chin_prime(p, k, l) * (n / p));
  rep.per_divisor_terms.emplace_back(1u, 0);
  rep.per_divisor_terms.emplace_back(p, coset);

  BoundsReport prefix = bounds_prefix_noise(n, k, l, static_cast<std::int64_t>(p) + 1);
  rep.delta = prefix.delta;
  rep.chi = prefix.chi;
  rep.r = prefix.r;
  rep.raw_lower = std::max(coset, prefix.raw_lower);
  rep.raw_upper = std::max(coset, torus_upper(n, k, l));
  rep.lower = clamp0(rep.raw_lower);
  rep.upper = clamp0(rep.raw_upper);
  return rep;
}

}  // namespace znsum
