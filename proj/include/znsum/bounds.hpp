#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace znsum {

/**
 * Closed-form lower/upper bounds for the maximum size of a noise-tolerant
 * sum-free subset of Z/nZ.
 *
 * lower/upper are clamped to be nonnegative; raw_lower/raw_upper keep the
 * unclamped formula values (these can go negative for tiny n). delta, chi
 * and r are the auxiliary quantities of the interval-noise formulas.
 * per_divisor_terms lists (divisor, term) pairs for max-over-divisors
 * formulas. method names the bound family that produced the report.
 */
struct BoundsReport {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t raw_lower = 0;
  std::int64_t raw_upper = 0;
  std::int64_t delta = 0;
  std::int64_t chi = 0;
  std::int64_t r = 0;
  std::vector<std::pair<std::uint32_t, std::int64_t>> per_divisor_terms;
  std::string method;
};

/// floor((n + 2(c-2)) / (k+l)) - (c-2): upper bound for prefix noise {0..c-1}.
std::int64_t chi_bound(std::uint32_t n, int k, int l, std::int64_t c);

/// floor(n / (k+l)): the classical density bound, chi at c = 2.
std::int64_t torus_upper(std::uint32_t n, int k, int l);

/// Largest (k,l)-sum-free subset size in Z/nZ (noiseless case), as a maximum
/// of one arithmetic-progression term per divisor of n.
std::int64_t bajnok_matzke(std::uint32_t n, int k, int l);

/// Prime specialization: ceil((p-1)/(k+l)) when p does not divide k-l, else 0.
std::int64_t bier_chin_prime(std::uint32_t p, int k, int l);

/// Bounds for noise C = {0,...,c-1}. Requires c >= 2, k > l >= 1, n >= 1.
BoundsReport bounds_prefix_noise(std::uint32_t n, int k, int l, std::int64_t c);

/// Bounds for noise C = {0,s}, 1 <= s < n. When gcd(s,n) = 1 this delegates
/// to the c = 2 prefix bounds (the two noise sets are equivalent under
/// multiplication by a unit).
BoundsReport bounds_two_element(std::uint32_t n, int k, int l, std::int64_t s);

/// Bounds for noise C = {0,p} with p prime, p | n, p < n. Computed through
/// the prime-coset formula; must agree with bounds_two_element(n,k,l,p).
BoundsReport bounds_zero_p(std::uint32_t n, int k, int l, std::uint32_t p);

}  // namespace znsum
