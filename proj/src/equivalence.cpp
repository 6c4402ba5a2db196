#include "znsum/equivalence.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "znsum/intmath.hpp"

namespace znsum {

CanonicalForm canonicalize(const CyclicSet& c) {
  const std::uint32_t n = c.modulus();
  if (c.empty()) return {c, 1};

  std::set<std::vector<std::uint32_t>> orbit;
  const std::vector<std::uint32_t> units = units_mod(n);
  for (std::uint32_t h = 0; h < n; ++h) {
    CyclicSet shifted = c.translated(h);
    for (std::uint32_t g : units) orbit.insert(shifted.scaled(g).elements());
  }

  CyclicSet rep(n);
  for (std::uint32_t e : *orbit.begin()) rep.insert(e);
  return {rep, orbit.size()};
}

bool are_equivalent(const CyclicSet& c, const CyclicSet& d) {
  c.require_same_modulus(d);
  if (c.size() != d.size()) return false;  // the action preserves cardinality
  return canonicalize(c).representative == canonicalize(d).representative;
}

CyclicSet size3_orbit(std::int64_t c, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("size3_orbit: p must be prime");
  std::int64_t cr = mod_floor(c, p);
  if (cr == 0 || cr == 1) {
    throw std::invalid_argument("size3_orbit: c must avoid 0 and 1 mod p");
  }
  std::int64_t inv_c = mod_inverse(cr, p);
  std::int64_t inv_c1 = mod_inverse(cr - 1, p);
  return CyclicSet::from_elements(
      p, {cr, inv_c, -(cr - 1), -inv_c1, (cr - 1) * inv_c, cr * inv_c1});
}

}  // namespace znsum
