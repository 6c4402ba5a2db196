#pragma once

#include <cstddef>
#include <cstdint>

#include "znsum/cyclic_set.hpp"

namespace znsum {

/// Orbit data of a noise set under the shift/scale action g*(C + h),
/// g a unit mod n. The representative is the lexicographically least orbit
/// member (as an ascending element list) and contains 0 unless C is empty.
struct CanonicalForm {
  CyclicSet representative;
  std::size_t orbit_size;
};

CanonicalForm canonicalize(const CyclicSet& c);

/// True when d = g*(c + h) for some unit g and shift h. Equivalent noise sets
/// yield the same maximum sum-free size for every (k,l).
bool are_equivalent(const CyclicSet& c, const CyclicSet& d);

/// The values c' with {0,1,c'} equivalent to {0,1,c} over Z/pZ, p prime,
/// c not congruent to 0 or 1: the fractional-linear orbit
/// {c, 1/c, -(c-1), -1/(c-1), (c-1)/c, c/(c-1)} collapsed to distinct
/// residues.
CyclicSet size3_orbit(std::int64_t c, std::uint32_t p);

}  // namespace znsum
