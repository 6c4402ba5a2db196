#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "znsum/detail/bitops.hpp"
#include "znsum/intmath.hpp"

namespace znsum {

/**
 * Subset of Z/nZ stored as a bitmask over the residues 0..n-1.
 *
 * Value type: copies are independent, all set-algebra operations return new
 * sets. Instances shared across threads must not be mutated. Bits at
 * positions >= n are always zero.
 */
class CyclicSet {
 public:
  static constexpr std::uint32_t max_modulus = 1u << 16;

  explicit CyclicSet(std::uint32_t n)
      : n_(checked_modulus(n)), words_(detail::word_count(n), 0) {}

  static CyclicSet from_elements(std::uint32_t n, std::span<const std::int64_t> elems) {
    CyclicSet s(n);
    for (std::int64_t e : elems) s.insert(e);
    return s;
  }

  static CyclicSet from_elements(std::uint32_t n, std::initializer_list<std::int64_t> elems) {
    return from_elements(n, std::span<const std::int64_t>(elems.begin(), elems.size()));
  }

  static CyclicSet singleton(std::uint32_t n, std::int64_t x) {
    CyclicSet s(n);
    s.insert(x);
    return s;
  }

  static CyclicSet full_set(std::uint32_t n) {
    CyclicSet s(n);
    for (auto& w : s.words_) w = ~0ull;
    s.words_.back() &= detail::top_word_mask(n);
    return s;
  }

  std::uint32_t modulus() const { return n_; }

  bool contains(std::uint32_t r) const {
    return r < n_ && (words_[r >> 6] >> (r & 63u)) & 1u;
  }

  /// Inserts x reduced mod n.
  void insert(std::int64_t x) {
    auto r = static_cast<std::uint32_t>(mod_floor(x, n_));
    words_[r >> 6] |= 1ull << (r & 63u);
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::vector<std::uint32_t> elements() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for (std::uint32_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(i * 64u + static_cast<std::uint32_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Smallest residue in the set. Requires a nonempty set.
  std::uint32_t min_element() const {
    for (std::uint32_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return i * 64u + static_cast<std::uint32_t>(std::countr_zero(words_[i]));
    }
    throw std::invalid_argument("min_element: set is empty");
  }

  bool operator==(const CyclicSet&) const = default;

  /// A + {g}: every element shifted by g (mod n).
  CyclicSet translated(std::int64_t g) const {
    auto s = static_cast<std::uint32_t>(mod_floor(g, n_));
    CyclicSet out(n_);
    detail::rotl_bits(out.words_.data(), words_.data(),
                      static_cast<std::uint32_t>(words_.size()), n_, s);
    return out;
  }

  /// {g*a : a in A}. Requires g to be a unit mod n.
  CyclicSet scaled(std::int64_t g) const {
    std::int64_t gr = mod_floor(g, n_);
    if (std::gcd(gr, static_cast<std::int64_t>(n_)) != 1) {
      throw std::invalid_argument("scaled: multiplier is not a unit mod n");
    }
    CyclicSet out(n_);
    for (std::uint32_t r : elements()) out.insert(gr * r);
    return out;
  }

  /// {-a : a in A}.
  CyclicSet negated() const {
    CyclicSet out(n_);
    for (std::uint32_t r : elements()) out.insert(-static_cast<std::int64_t>(r));
    return out;
  }

  /// Image under reduction mod e. Requires e | n.
  CyclicSet projected(std::uint32_t e) const {
    if (e == 0 || n_ % e != 0) {
      throw std::invalid_argument("projected: target modulus must divide n");
    }
    CyclicSet out(e);
    for (std::uint32_t r : elements()) out.insert(r % e);
    return out;
  }

  /// Full preimage under reduction Z/mZ -> Z/nZ. Requires n | m.
  CyclicSet lifted(std::uint32_t m) const {
    if (m == 0 || m % n_ != 0) {
      throw std::invalid_argument("lifted: target modulus must be a multiple of n");
    }
    CyclicSet out(m);
    for (std::uint32_t r : elements()) {
      for (std::uint32_t x = r; x < m; x += n_) out.insert(x);
    }
    return out;
  }

  CyclicSet& operator|=(const CyclicSet& o) {
    require_same_modulus(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  CyclicSet& operator&=(const CyclicSet& o) {
    require_same_modulus(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend CyclicSet operator|(CyclicSet a, const CyclicSet& b) { return a |= b; }
  friend CyclicSet operator&(CyclicSet a, const CyclicSet& b) { return a &= b; }

  const std::vector<std::uint64_t>& words() const { return words_; }

  void require_same_modulus(const CyclicSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("operands live in different cyclic groups");
  }

 private:
  static std::uint32_t checked_modulus(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    if (n > max_modulus) throw std::invalid_argument("modulus exceeds construction ceiling");
    return n;
  }

  std::uint32_t n_;
  std::vector<std::uint64_t> words_;
};

/// Subgroup of Z/nZ generated by a divisor d of n; d = n encodes the trivial
/// subgroup {0}, d = 1 the full group.
struct Subgroup {
  std::uint32_t modulus;
  std::uint32_t generator;

  std::uint32_t order() const { return modulus / generator; }

  CyclicSet as_set() const {
    CyclicSet s(modulus);
    for (std::uint32_t x = 0; x < modulus; x += generator) s.insert(x);
    return s;
  }

  bool operator==(const Subgroup&) const = default;
};

inline bool disjoint(const CyclicSet& a, const CyclicSet& b) {
  a.require_same_modulus(b);
  for (std::size_t i = 0; i < a.words().size(); ++i) {
    if ((a.words()[i] & b.words()[i]) != 0) return false;
  }
  return true;
}

/// A + B = {a + b : a in A, b in B}. Empty if either operand is empty.
inline CyclicSet minkowski_sum(const CyclicSet& a, const CyclicSet& b) {
  a.require_same_modulus(b);
  CyclicSet out(a.modulus());
  // union of rotations of the larger set by each element of the smaller
  const CyclicSet& big = a.size() >= b.size() ? a : b;
  const CyclicSet& small = a.size() >= b.size() ? b : a;
  for (std::uint32_t s : small.elements()) out |= big.translated(s);
  return out;
}

/// A + B + C. C must be nonempty.
inline CyclicSet noisy_sum(const CyclicSet& a, const CyclicSet& b, const CyclicSet& c) {
  a.require_same_modulus(b);
  a.require_same_modulus(c);
  if (c.empty()) throw std::invalid_argument("noisy_sum: noise set must be nonempty");
  return minkowski_sum(minkowski_sum(a, b), c);
}

/// k-fold noisy sumset: kA + (k-1)C. Requires k >= 1 and nonempty A, C.
inline CyclicSet iterated_noisy(int k, const CyclicSet& a, const CyclicSet& c) {
  a.require_same_modulus(c);
  if (k < 1) throw std::invalid_argument("iterated_noisy: k must be at least 1");
  if (a.empty()) throw std::invalid_argument("iterated_noisy: base set must be nonempty");
  if (c.empty()) throw std::invalid_argument("iterated_noisy: noise set must be nonempty");
  CyclicSet acc = a;
  for (int i = 2; i <= k; ++i) acc = noisy_sum(acc, a, c);
  return acc;
}

/// A - B = {a - b : a in A, b in B}.
inline CyclicSet difference_set(const CyclicSet& a, const CyclicSet& b) {
  return minkowski_sum(a, b.negated());
}

/// Stabilizer {g : g + A = A}, as the subgroup generated by the smallest
/// divisor d of n with A + {d} = A. stabilizer of the empty set is the full
/// group by this convention.
inline Subgroup stabilizer(const CyclicSet& a) {
  std::uint32_t n = a.modulus();
  for (std::uint32_t d : divisors(n)) {
    if (a.translated(d) == a) return Subgroup{n, d};
  }
  return Subgroup{n, n};  // unreachable: d = n always matches
}

}  // namespace znsum
