#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "znsum/cyclic_set.hpp"

namespace znsum {

/// Raised when a search exceeds its modulus ceiling or a configured budget
/// makes the request infeasible as posed.
struct search_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SumFreeParams {
  std::uint32_t n;
  int k;
  int l;

  void validate() const {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    if (l < 1 || k <= l) throw std::invalid_argument("coefficients must satisfy k > l >= 1");
  }
};

/// True when the k-fold and l-fold noisy sumsets of A are disjoint:
/// (kA + (k-1)C) and (lA + (l-1)C) share no element. The empty set qualifies.
bool is_sumfree(const CyclicSet& a, const CyclicSet& noise, const SumFreeParams& p);

struct SearchOptions {
  /// Keep at most this many witnesses (lexicographically least first).
  int witness_cap = 8;
  /// Collect every optimal set (expands translation orbits; ignores the cap).
  bool all_witnesses = false;
  /// Largest modulus the exhaustive search will accept.
  std::uint32_t ceiling = 64;
  /// Worker threads; results are identical for any value.
  int jobs = 1;
  /// Optional wall-clock budget. On expiry the result so far is returned
  /// with exhaustive = false (mu is then only a lower bound).
  std::optional<std::chrono::milliseconds> budget;
  /// Testing hook: use the word-vector engine even when n fits in one word.
  bool force_generic = false;
};

struct SearchResult {
  std::int64_t mu = 0;
  std::vector<CyclicSet> witnesses;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = true;
};

/// Exact maximum size of a C-sum-free subset of Z/nZ, by descending-size
/// certificate search. witnesses holds optimal sets (mu = 0 yields the empty
/// set as its sole witness). Deterministic for any jobs value.
SearchResult brute_force_mu(const SumFreeParams& p, const CyclicSet& noise,
                            const SearchOptions& opts = {});

/// Noise set {0, 1, ..., c-1} reduced mod n.
CyclicSet prefix_noise(std::uint32_t n, std::int64_t c);

struct IntervalResult {
  std::int64_t length = 0;
  CyclicSet witness;
  std::uint32_t start = 0;  // meaningful only when length > 0
};

/// Longest run of consecutive residues that is sum-free for noise {0..c-1},
/// by the interval formula, together with a concrete occurrence found by
/// scanning all starting points.
IntervalResult longest_interval(const SumFreeParams& p, std::int64_t c);

/// Constructive witness for noise {0,s}: the better of the best subgroup-coset
/// lift and the longest-interval witness. Its size realizes the closed-form
/// lower bound for this noise set.
CyclicSet build_0s_witness(const SumFreeParams& p, std::int64_t s,
                           const SearchOptions& opts = {});

/// Gap criterion under which adjoining z to A cannot enlarge the k-fold noisy
/// sumset with noise {0..c-1}: some x, y in A have cyclic gap g = y - x with
/// 2 <= g < c - ceil((c-2)/k) and z - x in {1..g-1}.
bool is_redundant(const CyclicSet& a, std::uint32_t z, std::int64_t c, int k);

/// Tightest closed-form upper bound available for arbitrary nonempty noise:
/// min over single-element and two-element sub-noise bounds, refined to the
/// interval bound when C is a unit-difference progression.
std::int64_t search_upper_bound(const SumFreeParams& p, const CyclicSet& noise);

}  // namespace znsum
