#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "znsum/sumfree.hpp"

namespace znsum {

enum class NoiseKind { prefix, two_element };

std::string_view to_string(NoiseKind kind);

/// One grid cell of a sweep: closed-form bounds next to the exhaustive
/// oracle, with the derived verdicts.
struct SweepRow {
  std::uint32_t n = 0;
  int k = 0;
  int l = 0;
  std::int64_t c_or_s = 0;  // prefix length c, or second element s
  NoiseKind kind = NoiseKind::prefix;
  std::string noise;  // set literal
  std::int64_t formula_lower = 0;
  std::int64_t formula_upper = 0;
  std::int64_t oracle_mu = 0;
  bool tight = false;               // oracle == lower bound
  bool matches_conjecture = false;  // oracle == max(0, lower), prefix rows
  bool counterexample = false;      // bounds differ, oracle == upper > 0
  bool exhaustive = true;           // oracle completed within budget
  std::string witness;              // set literal, empty when mu = 0
  std::int64_t elapsed_ms = 0;
};

struct ScanRanges {
  int c_max = 4;
  int k_max = 8;
  int l_max = 3;
  int n_factor = 3;  // enumerate n < n_factor * (k + l)
  std::optional<std::uint32_t> n_max;
};

struct SweepRanges {
  std::uint32_t n_max = 30;
  int k_max = 6;
  int l_max = 5;
  int c_max = 4;            // prefix sweeps
  bool skip_unit_s = false;  // two-element sweeps: drop s with gcd(s,n) = 1
};

struct HarnessOptions {
  int jobs = 1;
  std::optional<std::int64_t> row_budget_ms;
  std::uint32_t ceiling = 64;
};

/// Single prefix-noise grid cell: bounds, oracle, verdicts.
SweepRow scan_row(std::uint32_t n, int k, int l, std::int64_t c,
                  const HarnessOptions& opts = {});

/// Single two-element-noise grid cell.
SweepRow two_element_row(std::uint32_t n, int k, int l, std::int64_t s,
                         const HarnessOptions& opts = {});

/// Grid scan for prefix noise, flagging rows where the oracle meets a
/// strictly larger upper bound. Reports; never asserts.
std::vector<SweepRow> conjecture_scan(const ScanRanges& ranges,
                                      const HarnessOptions& opts = {});

bool has_counterexample(const std::vector<SweepRow>& rows);

/// Bound-vs-oracle sweep; throws std::logic_error on any exhaustively
/// computed row that escapes its bounds.
std::vector<SweepRow> sandwich_sweep(NoiseKind kind, const SweepRanges& ranges,
                                     const HarnessOptions& opts = {});

struct SuiteReport {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions
};

/// Random-instance check of the sumset cardinality inequality
/// |A+B| >= |A+H| + |B+H| - |H| with H the stabilizer of A+B, plus the
/// stabilizer-divisibility relation between A and A+B.
SuiteReport kneser_suite(std::uint64_t trials, std::uint32_t n_max, std::uint64_t seed);

/// Random-instance check that shift/scale-equivalent noise sets produce
/// identical oracle values across a small (k,l) grid.
SuiteReport equivalence_suite(std::uint64_t trials, std::uint32_t n_max, std::uint64_t seed);

}  // namespace znsum
