#include "znsum/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "znsum/bounds.hpp"
#include "znsum/intmath.hpp"
#include "znsum/rng.hpp"
#include "znsum/set_literal.hpp"

namespace znsum {

namespace {

/// Runs fn(i) once for each i < count, possibly across threads; fn writes its
/// own output slot, so results are ordered no matter the schedule.
template <class F>
void parallel_for_ordered(std::size_t count, int jobs, F&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  std::size_t threads = std::min<std::size_t>(jobs, count);
  pool.reserve(threads);
  for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

SweepRow make_row(std::uint32_t n, int k, int l, std::int64_t c_or_s, NoiseKind kind,
                  const CyclicSet& noise, const BoundsReport& rep,
                  const HarnessOptions& opts) {
  SweepRow row;
  row.n = n;
  row.k = k;
  row.l = l;
  row.c_or_s = c_or_s;
  row.kind = kind;
  row.noise = format_set(noise);
  row.formula_lower = rep.lower;
  row.formula_upper = rep.upper;

  SearchOptions sopts;
  sopts.witness_cap = 1;
  sopts.ceiling = opts.ceiling;
  if (opts.row_budget_ms) sopts.budget = std::chrono::milliseconds(*opts.row_budget_ms);

  auto t0 = std::chrono::steady_clock::now();
  SearchResult res = brute_force_mu(SumFreeParams{n, k, l}, noise, sopts);
  auto t1 = std::chrono::steady_clock::now();
  row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  row.oracle_mu = res.mu;
  row.exhaustive = res.exhaustive;
  if (res.mu > 0 && !res.witnesses.empty()) row.witness = format_set(res.witnesses.front());
  row.tight = res.exhaustive && res.mu == rep.lower;
  row.matches_conjecture = res.exhaustive && res.mu == rep.lower;
  row.counterexample = res.exhaustive && rep.upper != rep.lower && rep.upper > 0 &&
                       res.mu == rep.upper;
  return row;
}

void check_sandwich(const SweepRow& row) {
  if (!row.exhaustive) return;
  if (row.oracle_mu < row.formula_lower || row.oracle_mu > row.formula_upper) {
    std::ostringstream msg;
    msg << "bounds violated at n=" << row.n << " k=" << row.k << " l=" << row.l
        << " noise={" << row.noise << "}: mu=" << row.oracle_mu << " outside ["
        << row.formula_lower << ", " << row.formula_upper << "]";
    throw std::logic_error(msg.str());
  }
}

CyclicSet random_nonempty_subset(CounterRng& rng, std::uint32_t n) {
  CyclicSet s(n);
  while (s.empty()) {
    for (std::uint32_t r = 0; r < n; ++r) {
      if (rng.next() & 1u) s.insert(r);
    }
  }
  return s;
}

}  // namespace

std::string_view to_string(NoiseKind kind) {
  return kind == NoiseKind::prefix ? "prefix" : "two-element";
}

SweepRow scan_row(std::uint32_t n, int k, int l, std::int64_t c, const HarnessOptions& opts) {
  BoundsReport rep = bounds_prefix_noise(n, k, l, c);
  return make_row(n, k, l, c, NoiseKind::prefix, prefix_noise(n, c), rep, opts);
}

SweepRow two_element_row(std::uint32_t n, int k, int l, std::int64_t s,
                         const HarnessOptions& opts) {
  BoundsReport rep = bounds_two_element(n, k, l, s);
  CyclicSet noise = CyclicSet::from_elements(n, {0, s});
  return make_row(n, k, l, s, NoiseKind::two_element, noise, rep, opts);
}

std::vector<SweepRow> conjecture_scan(const ScanRanges& ranges, const HarnessOptions& opts) {
  struct Cell {
    std::uint32_t n;
    int k, l;
    std::int64_t c;
  };
  std::vector<Cell> grid;
  for (int c = 2; c <= ranges.c_max; ++c) {
    for (int l = 1; l <= ranges.l_max; ++l) {
      for (int k = l + 1; k <= ranges.k_max; ++k) {
        std::uint32_t hi = static_cast<std::uint32_t>(ranges.n_factor) * (k + l);
        for (std::uint32_t n = 1; n < hi; ++n) {
          if (ranges.n_max && n > *ranges.n_max) break;
          grid.push_back({n, k, l, c});
        }
      }
    }
  }
  for (const Cell& cell : grid) {
    if (cell.n > opts.ceiling) {
      throw search_limit_error("scan range exceeds the search ceiling");
    }
  }

  std::vector<SweepRow> rows(grid.size());
  parallel_for_ordered(grid.size(), opts.jobs, [&](std::size_t i) {
    HarnessOptions inner = opts;
    inner.jobs = 1;
    rows[i] = scan_row(grid[i].n, grid[i].k, grid[i].l, grid[i].c, inner);
  });
  return rows;
}

bool has_counterexample(const std::vector<SweepRow>& rows) {
  for (const SweepRow& row : rows) {
    if (row.counterexample) return true;
  }
  return false;
}

std::vector<SweepRow> sandwich_sweep(NoiseKind kind, const SweepRanges& ranges,
                                     const HarnessOptions& opts) {
  struct Cell {
    std::uint32_t n;
    int k, l;
    std::int64_t v;
  };
  std::vector<Cell> grid;
  for (std::uint32_t n = 1; n <= ranges.n_max; ++n) {
    for (int l = 1; l <= ranges.l_max; ++l) {
      for (int k = l + 1; k <= ranges.k_max; ++k) {
        if (kind == NoiseKind::prefix) {
          for (int c = 2; c <= ranges.c_max; ++c) grid.push_back({n, k, l, c});
        } else {
          for (std::int64_t s = 2; s < static_cast<std::int64_t>(n); ++s) {
            if (ranges.skip_unit_s && std::gcd(s, static_cast<std::int64_t>(n)) == 1) continue;
            grid.push_back({n, k, l, s});
          }
        }
      }
    }
  }
  for (const Cell& cell : grid) {
    if (cell.n > opts.ceiling) {
      throw search_limit_error("sweep range exceeds the search ceiling");
    }
  }

  std::vector<SweepRow> rows(grid.size());
  parallel_for_ordered(grid.size(), opts.jobs, [&](std::size_t i) {
    HarnessOptions inner = opts;
    inner.jobs = 1;
    rows[i] = kind == NoiseKind::prefix
                  ? scan_row(grid[i].n, grid[i].k, grid[i].l, grid[i].v, inner)
                  : two_element_row(grid[i].n, grid[i].k, grid[i].l, grid[i].v, inner);
    check_sandwich(rows[i]);
  });
  return rows;
}

SuiteReport kneser_suite(std::uint64_t trials, std::uint32_t n_max, std::uint64_t seed) {
  if (n_max < 1) throw std::invalid_argument("kneser_suite: n_max must be positive");
  SuiteReport rep;
  rep.name = "kneser";
  rep.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(n_max));
    CyclicSet a = random_nonempty_subset(rng, n);
    CyclicSet b = random_nonempty_subset(rng, n);
    CyclicSet sum = minkowski_sum(a, b);
    Subgroup h = stabilizer(sum);
    CyclicSet hset = h.as_set();
    std::int64_t lhs = static_cast<std::int64_t>(sum.size());
    std::int64_t rhs = static_cast<std::int64_t>(minkowski_sum(a, hset).size()) +
                       static_cast<std::int64_t>(minkowski_sum(b, hset).size()) -
                       static_cast<std::int64_t>(h.order());
    bool inequality = lhs >= rhs;
    bool divisibility = stabilizer(a).generator % h.generator == 0;
    if (inequality && divisibility) {
      ++rep.passes;
    } else {
      ++rep.failures;
      if (rep.notes.size() < 5) {
        std::ostringstream msg;
        msg << "trial " << t << ": n=" << n << " A={" << format_set(a) << "} B={"
            << format_set(b) << "} |A+B|=" << lhs << " bound=" << rhs
            << (divisibility ? "" : " stabilizer-divisibility failed");
        rep.notes.push_back(msg.str());
      }
    }
  }
  return rep;
}

SuiteReport equivalence_suite(std::uint64_t trials, std::uint32_t n_max, std::uint64_t seed) {
  if (n_max < 2) throw std::invalid_argument("equivalence_suite: n_max must be at least 2");
  SuiteReport rep;
  rep.name = "equivalence";
  rep.trials = trials;
  const std::pair<int, int> coeffs[] = {{2, 1}, {3, 1}, {3, 2}};
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(n_max - 1));
    CyclicSet c = random_nonempty_subset(rng, n);
    std::vector<std::uint32_t> units = units_mod(n);
    std::uint32_t g = units[rng.below(units.size())];
    std::uint32_t h = static_cast<std::uint32_t>(rng.below(n));
    CyclicSet d = c.translated(h).scaled(g);

    bool ok = true;
    for (auto [k, l] : coeffs) {
      SumFreeParams p{n, k, l};
      SearchOptions sopts;
      sopts.witness_cap = 1;
      if (brute_force_mu(p, c, sopts).mu != brute_force_mu(p, d, sopts).mu) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++rep.passes;
    } else {
      ++rep.failures;
      if (rep.notes.size() < 5) {
        std::ostringstream msg;
        msg << "trial " << t << ": n=" << n << " C={" << format_set(c) << "} g=" << g
            << " h=" << h;
        rep.notes.push_back(msg.str());
      }
    }
  }
  return rep;
}

}  // namespace znsum
