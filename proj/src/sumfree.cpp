#include "znsum/sumfree.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstring>
#include <numeric>
#include <set>
#include <thread>

#include "znsum/bounds.hpp"
#include "znsum/intmath.hpp"

namespace znsum {

namespace {

using clock_type = std::chrono::steady_clock;

/// m-fold Minkowski sum of C with itself; 0 copies give {0}.
CyclicSet fold_copies(const CyclicSet& c, int m) {
  if (m == 0) return CyclicSet::singleton(c.modulus(), 0);
  CyclicSet acc = c;
  for (int i = 2; i <= m; ++i) acc = minkowski_sum(acc, c);
  return acc;
}

CyclicSet interval_set(std::uint32_t n, std::uint32_t start, std::int64_t len) {
  CyclicSet s(n);
  for (std::int64_t i = 0; i < len; ++i) s.insert(static_cast<std::int64_t>(start) + i);
  return s;
}

bool is_cyclic_interval(const CyclicSet& s) {
  std::size_t m = s.size();
  if (m == 0) return false;
  if (m == s.modulus()) return true;
  std::uint32_t n = s.modulus();
  std::uint32_t boundaries = 0;
  for (std::uint32_t r : s.elements()) {
    if (!s.contains((r + 1) % n)) ++boundaries;
  }
  return boundaries == 1;
}

// ---------------------------------------------------------------------------
// bitmask policies for the certificate search

struct Word64Ops {
  using Mask = std::uint64_t;
  std::uint32_t n;
  std::uint64_t full;

  explicit Word64Ops(std::uint32_t n_)
      : n(n_), full(n_ == 64 ? ~0ull : ((1ull << n_) - 1)) {}

  Mask make() const { return 0; }
  void zero(Mask& m) { m = 0; }
  void copy(Mask& d, const Mask& s) { d = s; }
  void or_rot(Mask& d, const Mask& s, std::uint32_t r) {
    d |= (r == 0) ? s : (((s << r) | (s >> (n - r))) & full);
  }
  void set_bit(Mask& m, std::uint32_t b) { m |= 1ull << b; }
  void and_into(Mask& d, const Mask& a, const Mask& b) { d = a & b; }
  bool intersects(const Mask& a, const Mask& b) const { return (a & b) != 0; }
  void above(Mask& d, const Mask& s, std::uint32_t x) const {
    d = (x + 1 >= n) ? 0 : (s & (~0ull << (x + 1)));
  }
  int popcount(const Mask& m) const { return std::popcount(m); }
  std::uint32_t next_bit(const Mask& m, std::uint32_t from) const {
    if (from >= n) return n;
    Mask t = m & (~0ull << from);
    return t != 0 ? static_cast<std::uint32_t>(std::countr_zero(t)) : n;
  }
  Mask from_set(const CyclicSet& s) const { return s.words()[0]; }
};

struct WideOps {
  using Mask = std::vector<std::uint64_t>;
  std::uint32_t n;
  std::uint32_t w;
  Mask scratch;

  explicit WideOps(std::uint32_t n_)
      : n(n_), w(detail::word_count(n_)), scratch(w, 0) {}

  Mask make() const { return Mask(w, 0); }
  void zero(Mask& m) { std::fill(m.begin(), m.end(), 0); }
  void copy(Mask& d, const Mask& s) { d = s; }
  void or_rot(Mask& d, const Mask& s, std::uint32_t r) {
    detail::rotl_bits(scratch.data(), s.data(), w, n, r);
    for (std::uint32_t i = 0; i < w; ++i) d[i] |= scratch[i];
  }
  void set_bit(Mask& m, std::uint32_t b) { m[b >> 6] |= 1ull << (b & 63u); }
  void and_into(Mask& d, const Mask& a, const Mask& b) {
    for (std::uint32_t i = 0; i < w; ++i) d[i] = a[i] & b[i];
  }
  bool intersects(const Mask& a, const Mask& b) const {
    for (std::uint32_t i = 0; i < w; ++i) {
      if ((a[i] & b[i]) != 0) return true;
    }
    return false;
  }
  void above(Mask& d, const Mask& s, std::uint32_t x) const {
    std::uint32_t cut = x + 1;  // keep bits >= cut
    for (std::uint32_t i = 0; i < w; ++i) {
      std::uint32_t lo = i * 64u;
      if (cut <= lo) {
        d[i] = s[i];
      } else if (cut >= lo + 64u) {
        d[i] = 0;
      } else {
        d[i] = s[i] & (~0ull << (cut - lo));
      }
    }
  }
  int popcount(const Mask& m) const {
    int c = 0;
    for (std::uint32_t i = 0; i < w; ++i) c += std::popcount(m[i]);
    return c;
  }
  std::uint32_t next_bit(const Mask& m, std::uint32_t from) const {
    if (from >= n) return n;
    std::uint32_t wi = from >> 6;
    std::uint64_t cur = m[wi] & (~0ull << (from & 63u));
    while (true) {
      if (cur != 0) return wi * 64u + static_cast<std::uint32_t>(std::countr_zero(cur));
      if (++wi >= w) return n;
      cur = m[wi];
    }
  }
  Mask from_set(const CyclicSet& s) const { return s.words(); }
};

// Precomputed per-search data shared read-only across workers.
template <class Ops>
struct SearchTables {
  int k, l;
  std::vector<std::uint32_t> dck;  // elements of (k-1)C
  std::vector<std::uint32_t> dcl;  // elements of (l-1)C
  typename Ops::Mask singles;      // x with {x} sum-free
  std::vector<typename Ops::Mask> compat;  // compat[x] = {y != x : {x,y} sum-free}
};

template <class Ops>
SearchTables<Ops> build_tables(Ops& ops, const SumFreeParams& p, const CyclicSet& noise) {
  SearchTables<Ops> t;
  t.k = p.k;
  t.l = p.l;
  const std::uint32_t n = p.n;
  CyclicSet dck_set = fold_copies(noise, p.k - 1);
  CyclicSet dcl_set = fold_copies(noise, p.l - 1);
  t.dck = dck_set.elements();
  t.dcl = dcl_set.elements();

  t.singles = ops.make();
  for (std::uint32_t x = 0; x < n; ++x) {
    std::int64_t kx = static_cast<std::int64_t>(p.k) * x;
    std::int64_t lx = static_cast<std::int64_t>(p.l) * x;
    if (disjoint(dck_set.translated(kx), dcl_set.translated(lx))) ops.set_bit(t.singles, x);
  }

  t.compat.reserve(n);
  for (std::uint32_t x = 0; x < n; ++x) t.compat.push_back(ops.make());
  for (std::uint32_t x = 0; x < n; ++x) {
    if (!(x < n && ops.next_bit(t.singles, x) == x)) continue;
    for (std::uint32_t y = x + 1; y < n; ++y) {
      if (ops.next_bit(t.singles, y) != y) continue;
      CyclicSet ka(n), la(n);
      for (int ti = 0; ti <= p.k; ++ti) {
        ka.insert(static_cast<std::int64_t>(ti) * x + static_cast<std::int64_t>(p.k - ti) * y);
      }
      for (int ti = 0; ti <= p.l; ++ti) {
        la.insert(static_cast<std::int64_t>(ti) * x + static_cast<std::int64_t>(p.l - ti) * y);
      }
      if (disjoint(minkowski_sum(ka, dck_set), minkowski_sum(la, dcl_set))) {
        ops.set_bit(t.compat[x], y);
        ops.set_bit(t.compat[y], x);
      }
    }
  }
  return t;
}

struct RootOutcome {
  std::vector<std::vector<std::uint32_t>> wits;
  std::uint64_t nodes = 0;
};

/// Depth-first extension of partial sets in increasing element order at one
/// target size. One instance per worker; scratch is reused across roots.
template <class Ops>
class RootSearch {
 public:
  RootSearch(Ops ops, const SearchTables<Ops>& t, std::uint32_t n, int max_target,
             int cap, bool all, std::optional<clock_type::time_point> deadline,
             std::atomic<bool>* abort_flag)
      : ops_(std::move(ops)), t_(t), n_(n), cap_(cap), all_(all),
        deadline_(deadline), abort_(abort_flag) {
    pow_.resize(max_target + 1);
    allowed_.resize(max_target + 1, ops_.make());
    for (auto& row : pow_) {
      row.reserve(t_.k + 1);
      for (int j = 0; j <= t_.k; ++j) row.push_back(ops_.make());
    }
    vk_ = ops_.make();
    vl_ = ops_.make();
    cand_ = ops_.make();
    stack_.reserve(max_target + 1);
  }

  void run(std::uint32_t root, int target, RootOutcome& out) {
    target_ = target;
    out_ = &out;
    stop_root_ = false;
    if (expired()) return;  // per-root check: subtrees may be too small to
                            // ever reach the in-loop node-count check
    stack_.clear();
    for (int j = 1; j <= t_.k; ++j) ops_.zero(pow_[0][j]);
    if (!extend(0, root)) return;
    stack_.push_back(root);
    if (target_ == 1) {
      record();
    } else {
      ops_.and_into(allowed_[1], t_.singles, t_.compat[root]);
      ops_.above(cand_, allowed_[1], root);
      if (ops_.popcount(cand_) >= target_ - 1) dfs(1, root);
    }
  }

 private:
  bool expired() {
    if (abort_ != nullptr && abort_->load(std::memory_order_relaxed)) return true;
    if (deadline_ && clock_type::now() > *deadline_) {
      if (abort_ != nullptr) abort_->store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  // Builds pow_[depth+1] for the partial set extended by x; true if the
  // extension is still sum-free. Counts one node either way.
  bool extend(int depth, std::uint32_t x) {
    ++out_->nodes;
    auto& child = pow_[depth + 1];
    auto& parent = pow_[depth];
    for (int j = 1; j <= t_.k; ++j) {
      ops_.copy(child[j], parent[j]);
      for (int ti = 1; ti < j; ++ti) {
        std::uint32_t r = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(j - ti) * x) % n_);
        ops_.or_rot(child[j], parent[ti], r);
      }
      ops_.set_bit(child[j], static_cast<std::uint32_t>(
                                 (static_cast<std::uint64_t>(j) * x) % n_));
    }
    ops_.zero(vk_);
    for (std::uint32_t o : t_.dck) ops_.or_rot(vk_, child[t_.k], o);
    ops_.zero(vl_);
    for (std::uint32_t o : t_.dcl) ops_.or_rot(vl_, child[t_.l], o);
    return !ops_.intersects(vk_, vl_);
  }

  void record() {
    out_->wits.push_back(stack_);
    if (!all_ && static_cast<int>(out_->wits.size()) >= cap_) stop_root_ = true;
  }

  void dfs(int depth, std::uint32_t last) {
    const int need = target_ - depth;
    ops_.above(cand_, allowed_[depth], last);
    std::uint32_t x = ops_.next_bit(cand_, last + 1);
    for (; x < n_; x = ops_.next_bit(allowed_[depth], x + 1)) {
      if (x + need > n_) break;  // ascending order: not enough room left
      if ((out_->nodes & 1023u) == 0 && expired()) return;
      if (!extend(depth, x)) continue;
      stack_.push_back(x);
      if (depth + 1 == target_) {
        record();
      } else {
        ops_.and_into(allowed_[depth + 1], allowed_[depth], t_.compat[x]);
        ops_.above(cand_, allowed_[depth + 1], x);
        if (ops_.popcount(cand_) >= need - 1) dfs(depth + 1, x);
      }
      stack_.pop_back();
      if (stop_root_ || (abort_ != nullptr && abort_->load(std::memory_order_relaxed))) return;
    }
  }

  Ops ops_;
  const SearchTables<Ops>& t_;
  std::uint32_t n_;
  int cap_;
  bool all_;
  std::optional<clock_type::time_point> deadline_;
  std::atomic<bool>* abort_;

  int target_ = 0;
  RootOutcome* out_ = nullptr;
  bool stop_root_ = false;
  std::vector<std::vector<typename Ops::Mask>> pow_;
  std::vector<typename Ops::Mask> allowed_;
  typename Ops::Mask vk_, vl_, cand_;
  std::vector<std::uint32_t> stack_;
};

template <class Ops>
SearchResult run_search(const SumFreeParams& p, const CyclicSet& noise,
                        const SearchOptions& opts) {
  const std::uint32_t n = p.n;
  Ops ops(n);
  SearchTables<Ops> tables = build_tables(ops, p, noise);

  // translates by multiples of n/delta preserve sum-freeness, so the minimum
  // element of a witness can be normalized into [0, n/delta)
  const std::uint32_t delta = static_cast<std::uint32_t>(std::gcd<std::int64_t>(n, p.k - p.l));
  const std::uint32_t root_hi = n / delta;

  std::int64_t ub = std::min<std::int64_t>(search_upper_bound(p, noise), n);
  std::optional<clock_type::time_point> deadline;
  if (opts.budget) deadline = clock_type::now() + *opts.budget;
  std::atomic<bool> abort_flag{false};
  const int jobs = std::max(1, opts.jobs);

  SearchResult result;
  for (std::int64_t target = ub; target >= 1; --target) {
    std::vector<std::uint32_t> roots;
    for (std::uint32_t a = ops.next_bit(tables.singles, 0);
         a < root_hi && a + target <= n; a = ops.next_bit(tables.singles, a + 1)) {
      roots.push_back(a);
    }
    std::vector<RootOutcome> slots(roots.size());

    auto worker = [&](std::size_t begin_hint, std::atomic<std::size_t>& next) {
      RootSearch<Ops> rs(ops, tables, n, static_cast<int>(ub), opts.witness_cap,
                         opts.all_witnesses, deadline, &abort_flag);
      (void)begin_hint;
      for (std::size_t i = next.fetch_add(1); i < roots.size(); i = next.fetch_add(1)) {
        if (abort_flag.load(std::memory_order_relaxed)) break;
        rs.run(roots[i], static_cast<int>(target), slots[i]);
      }
    };

    if (jobs == 1 || roots.size() <= 1) {
      std::atomic<std::size_t> next{0};
      worker(0, next);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      std::size_t count = std::min<std::size_t>(jobs, roots.size());
      pool.reserve(count);
      for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker, i, std::ref(next));
      for (auto& th : pool) th.join();
    }

    std::vector<std::vector<std::uint32_t>> found;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      result.nodes_explored += slots[i].nodes;
      for (auto& wv : slots[i].wits) found.push_back(std::move(wv));
    }

    const bool aborted = abort_flag.load();
    if (!found.empty()) {
      result.mu = target;
      result.exhaustive = !aborted;
      if (opts.all_witnesses && !aborted) {
        std::set<std::vector<std::uint32_t>> expanded;
        for (const auto& wv : found) {
          CyclicSet w = CyclicSet(n);
          for (std::uint32_t e : wv) w.insert(e);
          for (std::uint32_t j = 0; j < delta; ++j) {
            expanded.insert(w.translated(static_cast<std::int64_t>(j) * root_hi).elements());
          }
        }
        for (const auto& ev : expanded) {
          CyclicSet w(n);
          for (std::uint32_t e : ev) w.insert(e);
          result.witnesses.push_back(std::move(w));
        }
      } else {
        std::size_t keep = opts.all_witnesses
                               ? found.size()
                               : std::min<std::size_t>(found.size(), opts.witness_cap);
        for (std::size_t i = 0; i < keep; ++i) {
          CyclicSet w(n);
          for (std::uint32_t e : found[i]) w.insert(e);
          result.witnesses.push_back(std::move(w));
        }
      }
      return result;
    }
    if (aborted) {
      result.mu = 0;
      result.exhaustive = false;
      return result;
    }
  }
  result.mu = 0;
  result.exhaustive = true;
  result.witnesses.push_back(CyclicSet(n));
  return result;
}

}  // namespace

bool is_sumfree(const CyclicSet& a, const CyclicSet& noise, const SumFreeParams& p) {
  p.validate();
  if (a.modulus() != p.n || noise.modulus() != p.n) {
    throw std::invalid_argument("is_sumfree: sets must live in Z/nZ for the given n");
  }
  if (noise.empty()) throw std::invalid_argument("is_sumfree: noise set must be nonempty");
  if (a.empty()) return true;
  return disjoint(iterated_noisy(p.k, a, noise), iterated_noisy(p.l, a, noise));
}

CyclicSet prefix_noise(std::uint32_t n, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("prefix_noise: length must be positive");
  CyclicSet s(n);
  for (std::int64_t i = 0; i < c && i < static_cast<std::int64_t>(n); ++i) s.insert(i);
  return s;
}

std::int64_t search_upper_bound(const SumFreeParams& p, const CyclicSet& noise) {
  p.validate();
  if (noise.modulus() != p.n) throw std::invalid_argument("noise modulus mismatch");
  if (noise.empty()) throw std::invalid_argument("noise set must be nonempty");

  std::int64_t ub = bajnok_matzke(p.n, p.k, p.l);
  std::vector<std::uint32_t> elems = noise.elements();
  if (elems.size() >= 2) {
    // any noise pair {c0,c1} caps mu via the equivalent {0, c1-c0} bound
    std::size_t limit = std::min<std::size_t>(elems.size(), 40);
    for (std::size_t i = 0; i < limit; ++i) {
      for (std::size_t j = i + 1; j < limit; ++j) {
        std::int64_t s = mod_floor(static_cast<std::int64_t>(elems[j]) - elems[i], p.n);
        ub = std::min(ub, bounds_two_element(p.n, p.k, p.l, s).upper);
      }
    }
    // a unit-difference progression is equivalent to prefix noise of its size
    if (p.n <= 4096) {
      for (std::uint32_t u : units_mod(p.n)) {
        if (is_cyclic_interval(noise.scaled(u))) {
          ub = std::min(ub, std::max<std::int64_t>(
                                0, chi_bound(p.n, p.k, p.l,
                                             static_cast<std::int64_t>(elems.size()))));
          break;
        }
      }
    }
  }
  return std::max<std::int64_t>(0, ub);
}

SearchResult brute_force_mu(const SumFreeParams& p, const CyclicSet& noise,
                            const SearchOptions& opts) {
  p.validate();
  if (noise.modulus() != p.n) throw std::invalid_argument("noise modulus mismatch");
  if (noise.empty()) throw std::invalid_argument("noise set must be nonempty");
  if (p.n > opts.ceiling) {
    throw search_limit_error("modulus exceeds the search ceiling");
  }
  if (p.n <= 64 && !opts.force_generic) return run_search<Word64Ops>(p, noise, opts);
  return run_search<WideOps>(p, noise, opts);
}

IntervalResult longest_interval(const SumFreeParams& p, std::int64_t c) {
  p.validate();
  if (c < 2) throw std::invalid_argument("noise length c must be at least 2");
  BoundsReport rep = bounds_prefix_noise(p.n, p.k, p.l, c);
  IntervalResult out{std::max<std::int64_t>(0, rep.raw_lower), CyclicSet(p.n), 0};
  if (out.length == 0) return out;
  CyclicSet noise = prefix_noise(p.n, c);
  for (std::uint32_t a = 0; a < p.n; ++a) {
    CyclicSet w = interval_set(p.n, a, out.length);
    if (is_sumfree(w, noise, p)) {
      out.witness = std::move(w);
      out.start = a;
      return out;
    }
  }
  throw std::logic_error("no sum-free interval of the predicted length exists");
}

CyclicSet build_0s_witness(const SumFreeParams& p, std::int64_t s,
                           const SearchOptions& opts) {
  p.validate();
  if (s < 1 || s >= static_cast<std::int64_t>(p.n)) {
    throw std::invalid_argument("second noise element must satisfy 1 <= s < n");
  }
  CyclicSet noise = CyclicSet::from_elements(p.n, {0, s});
  std::int64_t d = std::gcd(s, static_cast<std::int64_t>(p.n));

  CyclicSet best(p.n);
  if (d == 1) {
    IntervalResult iv = longest_interval(p, 2);
    if (iv.length > 0) best = iv.witness.scaled(s);
  } else {
    SearchOptions inner;
    inner.witness_cap = 1;
    inner.ceiling = std::max<std::uint32_t>(opts.ceiling, 64);
    for (std::uint32_t e : divisors(static_cast<std::uint32_t>(d))) {
      if (e < 2) continue;
      SumFreeParams pe{e, p.k, p.l};
      SearchResult res = brute_force_mu(pe, CyclicSet::singleton(e, 0), inner);
      if (res.mu > 0) {
        CyclicSet lifted = res.witnesses.front().lifted(p.n);
        if (lifted.size() > best.size()) best = std::move(lifted);
      }
    }
    IntervalResult iv = longest_interval(p, s + 1);
    if (iv.length > static_cast<std::int64_t>(best.size())) best = iv.witness;
  }

  if (!is_sumfree(best, noise, p)) {
    throw std::logic_error("constructed witness fails the sum-free check");
  }
  return best;
}

bool is_redundant(const CyclicSet& a, std::uint32_t z, std::int64_t c, int k) {
  if (c < 2) throw std::invalid_argument("noise length c must be at least 2");
  if (k < 1) throw std::invalid_argument("fold count k must be at least 1");
  const std::uint32_t n = a.modulus();
  const std::int64_t zr = mod_floor(z, n);
  const std::int64_t threshold = c - ceil_div(c - 2, k);
  std::vector<std::uint32_t> elems = a.elements();
  for (std::uint32_t x : elems) {
    for (std::uint32_t y : elems) {
      std::int64_t g = mod_floor(static_cast<std::int64_t>(y) - x, n);
      if (g < 2 || g >= threshold) continue;
      std::int64_t dz = mod_floor(zr - x, n);
      if (dz >= 1 && dz <= g - 1) return true;
    }
  }
  return false;
}

}  // namespace znsum
