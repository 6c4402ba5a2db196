// znsum: exact maxima, closed-form bounds, and verification sweeps for
// noisy sum-free subsets of Z/nZ.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "znsum/bounds.hpp"
#include "znsum/equivalence.hpp"
#include "znsum/report.hpp"
#include "znsum/set_literal.hpp"
#include "znsum/sumfree.hpp"
#include "znsum/verify.hpp"
#include "znsum/version.hpp"

namespace {

using namespace znsum;
using nlohmann::json;

struct GlobalOpts {
  int jobs = 1;
  std::int64_t budget_ms = -1;  // < 0: none
  std::uint32_t ceiling = 64;
  bool as_json = false;
};

struct NoiseFlags {
  std::string literal;
  std::int64_t c = -1;
  std::int64_t s = -1;

  // exactly one spelling must be present
  CyclicSet resolve(std::uint32_t n) const {
    int given = (!literal.empty() ? 1 : 0) + (c >= 0 ? 1 : 0) + (s >= 0 ? 1 : 0);
    if (given != 1) {
      throw std::invalid_argument("give exactly one of --noise, --c, --s");
    }
    if (c >= 0) return prefix_noise(n, c);
    if (s >= 0) return CyclicSet::from_elements(n, {0, s});
    return parse_set(literal, n);
  }
};

void add_noise_flags(CLI::App* cmd, NoiseFlags& nf) {
  cmd->add_option("--noise", nf.literal, "noise set literal, e.g. 0,1,2");
  cmd->add_option("--c", nf.c, "prefix noise {0..c-1}");
  cmd->add_option("--s", nf.s, "two-element noise {0,s}");
}

SearchOptions search_options(const GlobalOpts& g) {
  SearchOptions o;
  o.jobs = g.jobs;
  o.ceiling = g.ceiling;
  if (g.budget_ms >= 0) o.budget = std::chrono::milliseconds(g.budget_ms);
  return o;
}

HarnessOptions harness_options(const GlobalOpts& g) {
  HarnessOptions o;
  o.jobs = g.jobs;
  o.ceiling = g.ceiling;
  if (g.budget_ms >= 0) o.row_budget_ms = g.budget_ms;
  return o;
}

std::int64_t elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(const GlobalOpts& g, const std::string& command, json params, json results,
          std::int64_t elapsed_ms, const std::string& text) {
  if (g.as_json) {
    std::cout << make_envelope(command, std::move(params), std::move(results), elapsed_ms)
                     .dump(2)
              << "\n";
  } else {
    std::cout << text;
  }
}

void write_report(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << payload;
}

int run_mu(const GlobalOpts& g, std::uint32_t n, int k, int l, const NoiseFlags& nf,
           int witness_cap, bool all_witnesses) {
  auto t0 = std::chrono::steady_clock::now();
  CyclicSet noise = nf.resolve(n);
  SearchOptions opts = search_options(g);
  if (witness_cap >= 0) opts.witness_cap = witness_cap;
  opts.all_witnesses = all_witnesses;
  SearchResult r = brute_force_mu(SumFreeParams{n, k, l}, noise, opts);
  if (!r.exhaustive) {
    std::cerr << "budget exhausted: mu >= " << r.mu << " is only a lower bound\n";
    return 3;
  }

  std::string text = "mu = " + std::to_string(r.mu) + "\n";
  text += "exhaustive = true\n";
  text += "nodes = " + std::to_string(r.nodes_explored) + "\n";
  json wits = json::array();
  for (const CyclicSet& w : r.witnesses) {
    text += "witness = " + format_set(w) + "\n";
    wits.push_back(format_set(w));
  }
  json params = {{"n", n},          {"k", k},
                 {"l", l},          {"noise", format_set(noise)},
                 {"jobs", g.jobs},  {"ceiling", g.ceiling}};
  json results = {{"mu", r.mu},
                  {"witnesses", wits},
                  {"nodes", r.nodes_explored},
                  {"exhaustive", r.exhaustive}};
  emit(g, "mu", params, results, elapsed_since(t0), text);
  return 0;
}

json bounds_json(const BoundsReport& r) {
  json terms = json::array();
  for (auto [d, t] : r.per_divisor_terms) terms.push_back({{"divisor", d}, {"term", t}});
  return {{"lower", r.lower},         {"upper", r.upper},
          {"raw_lower", r.raw_lower}, {"raw_upper", r.raw_upper},
          {"delta", r.delta},         {"chi", r.chi},
          {"r", r.r},                 {"per_divisor_terms", terms},
          {"method", r.method}};
}

std::string bounds_text(const BoundsReport& r) {
  std::string text = "method = " + r.method + "\n";
  text += "lower = " + std::to_string(r.lower) + "\n";
  text += "upper = " + std::to_string(r.upper) + "\n";
  text += "raw_lower = " + std::to_string(r.raw_lower) + "\n";
  text += "raw_upper = " + std::to_string(r.raw_upper) + "\n";
  text += "delta = " + std::to_string(r.delta) + "\n";
  text += "chi = " + std::to_string(r.chi) + "\n";
  text += "r = " + std::to_string(r.r) + "\n";
  for (auto [d, t] : r.per_divisor_terms) {
    text += "term[" + std::to_string(d) + "] = " + std::to_string(t) + "\n";
  }
  return text;
}

int run_bounds(const GlobalOpts& g, std::uint32_t n, int k, int l, const NoiseFlags& nf) {
  auto t0 = std::chrono::steady_clock::now();
  json params = {{"n", n}, {"k", k}, {"l", l}};
  if (nf.c >= 0) {
    BoundsReport r = bounds_prefix_noise(n, k, l, nf.c);
    params["c"] = nf.c;
    emit(g, "bounds", params, bounds_json(r), elapsed_since(t0), bounds_text(r));
  } else if (nf.s >= 0) {
    BoundsReport r = bounds_two_element(n, k, l, nf.s);
    params["s"] = nf.s;
    emit(g, "bounds", params, bounds_json(r), elapsed_since(t0), bounds_text(r));
  } else if (!nf.literal.empty()) {
    // no closed form for arbitrary noise; report the generic upper bound
    CyclicSet noise = parse_set(nf.literal, n);
    std::int64_t ub = search_upper_bound(SumFreeParams{n, k, l}, noise);
    params["noise"] = format_set(noise);
    json results = {{"lower", 0}, {"upper", ub}, {"method", "generic-upper"}};
    std::string text = "method = generic-upper\nlower = 0\nupper = " +
                       std::to_string(ub) + "\n";
    emit(g, "bounds", params, results, elapsed_since(t0), text);
  } else {
    throw std::invalid_argument("give exactly one of --noise, --c, --s");
  }
  return 0;
}

int run_check(const GlobalOpts& g, std::uint32_t n, int k, int l, const NoiseFlags& nf,
              const std::string& set_literal) {
  auto t0 = std::chrono::steady_clock::now();
  CyclicSet noise = nf.resolve(n);
  CyclicSet a = parse_set(set_literal, n);
  bool ok = is_sumfree(a, noise, SumFreeParams{n, k, l});
  json params = {{"n", n},
                 {"k", k},
                 {"l", l},
                 {"set", format_set(a)},
                 {"noise", format_set(noise)}};
  emit(g, "check", params, json{{"sumfree", ok}}, elapsed_since(t0),
       std::string("sumfree = ") + (ok ? "true" : "false") + "\n");
  return 0;
}

int run_scan(const GlobalOpts& g, const ScanRanges& ranges, const std::string& format,
             const std::string& out_path) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<SweepRow> rows = conjecture_scan(ranges, harness_options(g));
  bool bad = has_counterexample(rows);

  std::string payload;
  if (format == "csv") {
    payload = sweep_csv(rows);
  } else {
    json params = {{"c_max", ranges.c_max},
                   {"k_max", ranges.k_max},
                   {"l_max", ranges.l_max},
                   {"n_factor", ranges.n_factor},
                   {"jobs", g.jobs}};
    if (ranges.n_max) params["n_max"] = *ranges.n_max;
    payload = make_envelope("scan", params, sweep_rows_json(rows), elapsed_since(t0))
                  .dump(2) +
              "\n";
  }
  write_report(out_path, payload);
  if (!out_path.empty()) {
    std::cout << "rows = " << rows.size() << "\n"
              << "counterexample = " << (bad ? "true" : "false") << "\n";
  }
  return bad ? 1 : 0;
}

int run_sweep(const GlobalOpts& g, NoiseKind kind, const SweepRanges& ranges,
              const std::string& format, const std::string& out_path) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<SweepRow> rows = sandwich_sweep(kind, ranges, harness_options(g));

  std::string payload;
  if (format == "csv") {
    payload = sweep_csv(rows);
  } else {
    json params = {{"kind", std::string(to_string(kind))},
                   {"n_max", ranges.n_max},
                   {"k_max", ranges.k_max},
                   {"l_max", ranges.l_max},
                   {"c_max", ranges.c_max},
                   {"skip_unit_s", ranges.skip_unit_s},
                   {"jobs", g.jobs}};
    payload = make_envelope("sweep", params, sweep_rows_json(rows), elapsed_since(t0))
                  .dump(2) +
              "\n";
  }
  write_report(out_path, payload);
  if (!out_path.empty()) std::cout << "rows = " << rows.size() << "\n";
  return 0;
}

int run_orbit(const GlobalOpts& g, std::int64_t c, std::uint32_t p) {
  auto t0 = std::chrono::steady_clock::now();
  CyclicSet orbit = size3_orbit(c, p);
  json params = {{"c", c}, {"p", p}};
  emit(g, "orbit", params, json{{"orbit", format_set(orbit)}}, elapsed_since(t0),
       "orbit = " + format_set(orbit) + "\n");
  return 0;
}

int run_equiv(const GlobalOpts& g, std::uint32_t n, const std::string& c1,
              const std::string& c2) {
  auto t0 = std::chrono::steady_clock::now();
  CyclicSet a = parse_set(c1, n);
  CyclicSet b = parse_set(c2, n);
  bool eq = are_equivalent(a, b);
  CanonicalForm fa = canonicalize(a);
  json params = {{"n", n}, {"c1", format_set(a)}, {"c2", format_set(b)}};
  json results = {{"equivalent", eq},
                  {"representative", format_set(fa.representative)},
                  {"orbit_size", fa.orbit_size}};
  std::string text = std::string("equivalent = ") + (eq ? "true" : "false") + "\n" +
                     "representative = " + format_set(fa.representative) + "\n" +
                     "orbit_size = " + std::to_string(fa.orbit_size) + "\n";
  emit(g, "equiv", params, results, elapsed_since(t0), text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noisy sum-free sets over Z/nZ: exact maxima, bounds, and sweeps"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file presetting the options below");
  app.set_version_flag("--version", tool_version);

  GlobalOpts g;
  app.add_option("--jobs", g.jobs, "worker threads")
      ->envname("ZNSUM_JOBS")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-ms", g.budget_ms, "wall-clock budget per search");
  app.add_option("--ceiling", g.ceiling, "largest modulus the search accepts");
  app.add_flag("--json", g.as_json, "emit the JSON envelope instead of text");

  std::uint32_t n = 0;
  int k = 0, l = 0;
  NoiseFlags nf;
  int witness_cap = -1;
  bool all_witnesses = false;
  std::string set_literal, format = "csv", out_path, kind_name = "prefix";
  std::int64_t orbit_c = 0;
  std::uint32_t orbit_p = 0;
  std::string equiv_c1, equiv_c2;
  ScanRanges scan_ranges;
  SweepRanges sweep_ranges;
  std::uint32_t scan_n_max = 0;

  CLI::App* mu = app.add_subcommand("mu", "exact maximum sum-free size");
  mu->add_option("--n", n, "modulus")->required();
  mu->add_option("--k", k, "left fold count")->required();
  mu->add_option("--l", l, "right fold count")->required();
  add_noise_flags(mu, nf);
  mu->add_option("--witnesses", witness_cap, "keep at most this many witnesses");
  mu->add_flag("--all-witnesses", all_witnesses, "list every optimal set");

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form lower/upper bounds");
  bounds->add_option("--n", n, "modulus")->required();
  bounds->add_option("--k", k, "left fold count")->required();
  bounds->add_option("--l", l, "right fold count")->required();
  add_noise_flags(bounds, nf);

  CLI::App* check = app.add_subcommand("check", "test one set for sum-freeness");
  check->add_option("--set", set_literal, "candidate set literal")->required();
  check->add_option("--n", n, "modulus")->required();
  check->add_option("--k", k, "left fold count")->required();
  check->add_option("--l", l, "right fold count")->required();
  add_noise_flags(check, nf);

  CLI::App* scan = app.add_subcommand("scan", "grid scan for conjecture counterexamples");
  scan->add_option("--c-max", scan_ranges.c_max, "largest prefix length");
  scan->add_option("--k-max", scan_ranges.k_max, "largest k");
  scan->add_option("--l-max", scan_ranges.l_max, "largest l");
  scan->add_option("--n-factor", scan_ranges.n_factor, "enumerate n < factor*(k+l)");
  scan->add_option("--n-max", scan_n_max, "hard cap on n");
  scan->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* sweep = app.add_subcommand("sweep", "bounds-vs-oracle sandwich sweep");
  sweep->add_option("--kind", kind_name, "prefix or two-element")
      ->check(CLI::IsMember({"prefix", "two-element"}));
  sweep->add_option("--n-max", sweep_ranges.n_max, "largest modulus");
  sweep->add_option("--k-max", sweep_ranges.k_max, "largest k");
  sweep->add_option("--l-max", sweep_ranges.l_max, "largest l");
  sweep->add_option("--c-max", sweep_ranges.c_max, "largest prefix length");
  sweep->add_flag("--skip-unit-s", sweep_ranges.skip_unit_s,
                  "two-element sweeps: only s with gcd(s,n) > 1");
  sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* orbit = app.add_subcommand("orbit", "values c' with {0,1,c'} ~ {0,1,c} mod p");
  orbit->add_option("--c", orbit_c, "third noise element")->required();
  orbit->add_option("--p", orbit_p, "prime modulus")->required();

  CLI::App* equiv = app.add_subcommand("equiv", "shift/scale equivalence of noise sets");
  equiv->add_option("--n", n, "modulus")->required();
  equiv->add_option("--c1", equiv_c1, "first set literal")->required();
  equiv->add_option("--c2", equiv_c2, "second set literal")->required();

  for (CLI::App* sub : {mu, bounds, check, scan, sweep, orbit, equiv}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
    if (scan->parsed()) {
      if (scan_n_max > 0) scan_ranges.n_max = scan_n_max;
      return run_scan(g, scan_ranges, format, out_path);
    }
    if (mu->parsed()) return run_mu(g, n, k, l, nf, witness_cap, all_witnesses);
    if (bounds->parsed()) return run_bounds(g, n, k, l, nf);
    if (check->parsed()) return run_check(g, n, k, l, nf, set_literal);
    if (sweep->parsed()) {
      NoiseKind kind =
          kind_name == "prefix" ? NoiseKind::prefix : NoiseKind::two_element;
      return run_sweep(g, kind, sweep_ranges, format, out_path);
    }
    if (orbit->parsed()) return run_orbit(g, orbit_c, orbit_p);
    if (equiv->parsed()) return run_equiv(g, n, equiv_c1, equiv_c2);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, any parse failure is usage
  } catch (const search_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
