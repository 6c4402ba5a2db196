#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

#include "znsum/report.hpp"
#include "znsum/set_literal.hpp"
#include "znsum/verify.hpp"

using namespace znsum;

namespace {

// elapsed_ms is wall-clock noise; zero it before comparing rows
std::vector<SweepRow> normalized(std::vector<SweepRow> rows) {
  for (SweepRow& r : rows) r.elapsed_ms = 0;
  return rows;
}

bool same_rows(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b) {
  return sweep_csv(normalized(a)) == sweep_csv(normalized(b)) &&
         sweep_rows_json(normalized(a)) == sweep_rows_json(normalized(b));
}

}  // namespace

TEST_CASE("single prefix rows") {
  SweepRow r = scan_row(40, 9, 4, 2);
  CHECK(r.n == 40);
  CHECK(r.kind == NoiseKind::prefix);
  CHECK(r.noise == "0,1");
  CHECK(r.formula_lower == 2);
  CHECK(r.formula_upper == 3);
  CHECK(r.oracle_mu == 2);
  CHECK(r.tight);
  CHECK(r.matches_conjecture);
  CHECK_FALSE(r.counterexample);
  CHECK(r.exhaustive);
  CyclicSet w = parse_set(r.witness, 40);
  CHECK(w.size() == 2);
  CHECK(is_sumfree(w, prefix_noise(40, 2), SumFreeParams{40, 9, 4}));

  r = scan_row(40, 9, 4, 3);
  CHECK(r.formula_lower == 1);
  CHECK(r.formula_upper == 2);
  CHECK(r.oracle_mu == 1);
  CHECK(r.tight);

  r = scan_row(12, 5, 2, 4);
  CHECK(r.oracle_mu == 0);
  CHECK(r.witness.empty());
  CHECK(r.tight);
}

TEST_CASE("single two-element rows") {
  SweepRow r = two_element_row(10, 2, 1, 5);
  CHECK(r.kind == NoiseKind::two_element);
  CHECK(r.c_or_s == 5);
  CHECK(r.noise == "0,5");
  CHECK(r.formula_lower == 4);
  CHECK(r.formula_upper == 4);
  CHECK(r.oracle_mu == 4);
  CHECK(r.tight);
  CHECK(is_sumfree(parse_set(r.witness, 10), CyclicSet::from_elements(10, {0, 5}),
                   SumFreeParams{10, 2, 1}));

  r = two_element_row(12, 5, 2, 3);
  CHECK(r.formula_lower == 0);
  CHECK(r.formula_upper == 1);
  CHECK(r.oracle_mu == 0);
  CHECK(r.tight);
  CHECK_FALSE(r.counterexample);
}

TEST_CASE("conjecture scan on a reduced grid") {
  ScanRanges ranges;
  ranges.c_max = 3;
  ranges.k_max = 4;
  ranges.l_max = 2;
  ranges.n_factor = 2;
  std::vector<SweepRow> rows = conjecture_scan(ranges);
  CHECK(!rows.empty());
  CHECK_FALSE(has_counterexample(rows));
  for (const SweepRow& r : rows) {
    CAPTURE(r.n);
    CAPTURE(r.k);
    CAPTURE(r.l);
    CAPTURE(r.c_or_s);
    CHECK(r.exhaustive);
    CHECK(r.matches_conjecture);
    CHECK(r.formula_lower <= r.oracle_mu);
    CHECK(r.oracle_mu <= std::max<std::int64_t>(r.formula_upper, 0));
    CHECK(r.n < static_cast<std::uint32_t>(ranges.n_factor * (r.k + r.l)));
    CHECK(r.k > r.l);
  }

  HarnessOptions three;
  three.jobs = 3;
  CHECK(same_rows(rows, conjecture_scan(ranges, three)));
}

TEST_CASE("scan rejects grids beyond the ceiling") {
  ScanRanges ranges;
  ranges.k_max = 40;
  ranges.l_max = 1;
  CHECK_THROWS_AS(conjecture_scan(ranges), search_limit_error);

  HarnessOptions opts;
  opts.ceiling = 30;
  CHECK_THROWS_AS(scan_row(31, 2, 1, 2, opts), search_limit_error);
}

TEST_CASE("counterexample detection is purely row-driven") {
  CHECK_FALSE(has_counterexample({}));
  SweepRow fake;
  fake.counterexample = true;
  CHECK(has_counterexample({fake}));
  fake.counterexample = false;
  CHECK_FALSE(has_counterexample({fake}));
}

TEST_CASE("sandwich sweep over prefix noise") {
  SweepRanges ranges;
  ranges.n_max = 16;
  ranges.k_max = 4;
  ranges.l_max = 2;
  ranges.c_max = 3;
  std::vector<SweepRow> rows = sandwich_sweep(NoiseKind::prefix, ranges);
  CHECK(!rows.empty());
  for (const SweepRow& r : rows) {
    CHECK(r.kind == NoiseKind::prefix);
    CHECK(r.exhaustive);
    CHECK(r.formula_lower <= r.oracle_mu);
    CHECK(r.oracle_mu <= r.formula_upper);
    CHECK(r.formula_upper - r.formula_lower <= 1);
    if (std::gcd(r.n, r.k - r.l) == 1) CHECK(r.tight);
  }
}

TEST_CASE("sandwich sweep over two-element noise") {
  SweepRanges ranges;
  ranges.n_max = 13;
  ranges.k_max = 4;
  ranges.l_max = 2;
  for (bool skip : {false, true}) {
    ranges.skip_unit_s = skip;
    std::vector<SweepRow> rows = sandwich_sweep(NoiseKind::two_element, ranges);
    CHECK(!rows.empty());
    for (const SweepRow& r : rows) {
      CHECK(r.kind == NoiseKind::two_element);
      CHECK(r.formula_lower <= r.oracle_mu);
      CHECK(r.oracle_mu <= r.formula_upper);
      if (skip) CHECK(std::gcd<std::int64_t>(r.c_or_s, r.n) > 1);
    }
  }
}

TEST_CASE("row budgets mark results non-exhaustive") {
  HarnessOptions opts;
  opts.row_budget_ms = 0;
  SweepRow r = scan_row(40, 9, 4, 2, opts);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.oracle_mu <= 2);
  CHECK_FALSE(r.counterexample);  // only exhaustive rows may accuse
  CHECK_FALSE(r.tight);
}

TEST_CASE("sumset inequality suite") {
  SuiteReport rep = kneser_suite(300, 48, 20260816);
  CHECK(rep.name == "kneser");
  CHECK(rep.trials == 300);
  CHECK(rep.passes == 300);
  CHECK(rep.failures == 0);
  CHECK(rep.notes.empty());

  SuiteReport again = kneser_suite(300, 48, 20260816);
  CHECK(suite_json(rep) == suite_json(again));
  CHECK(kneser_suite(64, 64, 7).failures == 0);
}

TEST_CASE("noise equivalence suite") {
  SuiteReport rep = equivalence_suite(60, 12, 42);
  CHECK(rep.name == "equivalence");
  CHECK(rep.trials == 60);
  CHECK(rep.failures == 0);
  CHECK(rep.notes.empty());
}

TEST_CASE("csv serialization") {
  std::vector<SweepRow> rows = {scan_row(40, 9, 4, 2), two_element_row(10, 2, 1, 5)};
  std::string csv = sweep_csv(rows);
  REQUIRE(csv.substr(0, csv.find('\n')) ==
          "n,k,l,noise,lower,upper,mu,tight,witness,elapsed_ms");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("40,9,4,\"0,1\",2,3,2,true,\"") != std::string::npos);
  CHECK(csv.find("10,2,1,\"0,5\",4,4,4,true,\"") != std::string::npos);
  CHECK(csv.back() == '\n');

  // mu = 0 rows keep the quoted empty witness
  csv = sweep_csv({two_element_row(12, 5, 2, 3)});
  CHECK(csv.find(",0,1,0,true,\"\",") != std::string::npos);
}

TEST_CASE("json serialization") {
  std::vector<SweepRow> rows = {scan_row(40, 9, 4, 3)};
  nlohmann::json j = sweep_rows_json(rows);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["n"] == 40);
  CHECK(j[0]["kind"] == "prefix");
  CHECK(j[0]["lower"] == 1);
  CHECK(j[0]["upper"] == 2);
  CHECK(j[0]["mu"] == 1);
  CHECK(j[0]["tight"] == true);
  CHECK(j[0]["exhaustive"] == true);
  CHECK(j[0].contains("witness"));
  CHECK(j[0].contains("elapsed_ms"));

  nlohmann::json env = make_envelope("scan", {{"c", 2}}, j, 17);
  CHECK(env["version"].is_string());
  CHECK(env["command"] == "scan");
  CHECK(env["params"]["c"] == 2);
  CHECK(env["results"] == j);
  CHECK(env["elapsed_ms"] == 17);
}
