#include "znsum/report.hpp"

#include <sstream>

#include "znsum/version.hpp"

namespace znsum {

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,k,l,noise,lower,upper,mu,tight,witness,elapsed_ms\n";
  for (const SweepRow& r : rows) {
    out << r.n << ',' << r.k << ',' << r.l << ",\"" << r.noise << "\"," << r.formula_lower
        << ',' << r.formula_upper << ',' << r.oracle_mu << ','
        << (r.tight ? "true" : "false") << ",\"" << r.witness << "\"," << r.elapsed_ms
        << '\n';
  }
  return out.str();
}

nlohmann::json sweep_rows_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    arr.push_back({{"n", r.n},
                   {"k", r.k},
                   {"l", r.l},
                   {"kind", std::string(to_string(r.kind))},
                   {"noise", r.noise},
                   {"lower", r.formula_lower},
                   {"upper", r.formula_upper},
                   {"mu", r.oracle_mu},
                   {"tight", r.tight},
                   {"matches_conjecture", r.matches_conjecture},
                   {"counterexample", r.counterexample},
                   {"exhaustive", r.exhaustive},
                   {"witness", r.witness},
                   {"elapsed_ms", r.elapsed_ms}});
  }
  return arr;
}

nlohmann::json suite_json(const SuiteReport& rep) {
  return {{"name", rep.name},
          {"trials", rep.trials},
          {"passes", rep.passes},
          {"failures", rep.failures},
          {"notes", rep.notes}};
}

nlohmann::json make_envelope(const std::string& command, nlohmann::json params,
                             nlohmann::json results, std::int64_t elapsed_ms) {
  return {{"version", tool_version},
          {"command", command},
          {"params", std::move(params)},
          {"results", std::move(results)},
          {"elapsed_ms", elapsed_ms}};
}

}  // namespace znsum
