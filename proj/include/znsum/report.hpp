#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "znsum/verify.hpp"

namespace znsum {

/// Fixed-schema CSV: header n,k,l,noise,lower,upper,mu,tight,witness,elapsed_ms.
/// Set-literal columns are always double-quoted.
std::string sweep_csv(const std::vector<SweepRow>& rows);

nlohmann::json sweep_rows_json(const std::vector<SweepRow>& rows);

nlohmann::json suite_json(const SuiteReport& rep);

/// Standard output envelope: {version, command, params, results, elapsed_ms}.
/// elapsed_ms is the only field excluded from byte-stability guarantees.
nlohmann::json make_envelope(const std::string& command, nlohmann::json params,
                             nlohmann::json results, std::int64_t elapsed_ms);

}  // namespace znsum
