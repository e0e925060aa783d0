#pragma once

#include "perdet/oracle.hpp"
#include "perdet/verdicts.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace perdet {

// Structured report of a verdict; verdict_from_json inverts it exactly.
nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

std::string verdict_to_text(const Verdict& v);

nlohmann::json oracle_rows_to_json(const std::vector<OracleRow>& rows);
std::vector<OracleRow> oracle_rows_from_json(const nlohmann::json& j);
std::string oracle_rows_to_text(const std::vector<OracleRow>& rows);

nlohmann::json counterexample_to_json(const CounterexampleReport& r);
std::string counterexample_to_text(const CounterexampleReport& r);

std::string dicycle_to_text(const Dicycle& c);

} // namespace perdet
