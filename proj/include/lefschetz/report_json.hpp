// JSON shapes for reports, traces and ledgers.  Field names are stable so
// runs can be diffed.
#pragma once

#include <optional>

#include "json.hpp"
#include "lefschetz/analysis.hpp"
#include "lefschetz/linsys.hpp"

namespace lefschetz {

nlohmann::json to_json(const LinearSystem& sys);
nlohmann::json to_json(const ReductionTrace& trace);
nlohmann::json to_json(const CaseData& cd);
nlohmann::json to_json(const RankRow& row);
nlohmann::json to_json(const Verdict& v);

/// {powers, shift, rows[], verdict, failures, engine, prime, seed}
nlohmann::json to_json(const RankReport& report, std::string_view engine,
                       const std::optional<PrimeFieldConfig>& cfg);

nlohmann::json to_json(const ProofLedger& ledger);
nlohmann::json to_json(const CaseIIAnalysis& analysis);

}  // namespace lefschetz
