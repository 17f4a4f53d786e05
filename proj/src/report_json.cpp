#include "lefschetz/report_json.hpp"

namespace lefschetz {

using nlohmann::json;

json to_json(const LinearSystem& sys) { return {{"degree", sys.degree}, {"mults", sys.mults}}; }

json to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const ReductionStep& s : trace.steps) {
    json j = {{"kind", to_string(s.kind)}, {"before", to_json(s.before)}, {"after", to_json(s.after)}};
    if (s.kind == StepKind::Cremona) j["shift"] = s.shift;
    steps.push_back(std::move(j));
  }
  return {{"steps", std::move(steps)}, {"terminal", to_json(trace.terminal)}};
}

json to_json(const CaseData& cd) {
  json j = {{"case", to_string(cd.kind)}, {"p", cd.p}, {"b", cd.b}, {"s", cd.s}, {"t", cd.t}};
  if (cd.kind == CaseKind::II) {
    j["m"] = cd.split_index;
    j["q"] = cd.q;
  }
  return j;
}

json to_json(const RankRow& row) {
  json j = {{"degree", row.degree}, {"engine", to_string(row.engine)}, {"determined", row.determined}};
  if (row.determined) {
    j["dim_source"] = row.dim_source;
    j["dim_target"] = row.dim_target;
    j["dim_quotient"] = row.dim_quotient;
    j["rank"] = row.rank;
    j["maximal"] = row.maximal;
  } else {
    for (const char* k : {"dim_source", "dim_target", "dim_quotient", "rank", "maximal"}) j[k] = nullptr;
  }
  return j;
}

json to_json(const Verdict& v) { return {{"verdict", to_string(v.kind)}, {"failures", v.failures}}; }

json to_json(const RankReport& report, std::string_view engine, const std::optional<PrimeFieldConfig>& cfg) {
  json rows = json::array();
  for (const RankRow& row : report.rows) rows.push_back(to_json(row));
  json j = {{"powers", report.powers.values()},
            {"shift", report.shift},
            {"rows", std::move(rows)},
            {"verdict", to_string(report.verdict.kind)},
            {"failures", report.verdict.failures},
            {"engine", engine}};
  j["prime"] = cfg ? json(cfg->prime) : json(nullptr);
  j["seed"] = cfg ? json(cfg->seed) : json(nullptr);
  return j;
}

json to_json(const ProofLedger& ledger) {
  json checks = json::array();
  for (const LedgerCheck& c : ledger.checks)
    checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"case_data", to_json(ledger.case_data)},
          {"r", ledger.r},
          {"sum_squares", ledger.sum_squares},
          {"critical_lhs", ledger.critical_lhs},
          {"critical_rhs", ledger.critical_rhs},
          {"predicted", ledger.predicted},
          {"endgame_offset", ledger.endgame_offset},
          {"checks", std::move(checks)},
          {"all_passed", ledger.all_passed()}};
}

json to_json(const CaseIIAnalysis& a) {
  json rows = json::array();
  for (const CaseIIRow& row : a.rows)
    rows.push_back({{"degree", row.degree},
                    {"label", to_string(row.label)},
                    {"expected", to_string(row.expected)},
                    {"b_row", to_json(row.b_row)},
                    {"a_row", to_json(row.a_row)},
                    {"holds", row.holds}});
  json tail = json::array();
  for (const TailCheck& t : a.tail)
    tail.push_back({{"prefix_length", t.prefix_length}, {"dim_at_q_plus_1", t.dim_at_q_plus_1}, {"holds", t.holds}});
  return {{"case_data", to_json(a.case_data)},
          {"pivot_power", a.pivot_power},
          {"rows", std::move(rows)},
          {"tail", std::move(tail)},
          {"full_verdict", to_string(a.full.verdict.kind)},
          {"consistent", a.consistent}};
}

}  // namespace lefschetz
