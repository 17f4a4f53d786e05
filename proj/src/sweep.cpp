#include "lefschetz/sweep.hpp"

#include <omp.h>

#include <charconv>
#include <chrono>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

namespace lefschetz {

namespace {

Int parse_int(std::string_view s) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("not an integer: " + std::string(s));
  return v;
}

// Records every (shift, degree) where the two engines report different numbers.
void compare_rows(const RankReport& comb, const RankReport& oracle, SweepRecord& rec) {
  const std::size_t n = std::max(comb.rows.size(), oracle.rows.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < comb.rows.size() && !comb.rows[i].determined) continue;
    if (i >= comb.rows.size() || i >= oracle.rows.size() || !comb.rows[i].same_values(oracle.rows[i])) {
      const Int degree = i < comb.rows.size() ? comb.rows[i].degree : oracle.rows[i].degree;
      rec.disagreements.emplace_back(comb.shift, degree);
    }
  }
}

// Combinatorial rows with undetermined ones taken from the oracle.
Verdict with_fallback(RankReport comb, const RankReport& oracle) {
  for (RankRow& row : comb.rows) {
    if (row.determined) continue;
    for (const RankRow& o : oracle.rows)
      if (o.degree == row.degree) row = o;
  }
  return aggregate_verdict(comb.rows);
}

}  // namespace

IntRange parse_range(std::string_view text) {
  IntRange r;
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range: " + std::string(text));
  return r;
}

bool SweepRecord::square_failed() const noexcept {
  return !error.empty() || verdict.kind != VerdictKind::AllMaximal || oracle_verdict.kind != VerdictKind::AllMaximal;
}

bool SweepRecord::wlp_failed() const noexcept {
  return !error.empty() || wlp_verdict.kind != VerdictKind::AllMaximal ||
         wlp_oracle_verdict.kind != VerdictKind::AllMaximal;
}

std::vector<PowerSequence> sample_sequences(const SweepOptions& opts) {
  if (opts.count < 1) throw std::invalid_argument("count must be >= 1");
  if (opts.r.lo < 3 || opts.a.lo < 1 || opts.r.lo > opts.r.hi || opts.a.lo > opts.a.hi)
    throw std::invalid_argument("ranges need 3 <= r_lo <= r_hi and 1 <= a_lo <= a_hi");
  std::vector<PowerSequence> out;
  out.reserve(static_cast<std::size_t>(opts.count));
  const std::uint64_t base = splitmix64(opts.seed);
  for (Int i = 0; i < opts.count; ++i) {
    std::mt19937_64 gen(stream_seed(base, static_cast<std::uint64_t>(i)));
    std::uniform_int_distribution<Int> r_dist(opts.r.lo, opts.r.hi);
    std::uniform_int_distribution<Int> a_dist(opts.a.lo, opts.a.hi);
    std::vector<Int> powers(static_cast<std::size_t>(r_dist(gen)));
    for (Int& a : powers) a = a_dist(gen);
    out.emplace_back(std::move(powers));
  }
  return out;
}

SweepRecord evaluate_sequence(std::size_t index, const PowerSequence& powers, const PrimeFieldConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.index = index;
  rec.powers = powers;
  rec.seed = cfg.seed;
  rec.prime = cfg.prime;
  try {
    rec.case_data = compute_case_data(powers);
    const Int shifts[] = {2, 1};
    const auto comb = rank_profiles(powers, shifts, Engine::Combinatorial);
    const auto oracle = rank_profiles(powers, shifts, Engine::Oracle, cfg);
    rec.verdict = with_fallback(comb[0], oracle[0]);
    rec.wlp_verdict = with_fallback(comb[1], oracle[1]);
    rec.oracle_verdict = oracle[0].verdict;
    rec.wlp_oracle_verdict = oracle[1].verdict;
    compare_rows(comb[0], oracle[0], rec);
    compare_rows(comb[1], oracle[1], rec);
    rec.engines_agree = rec.disagreements.empty();
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.engines_agree = false;
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

nlohmann::json to_json(const SweepRecord& rec) {
  nlohmann::json j = {{"index", rec.index},
                      {"powers", rec.powers.values()},
                      {"case", to_string(rec.case_data.kind)},
                      {"p", rec.case_data.p},
                      {"b", rec.case_data.b}};
  if (rec.case_data.kind == CaseKind::II) {
    j["m"] = rec.case_data.split_index;
    j["q"] = rec.case_data.q;
  }
  j["verdict"] = to_string(rec.verdict.kind);
  j["failures"] = rec.verdict.failures;
  j["oracle_verdict"] = to_string(rec.oracle_verdict.kind);
  j["wlp_verdict"] = to_string(rec.wlp_verdict.kind);
  j["wlp_oracle_verdict"] = to_string(rec.wlp_oracle_verdict.kind);
  j["engines_agree"] = rec.engines_agree;
  nlohmann::json dis = nlohmann::json::array();
  for (const auto& [k, d] : rec.disagreements) dis.push_back({{"shift", k}, {"degree", d}});
  j["disagreements"] = std::move(dis);
  if (!rec.error.empty()) j["error"] = rec.error;
  j["elapsed_ms"] = rec.elapsed_ms;
  j["seed"] = rec.seed;
  j["prime"] = rec.prime;
  return j;
}

SweepSummary run_sweep(const SweepOptions& opts, std::ostream* jsonl) {
  const auto samples = sample_sequences(opts);
  PrimeFieldConfig cfg = opts.cfg;
  cfg.seed = opts.seed;
  cfg.validate(0);

  SweepSummary summary;
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opts.jobs))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const SweepRecord rec = evaluate_sequence(static_cast<std::size_t>(i), samples[static_cast<std::size_t>(i)], cfg);
    const std::string line = to_json(rec).dump();
#pragma omp critical(sweep_output)
    {
      if (jsonl) *jsonl << line << '\n' << std::flush;
      ++summary.total;
      (rec.case_data.kind == CaseKind::I ? summary.case_i : summary.case_ii) += 1;
      if (!rec.error.empty()) ++summary.errors;
      if (rec.square_failed()) ++summary.failures;
      if (rec.wlp_failed()) ++summary.wlp_failures;
      if (!rec.engines_agree) ++summary.disagreements;
    }
  }
  return summary;
}

}  // namespace lefschetz
