// Seeded verification campaigns: sample power sequences, run both engines
// on x L^2 and x L, and persist one JSON line per sequence.
#pragma once

#include <iosfwd>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lefschetz/analysis.hpp"

namespace lefschetz {

struct IntRange {
  Int lo = 0;
  Int hi = 0;
};

/// "5..10" or a single value "7".  Throws std::invalid_argument.
IntRange parse_range(std::string_view text);

struct SweepOptions {
  IntRange r{5, 10};
  IntRange a{1, 12};
  Int count = 100;
  std::uint64_t seed = 42;
  int jobs = 1;
  PrimeFieldConfig cfg;  // cfg.seed is replaced by `seed`
};

struct SweepRecord {
  std::size_t index = 0;
  PowerSequence powers{1};
  CaseData case_data;
  Verdict verdict;             // x L^2, combinatorial with oracle fallback
  Verdict oracle_verdict;      // x L^2, oracle
  Verdict wlp_verdict;         // x L, combinatorial with oracle fallback
  Verdict wlp_oracle_verdict;  // x L, oracle
  bool engines_agree = true;
  std::vector<std::pair<Int, Int>> disagreements;  // (shift, degree)
  double elapsed_ms = 0;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  std::string error;

  bool square_failed() const noexcept;
  bool wlp_failed() const noexcept;
};

struct SweepSummary {
  Int total = 0;
  Int case_i = 0;
  Int case_ii = 0;
  Int failures = 0;       // x L^2 not maximal on some engine
  Int wlp_failures = 0;   // x L not maximal on some engine
  Int disagreements = 0;  // sequences where the engines differ
  Int errors = 0;

  bool ok() const noexcept { return failures == 0 && wlp_failures == 0 && disagreements == 0 && errors == 0; }
};

/// Deterministic in (seed, ranges, count); independent of jobs.
std::vector<PowerSequence> sample_sequences(const SweepOptions& opts);

SweepRecord evaluate_sequence(std::size_t index, const PowerSequence& powers, const PrimeFieldConfig& cfg);

nlohmann::json to_json(const SweepRecord& rec);

/// Evaluates every sample, writing each record as one line to `jsonl` (if
/// non-null) as soon as it completes.
SweepSummary run_sweep(const SweepOptions& opts, std::ostream* jsonl);

}  // namespace lefschetz
