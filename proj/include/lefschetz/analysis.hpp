// Maximal-rank analysis of multiplication by L^k on A = R/I, I generated by
// powers of general linear forms in three variables: the case split for the
// square, the critical-degree formula, per-degree rank profiles from either
// engine, and instance-level checks of the case arguments.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/combinatorics.hpp"
#include "lefschetz/oracle.hpp"

namespace lefschetz {

enum class CaseKind { I, II };

struct CaseData {
  Int p = 0;  // socle degree of A/LA in case I
  Int b = 0;  // sum a_i = (r-1)(p+1) + b, 1 <= b <= r-1
  Int s = 0;  // #{a_i == p}
  Int t = 0;  // #{a_i == p+1}
  CaseKind kind = CaseKind::I;
  Int split_index = 0;  // case II: least m >= 2 violating the averaged bound
  Int q = 0;            // case II: floor((a_1+...+a_m - m)/(m-1))
};

/// Requires r >= 2.  Integer arithmetic only.
CaseData compute_case_data(const PowerSequence& powers);

/// [2b + 1 - r]_+, the dimension of [A/L^2 A]_{p+1} in case I.
Int predicted_critical_dim(const CaseData& cd, Int r);

/// ([p - a_i + 1]_+)_i
std::vector<Int> line_base_multiplicities(const PowerSequence& powers, Int p);

enum class Engine { Combinatorial, Oracle };
std::string_view to_string(Engine e);
std::string_view to_string(CaseKind k);

struct RankRow {
  Int degree = 0;
  Int dim_source = 0;    // dim A_{j-k}
  Int dim_target = 0;    // dim A_j
  Int dim_quotient = 0;  // dim [A/L^k A]_j
  Int rank = 0;
  bool maximal = false;
  bool determined = true;  // false: some dimension was undetermined
  Engine engine = Engine::Combinatorial;

  bool surjective() const noexcept { return determined && rank == dim_target; }
  bool injective() const noexcept { return determined && rank == dim_source; }
  /// Same numbers (engine tag ignored).
  bool same_values(const RankRow& o) const noexcept;
};

enum class VerdictKind { AllMaximal, FailuresAt, Inconclusive };
std::string_view to_string(VerdictKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::AllMaximal;
  std::vector<Int> failures;
};

struct RankReport {
  PowerSequence powers;
  Int shift = 2;
  std::vector<RankRow> rows;
  Verdict verdict;
};

/// Recomputes a report's verdict from its rows.
Verdict aggregate_verdict(std::span<const RankRow> rows);

/// Rows for j = k, ..., e + 1 where e is the socle degree of A.  The Oracle
/// engine requires `cfg`.  Requires k >= 1 and r >= 3.
RankReport rank_profile(const PowerSequence& powers, Int k, Engine engine,
                        const std::optional<PrimeFieldConfig>& cfg = std::nullopt);

/// Several shifts sharing one pass over the degrees (and one set of random
/// forms per trial on the Oracle engine).
std::vector<RankReport> rank_profiles(const PowerSequence& powers, std::span<const Int> shifts, Engine engine,
                                      const std::optional<PrimeFieldConfig>& cfg = std::nullopt);

/// Shift-2 profile on the combinatorial engine; undetermined rows are
/// replaced by oracle rows when `cfg` is given.
RankReport verify_theorem(const PowerSequence& powers, const std::optional<PrimeFieldConfig>& cfg = std::nullopt);

struct LedgerCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct ProofLedger {
  CaseData case_data;
  Int r = 0;
  Int sum_squares = 0;
  Int critical_lhs = 0;        // dim [A/L^2 A]_{p+1}
  Int critical_rhs = 0;        // [dim A_{p+1} - dim A_{p-1}]_+
  Int predicted = 0;           // [2b + 1 - r]_+
  Int endgame_offset = 0;      // a_1 + a_2 + a_3 - (2p + 5)
  std::vector<LedgerCheck> checks;

  bool all_passed() const noexcept;
};

/// Evaluates the case-I argument on one instance.  Case II is a
/// ContractError.
ProofLedger case_i_proof_ledger(const PowerSequence& powers);

enum class DegreeLabel { Isomorphic, SurjectiveFromB, CriticalAboveQ, CriticalAtQ };
enum class MapBehaviour { Maximal, Surjective, Injective };
std::string_view to_string(DegreeLabel l);
std::string_view to_string(MapBehaviour b);

struct CaseIIRow {
  Int degree = 0;
  DegreeLabel label = DegreeLabel::Isomorphic;
  MapBehaviour expected = MapBehaviour::Maximal;
  RankRow b_row;  // R/(l_1^{a_1}, ..., l_m^{a_m})
  RankRow a_row;  // R/(l_1^{a_1}, ..., l_{m+1}^{a_{m+1}})
  bool holds = false;
};

struct TailCheck {
  std::size_t prefix_length = 0;
  Int dim_at_q_plus_1 = 0;  // dim [R/(l_1^{a_1}, ..., l_t^{a_t}, L)]_{q+1}
  bool holds = false;
};

struct CaseIIAnalysis {
  CaseData case_data;
  Int pivot_power = 0;  // a_{m+1}
  std::vector<CaseIIRow> rows;
  std::vector<TailCheck> tail;
  RankReport full;
  bool consistent = false;
};

/// Labels each degree of the truncated algebra by the case-II argument and
/// checks each label's consequence.  Case I is a ContractError.
CaseIIAnalysis case_ii_analysis(const PowerSequence& powers, Engine engine = Engine::Combinatorial,
                                const std::optional<PrimeFieldConfig>& cfg = std::nullopt);

}  // namespace lefschetz
