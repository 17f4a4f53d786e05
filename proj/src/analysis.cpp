#include "lefschetz/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "lefschetz/inverse_systems.hpp"

namespace lefschetz {

std::string_view to_string(Engine e) { return e == Engine::Combinatorial ? "Combinatorial" : "Oracle"; }
std::string_view to_string(CaseKind k) { return k == CaseKind::I ? "I" : "II"; }

std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::AllMaximal: return "AllMaximal";
    case VerdictKind::FailuresAt: return "FailuresAt";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(DegreeLabel l) {
  switch (l) {
    case DegreeLabel::Isomorphic: return "Isomorphic";
    case DegreeLabel::SurjectiveFromB: return "SurjectiveFromB";
    case DegreeLabel::CriticalAboveQ: return "CriticalAboveQ";
    case DegreeLabel::CriticalAtQ: return "CriticalAtQ";
  }
  return "?";
}

std::string_view to_string(MapBehaviour b) {
  switch (b) {
    case MapBehaviour::Maximal: return "Maximal";
    case MapBehaviour::Surjective: return "Surjective";
    case MapBehaviour::Injective: return "Injective";
  }
  return "?";
}

bool RankRow::same_values(const RankRow& o) const noexcept {
  return degree == o.degree && dim_source == o.dim_source && dim_target == o.dim_target &&
         dim_quotient == o.dim_quotient && rank == o.rank && maximal == o.maximal && determined == o.determined;
}

CaseData compute_case_data(const PowerSequence& powers) {
  const Int r = static_cast<Int>(powers.size());
  if (r < 2) throw ContractError("compute_case_data: needs r >= 2");
  const auto a = powers.powers();
  const Int total = powers.sum();

  CaseData cd;
  cd.p = (total - r) / (r - 1);  // total >= r, so this is the floor
  cd.b = total - (r - 1) * (cd.p + 1);
  cd.s = std::count(a.begin(), a.end(), cd.p);
  cd.t = std::count(a.begin(), a.end(), cd.p + 1);

  Int prefix = a[0] + a[1];
  for (Int m = 2; m <= r - 1; ++m) {
    // a_{m+1} <= (a_1 + ... + a_m - m) / (m - 1), cross-multiplied
    if ((m - 1) * a[m] > prefix - m) {
      cd.kind = CaseKind::II;
      cd.split_index = m;
      cd.q = (prefix - m) / (m - 1);
      break;
    }
    prefix += a[m];
  }
  return cd;
}

Int predicted_critical_dim(const CaseData& cd, Int r) {
  if (cd.kind != CaseKind::I) throw ContractError("predicted_critical_dim: only valid in case I");
  return pos_part(2 * cd.b + 1 - r);
}

std::vector<Int> line_base_multiplicities(const PowerSequence& powers, Int p) {
  std::vector<Int> out;
  for (Int a : powers.powers()) out.push_back(pos_part(p - a + 1));
  return out;
}

namespace {

// Per-degree dimensions of A and A/L^k A from one engine, cached by degree.
class DimensionTable {
 public:
  DimensionTable(PowerSequence powers, std::vector<Int> shifts, Engine engine, std::optional<PrimeFieldConfig> cfg)
      : powers_(std::move(powers)), shifts_(std::move(shifts)), engine_(engine), cfg_(std::move(cfg)) {
    if (engine_ == Engine::Oracle && !cfg_) throw ContractError("Oracle engine requires a PrimeFieldConfig");
  }

  std::optional<Int> dim_a(Int j) {
    if (j < 0) return 0;
    return entry(j).dim_a;
  }

  RankRow row(Int j, Int k) {
    const std::size_t s = shift_slot(k);
    RankRow row;
    row.degree = j;
    row.engine = engine_;
    const auto src = dim_a(j - k);
    const auto tgt = dim_a(j);
    const Entry& e = entry(j);
    if (!src || !tgt || !e.rank[s]) {
      row.determined = false;
      row.maximal = false;
      return row;
    }
    row.dim_source = *src;
    row.dim_target = *tgt;
    row.rank = *e.rank[s];
    row.dim_quotient = row.dim_target - row.rank;
    row.maximal = row.rank == std::min(row.dim_source, row.dim_target);
    return row;
  }

  /// Last degree with nonzero (or undetermined) dim A; the scan ends at
  /// the first determined zero, after which an artinian quotient stays zero.
  Int socle_degree() {
    const Int cap = powers_.sum() + 1;
    Int last = -1;
    for (Int j = 0; j <= cap; ++j) {
      const auto d = dim_a(j);
      if (d && *d == 0) return last;
      last = j;
    }
    throw std::logic_error("socle scan exceeded sum of powers; internal inconsistency");
  }

 private:
  struct Entry {
    std::optional<Int> dim_a;
    std::vector<std::optional<Int>> rank;  // per shift slot
  };

  std::size_t shift_slot(Int k) const {
    auto it = std::find(shifts_.begin(), shifts_.end(), k);
    if (it == shifts_.end()) throw ContractError("DimensionTable: shift not registered");
    return static_cast<std::size_t>(it - shifts_.begin());
  }

  const Entry& entry(Int j) {
    auto it = cache_.find(j);
    if (it != cache_.end()) return it->second;
    Entry e;
    if (engine_ == Engine::Combinatorial) {
      const DimResult base = quotient_dim({powers_, j, std::nullopt});
      e.dim_a = base.value;
      for (Int k : shifts_) {
        const DimResult q = quotient_dim({powers_, j, k});
        if (base.value && q.value)
          e.rank.push_back(*base.value - *q.value);
        else
          e.rank.push_back(std::nullopt);
      }
    } else {
      const OracleDegreeDims od = oracle_degree_dims(powers_, j, shifts_, *cfg_);
      e.dim_a = od.dim_a;
      for (Int r : od.map_rank) e.rank.push_back(r);
    }
    return cache_.emplace(j, std::move(e)).first->second;
  }

  PowerSequence powers_;
  std::vector<Int> shifts_;
  Engine engine_;
  std::optional<PrimeFieldConfig> cfg_;
  std::map<Int, Entry> cache_;
};

std::optional<Int> comb_quotient(const PowerSequence& powers, Int j, std::optional<Int> shift = std::nullopt) {
  if (j < 0) return 0;
  return quotient_dim({powers, j, shift}).value;
}

}  // namespace

Verdict aggregate_verdict(std::span<const RankRow> rows) {
  Verdict v;
  bool undetermined = false;
  for (const RankRow& row : rows) {
    if (!row.determined)
      undetermined = true;
    else if (!row.maximal)
      v.failures.push_back(row.degree);
  }
  if (undetermined)
    v.kind = VerdictKind::Inconclusive;
  else if (!v.failures.empty())
    v.kind = VerdictKind::FailuresAt;
  return v;
}

std::vector<RankReport> rank_profiles(const PowerSequence& powers, std::span<const Int> shifts, Engine engine,
                                      const std::optional<PrimeFieldConfig>& cfg) {
  if (powers.size() < 3) throw ContractError("rank_profile: needs r >= 3");
  for (Int k : shifts)
    if (k < 1) throw ContractError("rank_profile: shift must be >= 1");

  DimensionTable table(powers, {shifts.begin(), shifts.end()}, engine, cfg);
  const Int socle = table.socle_degree();
  std::vector<RankReport> out;
  for (Int k : shifts) {
    RankReport report{powers, k, {}, {}};
    for (Int j = k; j <= socle + 1; ++j) report.rows.push_back(table.row(j, k));
    report.verdict = aggregate_verdict(report.rows);
    out.push_back(std::move(report));
  }
  return out;
}

RankReport rank_profile(const PowerSequence& powers, Int k, Engine engine, const std::optional<PrimeFieldConfig>& cfg) {
  return std::move(rank_profiles(powers, std::span<const Int>(&k, 1), engine, cfg).front());
}

RankReport verify_theorem(const PowerSequence& powers, const std::optional<PrimeFieldConfig>& cfg) {
  RankReport report = rank_profile(powers, 2, Engine::Combinatorial);
  if (report.verdict.kind != VerdictKind::Inconclusive || !cfg) return report;
  DimensionTable oracle(powers, {2}, Engine::Oracle, cfg);
  for (RankRow& row : report.rows)
    if (!row.determined) row = oracle.row(row.degree, 2);
  report.verdict = aggregate_verdict(report.rows);
  return report;
}

bool ProofLedger::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const LedgerCheck& c) { return !c.applicable || c.passed; });
}

namespace {

// Largest sum of squares over nondecreasing sequences of length `len` with
// entries in [lo, hi] summing to `target`; -1 if none.
Int max_sum_squares(Int len, Int lo, Int hi, Int target) {
  if (len == 0) return target == 0 ? 0 : -1;
  Int best = -1;
  for (Int v = lo; v <= hi; ++v) {
    if (v * len > target) break;
    if (target - v > (len - 1) * hi) continue;
    const Int rest = max_sum_squares(len - 1, v, hi, target - v);
    if (rest >= 0) best = std::max(best, v * v + rest);
  }
  return best;
}

std::string describe(std::initializer_list<std::pair<const char*, Int>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : ", ") << k << '=' << v;
    first = false;
  }
  return os.str();
}

}  // namespace

ProofLedger case_i_proof_ledger(const PowerSequence& powers) {
  const CaseData cd = compute_case_data(powers);
  if (cd.kind != CaseKind::I) throw ContractError("case_i_proof_ledger: sequence is in case II");

  ProofLedger L;
  L.case_data = cd;
  L.r = static_cast<Int>(powers.size());
  const Int r = L.r, p = cd.p, b = cd.b;
  const auto a = powers.powers();
  for (Int x : a) L.sum_squares = checked_add(L.sum_squares, checked_mul(x, x));
  L.predicted = pos_part(2 * b + 1 - r);

  const Int bound1 = (r - 1) * (p + 1) * (p + 1) + b * (2 * p + 1);
  const Int bound2 = (r - 1) * (p + 1) * (p + 1) + b * b;
  const bool bounded = std::all_of(a.begin(), a.end(), [p](Int x) { return x <= p + 1; });

  L.checks.push_back({"powers_at_most_p_plus_1", true, bounded, describe({{"max", powers.max()}, {"p+1", p + 1}})});
  L.checks.push_back({"sum_squares_bound", true, L.sum_squares <= bound1,
                      describe({{"sum_sq", L.sum_squares}, {"bound", bound1}})});
  L.checks.push_back({"extremal_sequence_bound", true, L.sum_squares <= bound2,
                      describe({{"sum_sq", L.sum_squares}, {"bound", bound2}})});

  {
    LedgerCheck c{"extremal_sequence_exhaustive", r <= 6 && p + 1 <= 12, true, {}};
    if (c.applicable) {
      const Int best = max_sum_squares(r, 1, p + 1, powers.sum());
      c.passed = best <= bound2;
      c.detail = describe({{"max_sum_sq", best}, {"bound", bound2}});
    }
    L.checks.push_back(std::move(c));
  }

  // both sides of the critical-degree equality, computed independently
  const auto lhs = comb_quotient(powers, p + 1, 2);
  const auto hi = comb_quotient(powers, p + 1);
  const auto lo = comb_quotient(powers, p - 1);
  const bool determined = lhs && hi && lo;
  if (determined) {
    L.critical_lhs = *lhs;
    L.critical_rhs = pos_part(*hi - *lo);
  }
  L.checks.push_back({"critical_equality", true, determined && L.critical_lhs == L.critical_rhs,
                      determined ? describe({{"lhs", L.critical_lhs}, {"rhs", L.critical_rhs}}) : "undetermined"});
  // p = 0 puts degree p-1 below zero; the closed form is only claimed for p >= 1
  L.checks.push_back({"critical_formula", p >= 1, determined && L.critical_lhs == L.predicted,
                      describe({{"lhs", L.critical_lhs}, {"predicted", L.predicted}})});

  if (r >= 3) {
    L.endgame_offset = a[0] + a[1] + a[2] - (2 * p + 5);
    const Int off = L.endgame_offset;
    L.checks.push_back({"endgame_offset_at_least_minus_2", r >= 5, off >= -2, describe({{"offset", off}})});

    LedgerCheck c{"endgame_value", off >= -2, true, {}};
    const bool sides_zero = determined && L.critical_lhs == 0 && L.critical_rhs == 0;
    auto tail_is = [&](std::size_t from, Int v) {
      return std::all_of(a.begin() + static_cast<std::ptrdiff_t>(std::min(from, a.size())), a.end(),
                         [v](Int x) { return x == v; });
    };
    if (off >= 0) {
      c.passed = determined && L.critical_rhs == L.predicted;
      c.detail = "standard branch: [2b+1-r]_+ = " + std::to_string(L.predicted);
    } else if (off == -1 && r >= 5) {
      const Int e = 2 * p - a[3] - a[4];
      if (e == -1) {
        c.passed = a[3] == p && tail_is(4, p + 1) && b == 1 && pos_part(3 - r) == 0 && sides_zero;
        c.detail = "offset -1, 2p-a4-a5=-1: b=1, [3-r]_+ = 0";
      } else {
        c.passed = e == -2 && tail_is(3, p + 1) && b == 2 && pos_part(5 - r) == 0 && sides_zero;
        c.detail = "offset -1, 2p-a4-a5=" + std::to_string(e) + ": b=2, [5-r]_+ = 0";
      }
    } else if (off == -2) {
      c.passed = tail_is(3, p + 1) && b == 1 && pos_part(3 - r) == 0 && sides_zero;
      c.detail = "offset -2: b=1, [3-r]_+ = 0";
    } else {
      c.applicable = false;
      c.detail = off == -1 ? "offset -1 with r < 5" : "offset below -2";
    }
    L.checks.push_back(std::move(c));
  }
  return L;
}

CaseIIAnalysis case_ii_analysis(const PowerSequence& powers, Engine engine,
                                const std::optional<PrimeFieldConfig>& cfg) {
  const CaseData cd = compute_case_data(powers);
  if (cd.kind != CaseKind::II) throw ContractError("case_ii_analysis: sequence is in case I");
  const auto m = static_cast<std::size_t>(cd.split_index);
  const Int q = cd.q;

  CaseIIAnalysis out{cd, powers[m], {}, {}, rank_profile(powers, 2, engine, cfg), false};

  DimensionTable b_table(powers.prefix(m), {2}, engine, cfg);
  DimensionTable a_table(powers.prefix(m + 1), {2}, engine, cfg);
  const Int socle = a_table.socle_degree();

  bool ok = true;
  for (Int j = 2; j <= socle + 1; ++j) {
    CaseIIRow row;
    row.degree = j;
    row.b_row = b_table.row(j, 2);
    row.a_row = a_table.row(j, 2);
    const RankRow& B = row.b_row;
    const RankRow& A = row.a_row;
    if (j < out.pivot_power) {
      row.label = DegreeLabel::Isomorphic;
      row.expected = MapBehaviour::Maximal;
      row.holds = A.determined && B.determined && A.dim_source == B.dim_source && A.dim_target == B.dim_target &&
                  A.maximal;
    } else if (j > out.pivot_power) {
      row.label = DegreeLabel::SurjectiveFromB;
      row.expected = MapBehaviour::Surjective;
      row.holds = j >= q + 2 && B.surjective() && A.surjective();
    } else if (out.pivot_power >= q + 2) {
      row.label = DegreeLabel::CriticalAboveQ;
      row.expected = MapBehaviour::Surjective;
      row.holds = B.surjective() && A.surjective();
    } else {
      row.label = DegreeLabel::CriticalAtQ;
      if (B.surjective()) {
        row.expected = MapBehaviour::Surjective;
        row.holds = A.surjective();
      } else {
        row.expected = MapBehaviour::Injective;
        row.holds = B.injective() && A.injective();
      }
    }
    ok = ok && row.holds;
    out.rows.push_back(std::move(row));
  }

  for (std::size_t t = m + 1; t <= powers.size(); ++t) {
    TailCheck tc;
    tc.prefix_length = t;
    std::optional<Int> d;
    if (engine == Engine::Combinatorial)
      d = comb_quotient(powers.prefix(t), q + 1, 1);
    else
      d = oracle_quotient_dim(powers.prefix(t), q + 1, 1, *cfg);
    tc.dim_at_q_plus_1 = d.value_or(-1);
    tc.holds = d && *d == 0;
    ok = ok && tc.holds;
    out.tail.push_back(tc);
  }

  out.consistent = ok && out.full.verdict.kind == VerdictKind::AllMaximal;
  return out;
}

}  // namespace lefschetz
