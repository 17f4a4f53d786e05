#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "lefschetz/analysis.hpp"
#include "lefschetz/inverse_systems.hpp"

using namespace lefschetz;

namespace {

struct Expected {
  Int degree, source, target, quotient, rank;
};

void check_rows(const RankReport& rep, const std::vector<Expected>& want) {
  REQUIRE(rep.rows.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    const RankRow& row = rep.rows[i];
    INFO("degree " << want[i].degree);
    CHECK(row.degree == want[i].degree);
    CHECK(row.dim_source == want[i].source);
    CHECK(row.dim_target == want[i].target);
    CHECK(row.dim_quotient == want[i].quotient);
    CHECK(row.rank == want[i].rank);
    CHECK(row.maximal);
    CHECK(row.determined);
  }
}

const LedgerCheck& find_check(const ProofLedger& l, const std::string& name) {
  for (const auto& c : l.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return l.checks.front();
}

}  // namespace

TEST_CASE("case data examples") {
  const CaseData a = compute_case_data({5, 6, 6, 6, 6, 6});
  CHECK(a.kind == CaseKind::I);
  CHECK(a.p == 5);
  CHECK(a.b == 5);
  CHECK(a.s == 1);
  CHECK(a.t == 5);
  CHECK(predicted_critical_dim(a, 6) == 5);

  const CaseData c = compute_case_data({3, 3, 3});
  CHECK(c.kind == CaseKind::I);
  CHECK(c.p == 3);
  CHECK(c.b == 1);
  CHECK(predicted_critical_dim(c, 3) == 0);

  const CaseData d = compute_case_data({2, 2, 2, 2, 3});
  CHECK(d.kind == CaseKind::II);
  CHECK(d.split_index == 3);
  CHECK(d.q == 1);

  const CaseData e = compute_case_data({4, 4, 4, 4, 5});
  CHECK(e.kind == CaseKind::II);
  CHECK(e.split_index == 4);
  CHECK(e.q == 4);

  // the averaged bound already fails at m = 2
  const CaseData f = compute_case_data({1, 1, 1, 1, 1});
  CHECK(f.kind == CaseKind::II);
  CHECK(f.split_index == 2);
  CHECK(f.q == 0);

  CHECK_THROWS_AS(compute_case_data({4}), ContractError);
  CHECK_THROWS_AS(predicted_critical_dim(d, 5), ContractError);
}

TEST_CASE("case data invariants") {
  std::mt19937_64 gen(21);
  for (int i = 0; i < 1000; ++i) {
    const PowerSequence s = testing::random_powers(gen, 2, 12, 1, 15);
    const CaseData cd = compute_case_data(s);
    const Int r = static_cast<Int>(s.size());
    CHECK(s.sum() == (r - 1) * (cd.p + 1) + cd.b);
    CHECK(cd.b >= 1);
    CHECK(cd.b <= r - 1);
    if (cd.kind == CaseKind::II) {
      CHECK(cd.split_index >= 2);
      CHECK(cd.split_index <= r - 1);
      const Int m = cd.split_index;
      CHECK((m - 1) * s[static_cast<std::size_t>(m)] > s.prefix(static_cast<std::size_t>(m)).sum() - m);
    }
  }
}

TEST_CASE("line base multiplicities") {
  CHECK(line_base_multiplicities({5, 6, 6, 6, 6, 6}, 5) == std::vector<Int>{1, 0, 0, 0, 0, 0});
  CHECK(line_base_multiplicities({2, 2}, 3) == std::vector<Int>{2, 2});
  CHECK(line_base_multiplicities({9}, 5) == std::vector<Int>{0});
}

TEST_CASE("rank profile fixtures on both engines") {
  const PrimeFieldConfig cfg;
  const std::vector<Expected> six{{2, 1, 6, 5, 1},     {3, 3, 10, 7, 3},   {4, 6, 15, 9, 6},
                                  {5, 10, 20, 10, 10}, {6, 15, 20, 5, 15}, {7, 20, 15, 0, 15},
                                  {8, 20, 5, 0, 5},    {9, 15, 0, 0, 0}};
  check_rows(rank_profile({5, 6, 6, 6, 6, 6}, 2, Engine::Combinatorial), six);
  check_rows(rank_profile({5, 6, 6, 6, 6, 6}, 2, Engine::Oracle, cfg), six);

  const std::vector<Expected> four{{2, 1, 6, 5, 1}, {3, 3, 6, 3, 3}, {4, 6, 3, 0, 3}, {5, 6, 0, 0, 0}};
  check_rows(rank_profile({3, 3, 3, 3}, 2, Engine::Combinatorial), four);
  check_rows(rank_profile({3, 3, 3, 3}, 2, Engine::Oracle, cfg), four);

  const std::vector<Expected> five{{2, 1, 6, 5, 1},  {3, 3, 10, 7, 3}, {4, 6, 11, 5, 6},
                                   {5, 10, 8, 0, 8}, {6, 11, 2, 0, 2}, {7, 8, 0, 0, 0}};
  check_rows(rank_profile({4, 4, 4, 4, 5}, 2, Engine::Combinatorial), five);
  check_rows(rank_profile({4, 4, 4, 4, 5}, 2, Engine::Oracle, cfg), five);

  const RankReport ci = rank_profile({3, 3, 3}, 2, Engine::Combinatorial);
  REQUIRE(ci.rows.size() >= 2);
  CHECK(ci.rows[1].degree == 3);
  CHECK(ci.rows[1].dim_source == 3);
  CHECK(ci.rows[1].dim_target == 7);
  CHECK(ci.rows[1].dim_quotient == 4);
  CHECK(ci.rows[1].rank == 3);
  CHECK(ci.verdict.kind == VerdictKind::AllMaximal);

  const RankReport two = rank_profile({2, 2, 2, 2, 2}, 2, Engine::Combinatorial);
  REQUIRE_FALSE(two.rows.empty());
  CHECK(two.rows[0].rank == 1);

  CHECK_THROWS_AS(rank_profile({3, 3, 3}, 2, Engine::Oracle), ContractError);
  CHECK_THROWS_AS(rank_profile({3, 3}, 2, Engine::Combinatorial), ContractError);
  CHECK_THROWS_AS(rank_profile({3, 3, 3}, 0, Engine::Combinatorial), ContractError);
}

TEST_CASE("aggregate verdict") {
  RankRow ok{3, 1, 2, 1, 1, true, true, Engine::Combinatorial};
  RankRow bad = ok;
  bad.degree = 4;
  bad.maximal = false;
  RankRow unknown = ok;
  unknown.degree = 5;
  unknown.determined = false;
  unknown.maximal = false;
  CHECK(aggregate_verdict(std::vector<RankRow>{ok}).kind == VerdictKind::AllMaximal);
  const Verdict f = aggregate_verdict(std::vector<RankRow>{ok, bad});
  CHECK(f.kind == VerdictKind::FailuresAt);
  CHECK(f.failures == std::vector<Int>{4});
  CHECK(aggregate_verdict(std::vector<RankRow>{ok, bad, unknown}).kind == VerdictKind::Inconclusive);
}

TEST_CASE("rank rows are internally consistent") {
  std::mt19937_64 gen(22);
  for (int i = 0; i < 150; ++i) {
    const PowerSequence s = testing::random_powers(gen, 3, 9, 1, 10);
    for (Int k : {Int{1}, Int{2}, Int{3}}) {
      const RankReport rep = rank_profile(s, k, Engine::Combinatorial);
      for (const RankRow& row : rep.rows) {
        REQUIRE(row.determined);
        CHECK(row.rank == row.dim_target - row.dim_quotient);
        CHECK(row.rank <= std::min(row.dim_source, row.dim_target));
        CHECK(row.maximal == (row.rank == std::min(row.dim_source, row.dim_target)));
        CHECK(row.dim_target == quotient_dim({s, row.degree, std::nullopt}).dim());
        CHECK(row.dim_source == quotient_dim({s, row.degree - k, std::nullopt}).dim());
      }
      if (!rep.rows.empty()) CHECK(rep.rows.back().dim_target == 0);
    }
  }
}

TEST_CASE("multiplication by L and L^2 has maximal rank on random sequences") {
  std::mt19937_64 gen(23);
  for (int i = 0; i < 300; ++i) {
    const PowerSequence s = testing::random_powers(gen, 3, 10, 1, 12);
    INFO(s);
    CHECK(rank_profile(s, 1, Engine::Combinatorial).verdict.kind == VerdictKind::AllMaximal);
    CHECK(verify_theorem(s).verdict.kind == VerdictKind::AllMaximal);
  }
}

TEST_CASE("engines agree on random sequences") {
  std::mt19937_64 gen(24);
  const PrimeFieldConfig cfg;
  const Int shifts[] = {1, 2};
  for (int i = 0; i < 20; ++i) {
    const PowerSequence s = testing::random_powers(gen, 3, 7, 1, 8);
    INFO(s);
    const auto comb = rank_profiles(s, shifts, Engine::Combinatorial);
    const auto orac = rank_profiles(s, shifts, Engine::Oracle, cfg);
    REQUIRE(comb.size() == 2);
    REQUIRE(orac.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
      REQUIRE(comb[k].rows.size() == orac[k].rows.size());
      for (std::size_t r = 0; r < comb[k].rows.size(); ++r) CHECK(comb[k].rows[r].same_values(orac[k].rows[r]));
      if (!orac[k].rows.empty()) CHECK(orac[k].rows.front().engine == Engine::Oracle);
    }
  }
}

TEST_CASE("case I ledger on the running example") {
  const ProofLedger l = case_i_proof_ledger({5, 6, 6, 6, 6, 6});
  CHECK(l.r == 6);
  CHECK(l.critical_lhs == 5);
  CHECK(l.critical_rhs == 5);
  CHECK(l.predicted == 5);
  CHECK(l.sum_squares == 25 + 5 * 36);
  CHECK(l.endgame_offset == 5 + 6 + 6 - 15);
  CHECK(l.all_passed());
  CHECK(find_check(l, "endgame_value").applicable);

  CHECK_THROWS_AS(case_i_proof_ledger({2, 2, 2, 2, 3}), ContractError);

  const ProofLedger minus_two = case_i_proof_ledger({3, 3, 3});
  CHECK(minus_two.endgame_offset == -2);
  CHECK(find_check(minus_two, "endgame_value").applicable);
  CHECK(minus_two.all_passed());

  const ProofLedger minus_one = case_i_proof_ledger({4, 4, 4, 4});
  CHECK(minus_one.endgame_offset == -1);
  CHECK_FALSE(find_check(minus_one, "endgame_value").applicable);
  CHECK_FALSE(find_check(minus_one, "endgame_offset_at_least_minus_2").applicable);
  CHECK(minus_one.all_passed());

  const ProofLedger small = case_i_proof_ledger({1, 1});
  CHECK(small.case_data.p == 0);
  CHECK_FALSE(find_check(small, "critical_formula").applicable);
  CHECK(small.all_passed());
}

TEST_CASE("case I ledger passes on constructed sequences") {
  std::mt19937_64 gen(25);
  for (int i = 0; i < 200; ++i) {
    const PowerSequence s = testing::random_case_i(gen, 3, 10, 14);
    INFO(s);
    const ProofLedger l = case_i_proof_ledger(s);
    for (const auto& c : l.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK((!c.applicable || c.passed));
    }
    CHECK(l.critical_lhs == predicted_critical_dim(l.case_data, l.r));
  }
}

TEST_CASE("case II analysis") {
  const PrimeFieldConfig cfg;
  for (const PowerSequence& s : {PowerSequence{2, 2, 2, 2, 3}, PowerSequence{4, 4, 4, 4, 5},
                                 PowerSequence{1, 1, 1, 1, 1}, PowerSequence{2, 2, 3, 5, 7, 9}}) {
    INFO(s);
    const CaseIIAnalysis a = case_ii_analysis(s);
    CHECK(a.consistent);
    CHECK(a.pivot_power == s[static_cast<std::size_t>(a.case_data.split_index)]);
    CHECK(a.tail.size() == s.size() - static_cast<std::size_t>(a.case_data.split_index));
    for (const auto& row : a.rows) CHECK(row.holds);
    for (const auto& t : a.tail) CHECK(t.dim_at_q_plus_1 == 0);
    CHECK(case_ii_analysis(s, Engine::Oracle, cfg).consistent);
  }

  const CaseIIAnalysis five = case_ii_analysis({4, 4, 4, 4, 5});
  REQUIRE(!five.rows.empty());
  CHECK(five.rows.front().label == DegreeLabel::Isomorphic);
  for (const auto& row : five.rows)
    if (row.degree == 5) {
      CHECK(row.label == DegreeLabel::CriticalAtQ);
      // B = R/(l_1^4, ..., l_4^4) maps dimension 10 onto dimension 9 at degree 5
      CHECK(row.expected == MapBehaviour::Surjective);
    }

  CHECK_THROWS_AS(case_ii_analysis({5, 6, 6, 6, 6, 6}), ContractError);
}

TEST_CASE("case II analysis holds on random case II sequences") {
  std::mt19937_64 gen(26);
  int seen = 0;
  while (seen < 100) {
    const PowerSequence s = testing::random_powers(gen, 3, 9, 1, 12);
    if (compute_case_data(s).kind != CaseKind::II) continue;
    ++seen;
    INFO(s);
    CHECK(case_ii_analysis(s).consistent);
  }
}
