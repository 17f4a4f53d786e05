#include <algorithm>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "lefschetz/linsys.hpp"
#include "lefschetz/oracle.hpp"

using namespace lefschetz;

namespace {

Int measure(const LinearSystem& s) {
  Int m = s.degree;
  for (Int b : s.mults) m += b;
  return m;
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(normalize({3, {0, 2, -1, 1}}) == LinearSystem{3, {2, 1}});
  CHECK(normalize({4, {}}) == LinearSystem{4, {}});
  CHECK(normalize({6, {2, 1, 1, 3, 3, 3}}) == LinearSystem{6, {3, 3, 3, 2, 1, 1}});
}

TEST_CASE("is_standard") {
  CHECK(is_standard({7, {3, 2, 2, 1, 1}}));
  CHECK_FALSE(is_standard({8, {4, 3, 3, 3, 3, 3}}));
  CHECK(is_standard({2, {1}}));
  CHECK(is_standard({0, {}}));
}

TEST_CASE("cremona_step") {
  CHECK(cremona_step({5, {3, 2, 2}}) == LinearSystem{3, {1}});
  CHECK(cremona_step({8, {4, 3, 3, 3, 3, 3}}) == LinearSystem{6, {3, 3, 3, 2, 1, 1}});
  CHECK(cremona_step({6, {2, 2, 2}}) == LinearSystem{6, {2, 2, 2}});
  CHECK(cremona_shift({8, {4, 3, 3, 3, 3, 3}}) == -2);
  // b_3 + m = 1 - 5 < 0
  CHECK_THROWS_AS(cremona_step({2, {5, 3, 1}}), ContractError);
  CHECK_THROWS_AS(cremona_step({5, {3, 2}}), ContractError);
}

TEST_CASE("bezout_five_step") {
  CHECK(bezout_five_step({3, {2, 2, 2, 2, 2}}) == LinearSystem{1, {1, 1, 1, 1, 1}});
  CHECK(bezout_five_step({9, {5, 4, 4, 4, 4, 4}}) == LinearSystem{7, {4, 4, 3, 3, 3, 3}});
  CHECK(bezout_five_step({1, {1, 1, 1, 1, 1}}) == LinearSystem{-1, {}});
  CHECK_THROWS_AS(bezout_five_step({5, {2, 2, 2, 2, 2}}), ContractError);
}

TEST_CASE("bezout_two_step") {
  CHECK(bezout_two_step({2, {2, 2}}) == LinearSystem{1, {1, 1}});
  CHECK(bezout_two_step({7, {6, 3, 2, 2, 2, 2, 2}}) == LinearSystem{6, {5, 2, 2, 2, 2, 2, 2}});
  CHECK(bezout_two_step({3, {4}}) == LinearSystem{2, {3}});
  CHECK_THROWS_AS(bezout_two_step({4, {2, 2}}), ContractError);
}

TEST_CASE("dim_linear_system on the worked examples") {
  const DimResult a = dim_linear_system({5, {3, 2, 2}});
  REQUIRE(a.exact());
  CHECK(a.dim() == 9);
  REQUIRE(!a.trace.steps.empty());
  CHECK(a.trace.steps.front().kind == StepKind::Cremona);
  CHECK(a.trace.steps.front().shift == -2);
  CHECK(a.trace.terminal == LinearSystem{3, {1}});

  CHECK(dim_linear_system({3, {2, 2, 2, 2, 2}}).dim() == 0);

  const DimResult c = dim_linear_system({8, {4, 3, 3, 3, 3, 3}});
  CHECK(c.dim() == 5);
  CHECK(std::count_if(c.trace.steps.begin(), c.trace.steps.end(),
                      [](const ReductionStep& s) { return s.kind == StepKind::Cremona; }) == 3);
  CHECK(c.trace.terminal == LinearSystem{2, {1}});

  const DimResult d = dim_linear_system({6, {2, 1, 1, 1, 1, 1}});
  CHECK(d.dim() == 20);
  CHECK(d.trace.steps.size() == 1);
  CHECK(d.trace.steps.front().kind == StepKind::StandardStop);

  CHECK(dim_linear_system({-2, {1, 1}}).dim() == 0);
  CHECK(dim_linear_system({4, {}}).dim() == 15);
  CHECK(dim_linear_system({4, {0, -1}}).trace.steps.front().kind == StepKind::Normalize);
}

TEST_CASE("traces chain, terminate, and respect invariances") {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 500; ++i) {
    const LinearSystem sys = testing::random_system(gen, 25, 10, 12);
    const DimResult res = dim_linear_system(sys);
    REQUIRE(res.exact());
    const auto& steps = res.trace.steps;
    for (std::size_t s = 0; s + 1 < steps.size(); ++s) CHECK(steps[s].after == steps[s + 1].before);
    CHECK(steps.back().after == res.trace.terminal);
    for (const ReductionStep& s : steps) {
      if (s.kind == StepKind::Cremona) {
        CHECK(s.shift < 0);
        CHECK(measure(s.after) < measure(s.before));
      }
      if (s.kind == StepKind::BezoutTwo || s.kind == StepKind::BezoutFive) CHECK(measure(s.after) < measure(s.before));
    }
    CHECK(res.dim() >= expected_dimension(sys));

    LinearSystem shuffled = sys;
    std::shuffle(shuffled.mults.begin(), shuffled.mults.end(), gen);
    shuffled.mults.push_back(0);
    shuffled.mults.insert(shuffled.mults.begin(), 0);
    CHECK(dim_linear_system(shuffled).dim() == res.dim());
  }
}

TEST_CASE("reduction results agree with random points over Z/p") {
  // soundness over the documented desk-scale regime
  std::mt19937_64 gen(77);
  PrimeFieldConfig cfg;
  for (int i = 0; i < 200; ++i) {
    const LinearSystem sys = testing::random_system(gen, 15, 8, 6);
    const DimResult res = dim_linear_system(sys);
    REQUIRE(res.exact());
    INFO(sys);
    CHECK(res.dim() == oracle_linsys_dim(sys, cfg));
  }
}

TEST_CASE("one fat point of multiplicity above the degree is empty, and so is its reduction") {
  PrimeFieldConfig cfg;
  for (Int j = 0; j <= 8; ++j) {
    for (Int b = j + 1; b <= j + 4; ++b) {
      const LinearSystem sys{j, {b}};
      CHECK(oracle_linsys_dim(sys, cfg) == 0);
      CHECK(oracle_linsys_dim(bezout_two_step(sys), cfg) == 0);
      CHECK(dim_linear_system(sys).dim() == 0);
    }
  }
}
