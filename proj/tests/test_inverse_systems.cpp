#include <algorithm>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "lefschetz/inverse_systems.hpp"
#include "lefschetz/oracle.hpp"

using namespace lefschetz;

namespace {

bool no_strict_local_minimum(const std::vector<Int>& h) {
  for (std::size_t i = 1; i + 1 < h.size(); ++i)
    if (h[i] < h[i - 1] && h[i] < h[i + 1]) return false;
  return true;
}

}  // namespace

TEST_CASE("apply_duality") {
  CHECK(apply_duality({2, 2, 2, 2}, 2) == LinearSystem{2, {1, 1, 1, 1}});
  CHECK(apply_duality({5, 6, 6, 6, 6, 6}, 6) == LinearSystem{6, {2, 1, 1, 1, 1, 1}});
  CHECK(apply_duality({3}, 3) == LinearSystem{3, {1}});
  CHECK_THROWS_AS(apply_duality({2, 4}, 3), ContractError);
}

TEST_CASE("quotient_dim") {
  const PowerSequence s{5, 6, 6, 6, 6, 6};
  CHECK(quotient_dim({s, 4, std::nullopt}).dim() == 15);
  CHECK(quotient_dim({s, 6, std::nullopt}).dim() == 20);
  CHECK(quotient_dim({s, 6, 2}).dim() == 5);
  CHECK(quotient_dim({{2, 2, 2, 2}, 2, std::nullopt}).dim() == 2);
  // L^k with k > j imposes nothing
  CHECK(quotient_dim({s, 1, 2}).dim() == 3);
  CHECK_THROWS_AS(quotient_dim({s, -1, std::nullopt}), ContractError);
  CHECK_THROWS_AS(quotient_dim({s, 3, 0}), ContractError);
}

TEST_CASE("hilbert_function") {
  CHECK(hilbert_function({3, 3, 3}) == std::vector<Int>{1, 3, 6, 7, 6, 3, 1});
  CHECK(hilbert_function({5, 6, 6, 6, 6, 6}) == std::vector<Int>{1, 3, 6, 10, 15, 20, 20, 15, 5});
  CHECK(hilbert_function({1, 1, 1}) == std::vector<Int>{1});
  CHECK(hilbert_function({2, 2, 2, 2, 3}) == std::vector<Int>{1, 3, 2});
  CHECK(hilbert_function({4, 4, 4, 4, 5}) == std::vector<Int>{1, 3, 6, 10, 11, 8, 2});
  CHECK_THROWS_AS(hilbert_function({2}), NonArtinianError);
  CHECK_THROWS_AS(hilbert_function({2, 3}), NonArtinianError);

  bool called = false;
  hilbert_function({3, 3, 3}, [&](Int) {
    called = true;
    return Int{0};
  });
  CHECK_FALSE(called);
}

TEST_CASE("ci_hilbert_function") {
  CHECK(ci_hilbert_function({3, 3, 3}) == std::vector<Int>{1, 3, 6, 7, 6, 3, 1});
  CHECK(ci_hilbert_function({2, 2, 2}) == std::vector<Int>{1, 3, 3, 1});
  CHECK(ci_hilbert_function({1, 2, 3}) == std::vector<Int>{1, 2, 2, 1});
  // (1 + t)^2 / (1 - t) and 1 / (1 - t)^2, truncated
  CHECK(ci_hilbert_function({2, 2}, 5) == std::vector<Int>{1, 3, 4, 4, 4});
  CHECK(ci_hilbert_function({4}, 5) == std::vector<Int>{1, 3, 6, 10, 14});
  CHECK_THROWS_AS(ci_hilbert_function({1, 1, 1, 1}), ContractError);
}

TEST_CASE("three forms: reductions agree with the complete-intersection series") {
  for (Int a = 1; a <= 8; ++a)
    for (Int b = a; b <= 8; ++b)
      for (Int c = b; c <= 8; ++c) {
        const PowerSequence s{a, b, c};
        CHECK(hilbert_function(s) == ci_hilbert_function(s));
      }
  // fewer than three forms: compare degree by degree against the truncated series
  for (Int a = 1; a <= 6; ++a)
    for (Int b = a; b <= 6; ++b) {
      const PowerSequence s{a, b};
      const auto series = ci_hilbert_function(s, 15);
      for (Int j = 0; j < 15; ++j) CHECK(quotient_dim({s, j, std::nullopt}).dim() == series[j]);
    }
}

TEST_CASE("Hilbert functions are unimodal and order independent") {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 300; ++i) {
    const PowerSequence s = testing::random_powers(gen, 3, 10, 1, 12);
    const auto h = hilbert_function(s);
    CHECK(no_strict_local_minimum(h));
    std::vector<Int> rev(s.values().rbegin(), s.values().rend());
    CHECK(hilbert_function(PowerSequence(rev)) == h);
  }
}

TEST_CASE("generators above the degree can be dropped") {
  std::mt19937_64 gen(6);
  for (int i = 0; i < 200; ++i) {
    const PowerSequence s = testing::random_powers(gen, 1, 8, 1, 10);
    const Int j = testing::uniform(gen, 0, 14);
    std::vector<Int> kept;
    for (Int a : s.powers())
      if (a <= j) kept.push_back(a);
    const Int full = quotient_dim({s, j, std::nullopt}).dim();
    if (kept.empty())
      CHECK(full == binom_safe(j + 2, 2));
    else
      CHECK(full == quotient_dim({PowerSequence(kept), j, std::nullopt}).dim());
  }
}

TEST_CASE("duality matches the Macaulay-matrix oracle") {
  std::mt19937_64 gen(7);
  PrimeFieldConfig cfg;
  for (int i = 0; i < 60; ++i) {
    const PowerSequence s = testing::random_powers(gen, 5, 10, 1, 12);
    const Int j = testing::uniform(gen, s.max(), s.max() + 4);
    INFO(s << " j=" << j);
    CHECK(quotient_dim({s, j, std::nullopt}).dim() == oracle_quotient_dim(s, j, std::nullopt, cfg));
    CHECK(quotient_dim({s, j, 2}).dim() == oracle_quotient_dim(s, j, 2, cfg));
  }
}
