#include "lefschetz/inverse_systems.hpp"

#include <string>

namespace lefschetz {

LinearSystem apply_duality(const PowerSequence& powers, Int j) {
  if (j < powers.max()) throw ContractError("apply_duality: degree below the largest power");
  LinearSystem sys{j, {}};
  sys.mults.reserve(powers.size());
  for (Int a : powers.powers()) sys.mults.push_back(j - a + 1);
  return normalize(std::move(sys));
}

DimResult quotient_dim(const QuotientQuery& q) {
  if (q.degree < 0) throw ContractError("quotient_dim: negative degree");
  if (q.square_shift && *q.square_shift < 1) throw ContractError("quotient_dim: shift must be >= 1");
  const Int j = q.degree;

  LinearSystem sys{j, {}};
  for (Int a : q.powers.powers())
    if (a <= j) sys.mults.push_back(j - a + 1);
  // L^k with k > j imposes nothing in degree j
  if (q.square_shift && *q.square_shift <= j) sys.mults.push_back(j - *q.square_shift + 1);

  if (sys.mults.empty()) {
    DimResult out;
    out.value = binom_safe(j + 2, 2);
    out.trace.terminal = sys;
    out.trace.steps.push_back({StepKind::EmptyStop, 0, sys, sys});
    return out;
  }
  return dim_linear_system(normalize(std::move(sys)));
}

std::vector<Int> hilbert_function(const PowerSequence& powers, const DegreeFallback& fallback) {
  if (powers.size() < 3) throw NonArtinianError("non-artinian: Hilbert function does not terminate");
  const Int cap = powers.sum();
  std::vector<Int> hf;
  for (Int j = 0; j <= cap; ++j) {
    const DimResult r = quotient_dim({powers, j, std::nullopt});
    Int d = 0;
    if (r.exact()) {
      d = *r.value;
    } else if (fallback) {
      d = fallback(j);
    } else {
      throw UndeterminedError(j, "hilbert_function: degree " + std::to_string(j) + " is undetermined");
    }
    if (d == 0) return hf;
    hf.push_back(d);
  }
  throw std::logic_error("hilbert_function: no zero up to degree sum(a_i); internal inconsistency");
}

std::vector<Int> ci_hilbert_function(const PowerSequence& powers, std::size_t length) {
  if (powers.size() > 3) throw ContractError("ci_hilbert_function: at most three forms");
  std::vector<Int> poly{1};
  for (Int a : powers.powers()) {
    std::vector<Int> next(poly.size() + static_cast<std::size_t>(a) - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (Int e = 0; e < a; ++e) next[i + static_cast<std::size_t>(e)] += poly[i];
    poly = std::move(next);
  }
  if (powers.size() == 3) return poly;

  poly.resize(std::max(length, poly.size()), 0);
  // each free variable contributes 1/(1-t): prefix sums
  for (std::size_t v = powers.size(); v < 3; ++v)
    for (std::size_t i = 1; i < poly.size(); ++i) poly[i] += poly[i - 1];
  poly.resize(length);
  return poly;
}

}  // namespace lefschetz
