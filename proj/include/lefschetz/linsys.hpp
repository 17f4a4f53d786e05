// Exact dimensions of plane fat-point linear systems with general base
// points, by iterated Cremona and Bezout reductions down to a standard
// system (which is non-special).
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lefschetz/combinatorics.hpp"

namespace lefschetz {

enum class StepKind {
  Normalize,
  Cremona,
  BezoutFive,
  BezoutTwo,
  StandardStop,
  EmptyStop,
  NegativeDegreeStop,
};

std::string_view to_string(StepKind kind);

struct ReductionStep {
  StepKind kind = StepKind::Normalize;
  Int shift = 0;  // Cremona only: m = j - (b_1 + b_2 + b_3)
  LinearSystem before;
  LinearSystem after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  LinearSystem terminal;
};

/// An exact dimension with its certificate, or an honest "undetermined".
struct DimResult {
  std::optional<Int> value;
  ReductionTrace trace;

  bool exact() const noexcept { return value.has_value(); }
  /// Throws ContractError when undetermined.
  Int dim() const;
};

/// Sort multiplicities nonincreasing and drop entries <= 0.
LinearSystem normalize(LinearSystem sys);

/// j >= b_1 + b_2 + b_3, missing multiplicities counting as zero.
bool is_standard(const LinearSystem& sys);

/// Shift m = j - (b_1 + b_2 + b_3) of the quadratic transformation; needs at
/// least three points.
Int cremona_shift(const LinearSystem& sys);

bool cremona_applicable(const LinearSystem& sys);
bool bezout_five_applicable(const LinearSystem& sys);
bool bezout_two_applicable(const LinearSystem& sys);

/// L(j; b) -> L(j+m; b_1+m, b_2+m, b_3+m, b_4, ...).  Requires b_i + m >= 0
/// for the three largest multiplicities.
LinearSystem cremona_step(const LinearSystem& sys);

/// Strip the conic through the five largest points when 2j < b_1+...+b_5.
LinearSystem bezout_five_step(const LinearSystem& sys);

/// Strip the line through the two largest points when j < b_1 + b_2.
LinearSystem bezout_two_step(const LinearSystem& sys);

/// Runs the reduction loop: normalize, stop on a terminal state, otherwise
/// try Bezout-two, then Cremona (only with m < 0), then Bezout-five.
DimResult dim_linear_system(const LinearSystem& sys);

}  // namespace lefschetz
