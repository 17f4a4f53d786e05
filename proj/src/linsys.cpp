#include "lefschetz/linsys.hpp"

#include <algorithm>
#include <functional>

namespace lefschetz {

namespace {

Int mult_at(const LinearSystem& sys, std::size_t i) {
  return i < sys.mults.size() ? sys.mults[i] : 0;
}

Int top_sum(const LinearSystem& sys, std::size_t count) {
  Int s = 0;
  for (std::size_t i = 0; i < count; ++i) s = checked_add(s, mult_at(sys, i));
  return s;
}

// Adds `delta` to the first `count` multiplicities, padding with zeros.
LinearSystem shift_top(const LinearSystem& sys, Int degree_delta, std::size_t count, Int delta) {
  LinearSystem out = sys;
  if (out.mults.size() < count) out.mults.resize(count, 0);
  out.degree = checked_add(out.degree, degree_delta);
  for (std::size_t i = 0; i < count; ++i) out.mults[i] = checked_add(out.mults[i], delta);
  return normalize(std::move(out));
}

bool is_normalized(const LinearSystem& sys) {
  return std::is_sorted(sys.mults.begin(), sys.mults.end(), std::greater<>()) &&
         std::all_of(sys.mults.begin(), sys.mults.end(), [](Int b) { return b >= 1; });
}

}  // namespace

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Normalize: return "Normalize";
    case StepKind::Cremona: return "Cremona";
    case StepKind::BezoutFive: return "BezoutFive";
    case StepKind::BezoutTwo: return "BezoutTwo";
    case StepKind::StandardStop: return "StandardStop";
    case StepKind::EmptyStop: return "EmptyStop";
    case StepKind::NegativeDegreeStop: return "NegativeDegreeStop";
  }
  return "?";
}

Int DimResult::dim() const {
  if (!value) throw ContractError("dimension is undetermined");
  return *value;
}

LinearSystem normalize(LinearSystem sys) {
  std::erase_if(sys.mults, [](Int b) { return b <= 0; });
  std::sort(sys.mults.begin(), sys.mults.end(), std::greater<>());
  return sys;
}

bool is_standard(const LinearSystem& sys) { return sys.degree >= top_sum(sys, 3); }

Int cremona_shift(const LinearSystem& sys) {
  if (sys.mults.size() < 3) throw ContractError("cremona: needs at least three points");
  return sys.degree - top_sum(sys, 3);
}

bool cremona_applicable(const LinearSystem& sys) {
  if (sys.mults.size() < 3 || !is_normalized(sys)) return false;
  const Int m = cremona_shift(sys);
  return sys.mults[2] + m >= 0;
}

bool bezout_five_applicable(const LinearSystem& sys) {
  return is_normalized(sys) && 2 * sys.degree < top_sum(sys, 5);
}

bool bezout_two_applicable(const LinearSystem& sys) {
  return is_normalized(sys) && !sys.mults.empty() && sys.degree < top_sum(sys, 2);
}

LinearSystem cremona_step(const LinearSystem& sys) {
  if (!cremona_applicable(sys)) throw ContractError("cremona_step: precondition b_i + m >= 0 fails");
  const Int m = cremona_shift(sys);
  return shift_top(sys, m, 3, m);
}

LinearSystem bezout_five_step(const LinearSystem& sys) {
  if (!bezout_five_applicable(sys)) throw ContractError("bezout_five_step: requires 2j < b_1+...+b_5");
  return shift_top(sys, -2, 5, -1);
}

LinearSystem bezout_two_step(const LinearSystem& sys) {
  if (!bezout_two_applicable(sys)) throw ContractError("bezout_two_step: requires j < b_1+b_2");
  return shift_top(sys, -1, 2, -1);
}

DimResult dim_linear_system(const LinearSystem& input) {
  DimResult result;
  auto& steps = result.trace.steps;
  LinearSystem cur = normalize(input);
  if (!(cur == input)) steps.push_back({StepKind::Normalize, 0, input, cur});

  auto stop = [&](StepKind kind, Int dim) {
    steps.push_back({kind, 0, cur, cur});
    result.value = dim;
  };

  while (true) {
    if (cur.degree < 0) {
      stop(StepKind::NegativeDegreeStop, 0);
      break;
    }
    if (cur.mults.empty()) {
      stop(StepKind::EmptyStop, binom_safe(cur.degree + 2, 2));
      break;
    }
    if (is_standard(cur)) {
      // one point with j >= b_1 is standard too
      stop(StepKind::StandardStop, expected_dimension(cur));
      break;
    }
    ReductionStep step;
    step.before = cur;
    if (bezout_two_applicable(cur)) {
      step.kind = StepKind::BezoutTwo;
      step.after = bezout_two_step(cur);
    } else if (cur.mults.size() >= 3 && cremona_shift(cur) < 0 && cremona_applicable(cur)) {
      step.kind = StepKind::Cremona;
      step.shift = cremona_shift(cur);
      step.after = cremona_step(cur);
    } else if (bezout_five_applicable(cur)) {
      step.kind = StepKind::BezoutFive;
      step.after = bezout_five_step(cur);
    } else {
      break;  // undetermined
    }
    cur = step.after;
    steps.push_back(std::move(step));
  }
  result.trace.terminal = cur;
  return result;
}

}  // namespace lefschetz
