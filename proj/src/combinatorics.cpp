#include "lefschetz/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace lefschetz {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

Int binom_safe(Int a, Int b) {
  if (b < 0) throw ContractError("binom_safe: negative lower index");
  if (a < b) return 0;
  b = std::min(b, a - b);
  // running product stays an exact binomial C(a-b+i, i) at every step
  Int result = 1;
  for (Int i = 1; i <= b; ++i) {
    const Int num = a - b + i;
    const Int g = std::gcd(result, i);
    result = checked_mul(result / g, num / (i / g));
  }
  return result;
}

PowerSequence::PowerSequence(std::vector<Int> powers) : powers_(std::move(powers)) {
  if (powers_.empty()) throw ContractError("PowerSequence: at least one power required");
  std::sort(powers_.begin(), powers_.end());
  if (powers_.front() < 1) throw ContractError("PowerSequence: powers must be positive");
}

Int PowerSequence::sum() const {
  Int s = 0;
  for (Int a : powers_) s = checked_add(s, a);
  return s;
}

PowerSequence PowerSequence::prefix(std::size_t count) const {
  if (count == 0 || count > powers_.size()) throw ContractError("PowerSequence::prefix: bad length");
  return PowerSequence(std::vector<Int>(powers_.begin(), powers_.begin() + static_cast<std::ptrdiff_t>(count)));
}

std::ostream& operator<<(std::ostream& os, const PowerSequence& seq) {
  os << '(';
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const LinearSystem& sys) {
  os << "L(" << sys.degree << ';';
  if (sys.mults.empty()) os << " -";
  for (std::size_t i = 0; i < sys.mults.size(); ++i) os << (i ? "," : " ") << sys.mults[i];
  return os << ')';
}

Int virtual_dimension(const LinearSystem& sys) {
  Int v = binom_safe(sys.degree + 2, 2);
  for (Int b : sys.mults) v = checked_add(v, -binom_safe(b + 1, 2));
  return v;
}

Int expected_dimension(const LinearSystem& sys) { return pos_part(virtual_dimension(sys)); }

}  // namespace lefschetz
