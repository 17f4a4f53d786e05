// Integer primitives and the two value types shared by every module:
// sequences of powers of general linear forms, and plane fat-point
// linear systems L(j; b_1, ..., b_n).
#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace lefschetz {

using Int = std::int64_t;

/// Raised when a caller violates an operation's precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised instead of letting signed arithmetic wrap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// max(0, a)
constexpr Int pos_part(Int a) noexcept { return a > 0 ? a : 0; }

/// C(a, b) with the convention C(a, b) = 0 whenever a < b.  Throws
/// OverflowError rather than wrapping.
Int binom_safe(Int a, Int b);

/// Exponents (a_1 <= ... <= a_r) of the general linear forms generating an
/// ideal.  The constructor sorts, so input order never matters.
class PowerSequence {
 public:
  explicit PowerSequence(std::vector<Int> powers);
  PowerSequence(std::initializer_list<Int> powers)
      : PowerSequence(std::vector<Int>(powers)) {}

  std::span<const Int> powers() const noexcept { return powers_; }
  const std::vector<Int>& values() const noexcept { return powers_; }
  std::size_t size() const noexcept { return powers_.size(); }
  Int operator[](std::size_t i) const { return powers_[i]; }
  Int max() const noexcept { return powers_.back(); }
  Int sum() const;
  /// The first `count` powers as a sequence of their own.
  PowerSequence prefix(std::size_t count) const;

  friend bool operator==(const PowerSequence&, const PowerSequence&) = default;

 private:
  std::vector<Int> powers_;
};

std::ostream& operator<<(std::ostream& os, const PowerSequence& seq);

/// L(j; b_1, ..., b_n): degree-j plane curves with multiplicity >= b_i at n
/// general points.  Degree may go negative transiently during reductions.
struct LinearSystem {
  Int degree = 0;
  std::vector<Int> mults;

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

std::ostream& operator<<(std::ostream& os, const LinearSystem& sys);

/// C(j+2, 2) - sum C(b_i+1, 2), unclamped.
Int virtual_dimension(const LinearSystem& sys);

/// [virtual_dimension]_+
Int expected_dimension(const LinearSystem& sys);

}  // namespace lefschetz
