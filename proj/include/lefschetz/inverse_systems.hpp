// Graded pieces of R/(L_1^{a_1}, ..., L_r^{a_r}) for general linear forms in
// three variables, via the inverse-system correspondence with ideals of fat
// points at the dual points.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lefschetz/combinatorics.hpp"
#include "lefschetz/linsys.hpp"

namespace lefschetz {

/// dim [R/(I, L^k)]_j, or dim [R/I]_j without a shift.
struct QuotientQuery {
  PowerSequence powers;
  Int degree = 0;
  std::optional<Int> square_shift;  // k; the name reflects the k = 2 case
};

/// A degree whose dimension the reductions could not settle.
class UndeterminedError : public std::runtime_error {
 public:
  UndeterminedError(Int degree, const std::string& what) : std::runtime_error(what), degree_(degree) {}
  Int degree() const noexcept { return degree_; }

 private:
  Int degree_;
};

/// The quotient is not artinian (fewer than three general forms).
class NonArtinianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// L(j; j - a_1 + 1, ..., j - a_r + 1), normalized.  Requires j >= max a_i.
LinearSystem apply_duality(const PowerSequence& powers, Int j);

/// Drops generators of degree > j, adds the point for L^k when k <= j, then
/// dualizes and reduces.  Undetermined reductions propagate.
DimResult quotient_dim(const QuotientQuery& q);

/// Value for a degree the reductions left undetermined.
using DegreeFallback = std::function<Int(Int degree)>;

/// (dim A_0, ..., dim A_e) up to the last nonzero degree.  Requires r >= 3.
/// Undetermined degrees go to `fallback`; without one, UndeterminedError.
std::vector<Int> hilbert_function(const PowerSequence& powers, const DegreeFallback& fallback = {});

/// Coefficients of prod_i (1 + t + ... + t^{a_i - 1}) / (1 - t)^{3 - r} for
/// r <= 3 (monomial complete intersection after a coordinate change).  For
/// r = 3 the full polynomial is returned and `length` is ignored; for r < 3
/// the series is truncated to `length` terms.
std::vector<Int> ci_hilbert_function(const PowerSequence& powers, std::size_t length = 0);

}  // namespace lefschetz
