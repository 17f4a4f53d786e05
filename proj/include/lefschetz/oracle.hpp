// Brute-force ground truth over a large prime field.  General linear forms
// and general points are random specializations drawn from a seeded stream;
// dimensions come from exact ranks of Macaulay matrices (ideals) and
// derivative-condition matrices (fat points).
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lefschetz/combinatorics.hpp"
#include "lefschetz/modp.hpp"

namespace lefschetz {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PrimeFieldConfig {
  std::uint64_t prime = 2147483647;
  int trials = 3;
  std::uint64_t seed = 1;

  /// Defaults overridden by LEFSCHETZ_PRIME and LEFSCHETZ_SEED when set.
  static PrimeFieldConfig from_env();

  /// Throws ConfigError unless prime is a prime in (max_degree, 2^31) and
  /// trials >= 1.
  void validate(Int max_degree) const;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of the independent stream for `index` (a trial, a sweep sample).
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ index);
}

using Monomial = std::array<Int, 3>;

/// Degree-j monomials x^a y^b z^c in graded lex order (x first).
std::vector<Monomial> monomial_basis(Int j);

/// Position of `m` inside monomial_basis(m[0] + m[1] + m[2]).
std::size_t monomial_index(const Monomial& m) noexcept;

/// Per-degree oracle data sharing the same random forms within each trial.
struct OracleDegreeDims {
  Int dim_a = 0;                  // min over trials of dim [R/I]_j
  std::vector<Int> quotient_dim;  // per shift k: min over trials of dim [R/(I, L^k)]_j
  std::vector<Int> map_rank;      // per shift k: max over trials of rank of x L^k into degree j
};

OracleDegreeDims oracle_degree_dims(const PowerSequence& powers, Int j, std::span<const Int> shifts,
                                    const PrimeFieldConfig& cfg);

Int oracle_quotient_dim(const PowerSequence& powers, Int j, std::optional<Int> shift, const PrimeFieldConfig& cfg);

/// dim L(j; b_1, ..., b_n) at random points; 0 for negative degree.
Int oracle_linsys_dim(const LinearSystem& sys, const PrimeFieldConfig& cfg);

/// rank of x L^k : A_{j-k} -> A_j.  Requires j >= k >= 1.
Int oracle_map_rank(const PowerSequence& powers, Int k, Int j, const PrimeFieldConfig& cfg);

/// Oracle Hilbert function, stopping at the first zero (r >= 3).
std::vector<Int> oracle_hilbert_function(const PowerSequence& powers, const PrimeFieldConfig& cfg);

/// Rows {monomial of degree j - a_i} * l_i^{a_i}, generator-major, for the
/// given forms (one coefficient triple per power).  Exposed for tests and
/// the benchmark.
DenseMatrixModP macaulay_matrix(std::span<const Int> powers, std::span<const std::array<std::uint64_t, 3>> forms,
                                Int j, std::uint64_t prime);

}  // namespace lefschetz
