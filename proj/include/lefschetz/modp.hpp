// Dense matrices over Z/p and row-echelon kernels.  The serial kernel is the
// reference; the OpenMP kernel must produce the same rank and basis.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lefschetz/combinatorics.hpp"

namespace lefschetz {

/// Arithmetic modulo a prime p < 2^31.  Reduction of 64-bit products uses a
/// precomputed Barrett constant.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t prime);

  std::uint64_t prime() const noexcept { return p_; }

  // x < 2^63
  std::uint64_t reduce(std::uint64_t x) const noexcept {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * mu_) >> 64);
    std::uint64_t r = x - q * p_;
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return reduce(a * b); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
  std::uint64_t mu_;  // floor(2^64 / p)
};

bool is_prime(std::uint64_t n);

/// Row-major dense matrix with entries in [0, prime).
class DenseMatrixModP {
 public:
  DenseMatrixModP(std::size_t rows, std::size_t cols, std::uint64_t prime);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t prime() const noexcept { return prime_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Appends a zero row and returns it.
  std::span<std::uint32_t> add_row();
  void truncate_rows(std::size_t rows);
  void swap_rows(std::size_t a, std::size_t b);

  static DenseMatrixModP from_rows(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols,
                                   std::uint64_t prime);

  friend bool operator==(const DenseMatrixModP&, const DenseMatrixModP&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t prime_;
  std::vector<std::uint32_t> data_;
};

namespace kernels {

/// In-place Gaussian elimination.  On return the first `rank` rows are the
/// echelon basis with leading entries 1 and the rest are zero.
Int row_echelon_serial(DenseMatrixModP& m);

/// Same contract as row_echelon_serial; row updates below each pivot run
/// in an OpenMP loop once the matrix is large enough and no enclosing
/// parallel region is active.
Int row_echelon_parallel(DenseMatrixModP& m);

}  // namespace kernels

/// Exact rank over Z/p.
Int matrix_rank_mod_p(DenseMatrixModP m);

}  // namespace lefschetz
