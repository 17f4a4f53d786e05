#include "lefschetz/modp.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

namespace lefschetz {

PrimeField::PrimeField(std::uint64_t prime) : p_(prime) {
  if (prime < 2 || prime >= (std::uint64_t{1} << 31)) throw ContractError("PrimeField: prime must be in [2, 2^31)");
  mu_ = std::numeric_limits<std::uint64_t>::max() / p_;
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw ContractError("PrimeField::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

DenseMatrixModP::DenseMatrixModP(std::size_t rows, std::size_t cols, std::uint64_t prime)
    : rows_(rows), cols_(cols), prime_(prime), data_(rows * cols, 0) {}

std::span<std::uint32_t> DenseMatrixModP::add_row() {
  data_.resize(data_.size() + cols_, 0);
  ++rows_;
  return row(rows_ - 1);
}

void DenseMatrixModP::truncate_rows(std::size_t rows) {
  if (rows > rows_) throw ContractError("truncate_rows: cannot grow");
  rows_ = rows;
  data_.resize(rows_ * cols_);
}

void DenseMatrixModP::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

DenseMatrixModP DenseMatrixModP::from_rows(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols,
                                           std::uint64_t prime) {
  DenseMatrixModP m(0, cols, prime);
  for (const auto& src : rows) {
    if (src.size() != cols) throw ContractError("from_rows: ragged input");
    auto dst = m.add_row();
    for (std::size_t c = 0; c < cols; ++c) dst[c] = static_cast<std::uint32_t>(src[c] % prime);
  }
  return m;
}

namespace kernels {

Int row_echelon_serial(DenseMatrixModP& m) {
  const std::uint64_t p = m.prime();
  const std::size_t rows = m.rows(), cols = m.cols();
  auto inverse = [p](std::uint64_t a) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m.at(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, rank);

    const std::uint64_t s = inverse(m.at(rank, col));
    for (std::size_t c = col; c < cols; ++c) m.at(rank, c) = static_cast<std::uint32_t>(m.at(rank, c) * s % p);

    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c)
        m.at(i, c) = static_cast<std::uint32_t>((m.at(i, c) + (p - f) * m.at(rank, c)) % p);
    }
    ++rank;
  }
  return static_cast<Int>(rank);
}

namespace {

// rows * cols below which a parallel region costs more than it saves
constexpr std::size_t kParallelThreshold = 1u << 14;

inline void eliminate_row(const PrimeField& field, std::uint32_t* __restrict target,
                          const std::uint32_t* __restrict pivot, std::size_t from, std::size_t to) {
  const std::uint64_t f = field.neg(target[from]);
  for (std::size_t c = from; c < to; ++c)
    target[c] = static_cast<std::uint32_t>(field.reduce(target[c] + f * pivot[c]));
}

}  // namespace

Int row_echelon_parallel(DenseMatrixModP& m) {
  const PrimeField field(m.prime());
  const std::size_t rows = m.rows(), cols = m.cols();
  const bool go_parallel = rows * cols >= kParallelThreshold && !omp_in_parallel() && omp_get_max_threads() > 1;

  std::size_t rank = 0;
  bool found = false;
#pragma omp parallel if (go_parallel) shared(rank, found)
  {
    for (std::size_t col = 0; col < cols; ++col) {
      if (rank >= rows) break;  // every thread reads the same value after a barrier
#pragma omp single
      {
        std::size_t piv = rank;
        while (piv < rows && m.at(piv, col) == 0) ++piv;
        found = piv < rows;
        if (found) {
          m.swap_rows(piv, rank);
          auto prow = m.row(rank);
          const std::uint64_t s = field.inv(prow[col]);
          for (std::size_t c = col; c < cols; ++c) prow[c] = static_cast<std::uint32_t>(field.mul(prow[c], s));
        }
      }
      const bool have_pivot = found;
#pragma omp barrier
      if (!have_pivot) continue;

      const std::uint32_t* pivot = m.row(rank).data();
#pragma omp for schedule(static)
      for (std::size_t i = rank + 1; i < rows; ++i) {
        std::uint32_t* target = m.row(i).data();
        if (target[col] != 0) eliminate_row(field, target, pivot, col, cols);
      }

#pragma omp single
      ++rank;
    }
  }
  return static_cast<Int>(rank);
}

}  // namespace kernels

Int matrix_rank_mod_p(DenseMatrixModP m) { return kernels::row_echelon_parallel(m); }

}  // namespace lefschetz
