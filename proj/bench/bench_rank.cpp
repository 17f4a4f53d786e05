// Serial reference vs OpenMP echelon kernel on Macaulay matrices of the
// largest graded pieces that show up in sweeps.
#include <omp.h>

#include <cstdio>
#include <random>
#include <vector>

#include "lefschetz/modp.hpp"
#include "lefschetz/oracle.hpp"

using namespace lefschetz;

namespace {

struct Case {
  std::vector<Int> powers;
  Int degree;
};

DenseMatrixModP build(const Case& c, std::uint64_t prime, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, prime - 1);
  std::vector<std::array<std::uint64_t, 3>> forms(c.powers.size());
  for (auto& f : forms)
    for (auto& x : f) x = dist(gen);
  return macaulay_matrix(c.powers, forms, c.degree, prime);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  const std::uint64_t prime = 2147483647;
  const std::vector<Case> cases = {
      {{12, 12, 12, 12, 12}, 18},
      {{12, 12, 12, 12, 12}, 21},
      {{9, 10, 11, 12, 12, 12, 12}, 16},
      {{2, 3, 5, 8, 12}, 24},
  };

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %6s %6s %6s %10s %10s %8s\n", "powers@degree", "rows", "cols", "rank", "serial_ms", "omp_ms",
              "speedup");
  int status = 0;
  for (const Case& c : cases) {
    const DenseMatrixModP m = build(c, prime, 7);
    double t_serial = 0, t_omp = 0;
    Int rank_serial = 0, rank_omp = 0;
    for (int i = 0; i < reps; ++i) {
      DenseMatrixModP a = m, b = m;
      double t0 = omp_get_wtime();
      rank_serial = kernels::row_echelon_serial(a);
      double t1 = omp_get_wtime();
      rank_omp = kernels::row_echelon_parallel(b);
      double t2 = omp_get_wtime();
      t_serial += t1 - t0;
      t_omp += t2 - t1;
      if (!(a == b)) status = 1;
    }
    char label[64];
    std::snprintf(label, sizeof label, "%zu forms@%lld", c.powers.size(), static_cast<long long>(c.degree));
    std::printf("%-28s %6zu %6zu %6lld %10.2f %10.2f %8.2f%s\n", label, m.rows(), m.cols(),
                static_cast<long long>(rank_omp), 1e3 * t_serial / reps, 1e3 * t_omp / reps, t_serial / t_omp,
                rank_serial == rank_omp ? "" : "  RANK MISMATCH");
    if (rank_serial != rank_omp) status = 1;
  }
  return status;
}
