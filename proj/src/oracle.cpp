#include "lefschetz/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

#include "lefschetz/linsys.hpp"

namespace lefschetz {

namespace {

using Coeffs = std::array<std::uint64_t, 3>;

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0') throw ConfigError(std::string(name) + ": not an unsigned integer");
  return x;
}

std::vector<Coeffs> draw_coeffs(std::mt19937_64& gen, std::size_t count, std::uint64_t prime) {
  std::uniform_int_distribution<std::uint64_t> dist(1, prime - 1);
  std::vector<Coeffs> out(count);
  for (auto& c : out)
    for (auto& x : c) x = dist(gen);
  return out;
}

// Multinomial expansion of (c0 x + c1 y + c2 z)^a over the degree-a basis.
std::vector<std::uint64_t> power_of_form(const Coeffs& c, Int a, const PrimeField& f) {
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(a) + 1, 1);
  for (Int i = 1; i <= a; ++i) fact[i] = f.mul(fact[i - 1], static_cast<std::uint64_t>(i));
  std::vector<std::uint64_t> out;
  for (const Monomial& e : monomial_basis(a)) {
    std::uint64_t v = f.mul(fact[a], f.inv(f.mul(f.mul(fact[e[0]], fact[e[1]]), fact[e[2]])));
    for (int i = 0; i < 3; ++i) v = f.mul(v, f.pow(c[i], static_cast<std::uint64_t>(e[i])));
    out.push_back(v);
  }
  return out;
}

void append_multiples(DenseMatrixModP& m, const Coeffs& form, Int a, Int j, const PrimeField& f) {
  if (a > j) return;
  const auto coeffs = power_of_form(form, a, f);
  const auto shape = monomial_basis(a);
  for (const Monomial& mu : monomial_basis(j - a)) {
    auto row = m.add_row();
    for (std::size_t t = 0; t < shape.size(); ++t) {
      const Monomial e{shape[t][0] + mu[0], shape[t][1] + mu[1], shape[t][2] + mu[2]};
      row[monomial_index(e)] = static_cast<std::uint32_t>(coeffs[t]);
    }
  }
}

std::uint64_t falling(Int n, Int k, const PrimeField& f) {
  std::uint64_t v = 1;
  for (Int i = 0; i < k; ++i) v = f.mul(v, static_cast<std::uint64_t>(n - i));
  return v;
}

}  // namespace

PrimeFieldConfig PrimeFieldConfig::from_env() {
  PrimeFieldConfig cfg;
  if (auto p = env_u64("LEFSCHETZ_PRIME")) cfg.prime = *p;
  if (auto s = env_u64("LEFSCHETZ_SEED")) cfg.seed = *s;
  return cfg;
}

void PrimeFieldConfig::validate(Int max_degree) const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (prime >= (std::uint64_t{1} << 31)) throw ConfigError("prime must be below 2^31");
  if (!is_prime(prime)) throw ConfigError("modulus " + std::to_string(prime) + " is not prime");
  if (static_cast<Int>(prime) <= max_degree)
    throw ConfigError("prime " + std::to_string(prime) + " does not exceed degree " + std::to_string(max_degree));
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<Monomial> monomial_basis(Int j) {
  if (j < 0) throw ContractError("monomial_basis: negative degree");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>((j + 1) * (j + 2) / 2));
  for (Int a = j; a >= 0; --a)
    for (Int b = j - a; b >= 0; --b) out.push_back({a, b, j - a - b});
  return out;
}

std::size_t monomial_index(const Monomial& m) noexcept {
  const Int j = m[0] + m[1] + m[2];
  const Int before = j - m[0];  // blocks with a larger x exponent
  return static_cast<std::size_t>(before * (before + 1) / 2 + (j - m[0] - m[1]));
}

DenseMatrixModP macaulay_matrix(std::span<const Int> powers, std::span<const Coeffs> forms, Int j,
                                std::uint64_t prime) {
  if (powers.size() != forms.size()) throw ContractError("macaulay_matrix: one form per power");
  const PrimeField f(prime);
  DenseMatrixModP m(0, static_cast<std::size_t>(binom_safe(j + 2, 2)), prime);
  for (std::size_t i = 0; i < powers.size(); ++i) append_multiples(m, forms[i], powers[i], j, f);
  return m;
}

OracleDegreeDims oracle_degree_dims(const PowerSequence& powers, Int j, std::span<const Int> shifts,
                                    const PrimeFieldConfig& cfg) {
  if (j < 0) throw ContractError("oracle: negative degree");
  cfg.validate(j);
  const PrimeField f(cfg.prime);
  const Int cols = binom_safe(j + 2, 2);

  OracleDegreeDims out;
  out.dim_a = cols;
  out.quotient_dim.assign(shifts.size(), cols);
  out.map_rank.assign(shifts.size(), 0);

  for (int trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 gen(stream_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
    const auto forms = draw_coeffs(gen, powers.size(), cfg.prime);
    const Coeffs extra = draw_coeffs(gen, 1, cfg.prime).front();

    DenseMatrixModP ideal = macaulay_matrix(powers.powers(), forms, j, cfg.prime);
    const Int rank_ideal = kernels::row_echelon_parallel(ideal);
    ideal.truncate_rows(static_cast<std::size_t>(rank_ideal));
    const Int dim_a = cols - rank_ideal;
    out.dim_a = std::min(out.dim_a, dim_a);

    for (std::size_t s = 0; s < shifts.size(); ++s) {
      const Int k = shifts[s];
      if (k < 1) throw ContractError("oracle: shift must be >= 1");
      Int quotient = dim_a;
      if (k <= j && dim_a > 0) {
        DenseMatrixModP extended = ideal;
        append_multiples(extended, extra, k, j, f);
        quotient = cols - kernels::row_echelon_parallel(extended);
      }
      out.quotient_dim[s] = std::min(out.quotient_dim[s], quotient);
      out.map_rank[s] = std::max(out.map_rank[s], dim_a - quotient);
    }
  }
  return out;
}

Int oracle_quotient_dim(const PowerSequence& powers, Int j, std::optional<Int> shift, const PrimeFieldConfig& cfg) {
  if (!shift) return oracle_degree_dims(powers, j, {}, cfg).dim_a;
  const Int k = *shift;
  return oracle_degree_dims(powers, j, std::span<const Int>(&k, 1), cfg).quotient_dim.front();
}

Int oracle_map_rank(const PowerSequence& powers, Int k, Int j, const PrimeFieldConfig& cfg) {
  if (k < 1 || j < k) throw ContractError("oracle_map_rank: requires j >= k >= 1");
  return oracle_degree_dims(powers, j, std::span<const Int>(&k, 1), cfg).map_rank.front();
}

std::vector<Int> oracle_hilbert_function(const PowerSequence& powers, const PrimeFieldConfig& cfg) {
  if (powers.size() < 3) throw ContractError("oracle_hilbert_function: needs r >= 3");
  std::vector<Int> hf;
  for (Int j = 0;; ++j) {
    const Int d = oracle_quotient_dim(powers, j, std::nullopt, cfg);
    if (d == 0) return hf;
    hf.push_back(d);
  }
}

Int oracle_linsys_dim(const LinearSystem& input, const PrimeFieldConfig& cfg) {
  const LinearSystem sys = normalize(input);
  const Int j = sys.degree;
  if (j < 0) return 0;
  cfg.validate(j);
  const PrimeField f(cfg.prime);
  const auto basis = monomial_basis(j);

  Int best = static_cast<Int>(basis.size());
  for (int trial = 0; trial < cfg.trials; ++trial) {
    std::mt19937_64 gen(stream_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
    const auto points = draw_coeffs(gen, sys.mults.size(), cfg.prime);

    DenseMatrixModP m(0, basis.size(), cfg.prime);
    for (std::size_t i = 0; i < points.size(); ++i) {
      // all partials of order b-1 vanish <=> multiplicity >= b (Euler, p > j);
      // beyond order j the conditions are f = 0, i.e. order j
      const Int order = std::min(sys.mults[i] - 1, j);
      std::array<std::vector<std::uint64_t>, 3> pw;
      for (int v = 0; v < 3; ++v) {
        pw[v].assign(static_cast<std::size_t>(j) + 1, 1);
        for (Int e = 1; e <= j; ++e) pw[v][e] = f.mul(pw[v][e - 1], points[i][v]);
      }
      for (const Monomial& alpha : monomial_basis(order)) {
        auto row = m.add_row();
        for (std::size_t c = 0; c < basis.size(); ++c) {
          const Monomial& e = basis[c];
          if (e[0] < alpha[0] || e[1] < alpha[1] || e[2] < alpha[2]) continue;
          std::uint64_t v = 1;
          for (int t = 0; t < 3; ++t) v = f.mul(f.mul(v, falling(e[t], alpha[t], f)), pw[t][e[t] - alpha[t]]);
          row[c] = static_cast<std::uint32_t>(v);
        }
      }
    }
    best = std::min(best, static_cast<Int>(basis.size()) - kernels::row_echelon_parallel(m));
  }
  return best;
}

}  // namespace lefschetz
