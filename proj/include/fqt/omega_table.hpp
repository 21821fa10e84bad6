#pragma once

#include <cstdint>
#include <vector>

#include "fqt/bigint.hpp"
#include "fqt/factor.hpp"

namespace fqt {

// Exact table N_t(n) = #{f monic, deg f = n, Omega(f) = t} for 0 <= t <= n <= n_max,
// built by dynamic programming over the Euler product of zeta(u,y): each degree d
// contributes the factor sum_k multiset(pi(d), k) y^k u^{dk}.
struct OmegaCountTable {
  std::uint64_t q = 0;
  int n_max = 0;
  std::vector<std::vector<BigInt>> counts;  // counts[n][t], t = 0..n

  const BigInt& at(int n, int t) const { return counts[static_cast<size_t>(n)][static_cast<size_t>(t)]; }
};

// pi[d] for d = 1..n_max (index 0 ignored).
OmegaCountTable build_omega_table(std::uint64_t q, int n_max, const std::vector<BigInt>& pi);
// Convenience: counts from the table's sieve range, Moebius census beyond it.
OmegaCountTable build_omega_table(const IrreducibleTable& table, int n_max);

// sum_t N_t(n) y^t, exact in rationals.
BigRat weighted_sum_rational(const OmegaCountTable& tbl, int n, const BigRat& y);
Complex weighted_sum(const OmegaCountTable& tbl, int n, Complex y);

}  // namespace fqt
