#include "fqt/omega_table.hpp"

#include <stdexcept>

#include "fqt/errors.hpp"

namespace fqt {

OmegaCountTable build_omega_table(std::uint64_t q, int n_max, const std::vector<BigInt>& pi) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (static_cast<int>(pi.size()) <= n_max)
    throw std::invalid_argument("need pi(d) for every d <= n_max");

  OmegaCountTable tbl;
  tbl.q = q;
  tbl.n_max = n_max;
  tbl.counts.resize(static_cast<size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n)
    tbl.counts[static_cast<size_t>(n)].assign(static_cast<size_t>(n + 1), BigInt(0));
  tbl.counts[0][0] = 1;

  for (int d = 1; d <= n_max; ++d) {
    // multiply the table by sum_k multiset(pi(d), k) y^k u^{dk}
    auto prev = tbl.counts;
    for (int k = 1; d * k <= n_max; ++k) {
      const BigInt w = multiset_count(pi[static_cast<size_t>(d)], k);
      for (int n = d * k; n <= n_max; ++n) {
        auto& row = tbl.counts[static_cast<size_t>(n)];
        const auto& src = prev[static_cast<size_t>(n - d * k)];
        for (int t = k; t <= n; ++t) {
          if (t - k >= static_cast<int>(src.size())) break;
          row[static_cast<size_t>(t)] += w * src[static_cast<size_t>(t - k)];
        }
      }
    }
  }

  // census identity: every monic polynomial lands in exactly one Omega bucket
  BigInt qn = 1;
  for (int n = 0; n <= n_max; ++n) {
    BigInt sum = 0;
    for (const auto& v : tbl.counts[static_cast<size_t>(n)]) sum += v;
    if (sum != qn) throw internal_error("Omega census violates sum_t N_t(n) = q^n at n = " + std::to_string(n));
    qn *= q;
  }
  return tbl;
}

OmegaCountTable build_omega_table(const IrreducibleTable& table, int n_max) {
  std::vector<BigInt> pi(static_cast<size_t>(n_max + 1), BigInt(0));
  for (int d = 1; d <= n_max; ++d)
    pi[static_cast<size_t>(d)] = d <= table.max_deg ? BigInt(table.count_at(d))
                                                    : mobius_irreducible_count(table.field.q(), d);
  return build_omega_table(table.field.q(), n_max, pi);
}

BigRat weighted_sum_rational(const OmegaCountTable& tbl, int n, const BigRat& y) {
  if (n < 0 || n > tbl.n_max) throw std::invalid_argument("n outside the table range");
  BigRat sum = 0, yk = 1;
  for (int t = 0; t <= n; ++t) {
    sum += BigRat(tbl.at(n, t)) * yk;
    yk *= y;
  }
  return sum;
}

Complex weighted_sum(const OmegaCountTable& tbl, int n, Complex y) {
  if (n < 0 || n > tbl.n_max) throw std::invalid_argument("n outside the table range");
  Complex sum = 0, yk = 1;
  for (int t = 0; t <= n; ++t) {
    sum += to_double(tbl.at(n, t)) * yk;
    yk *= y;
  }
  return sum;
}

}  // namespace fqt
