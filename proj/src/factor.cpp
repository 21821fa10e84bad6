#include "fqt/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqt/errors.hpp"

namespace fqt {

namespace {

int mobius_int(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

BigInt mobius_irreducible_count(std::uint64_t q, int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  BigInt sum = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius_int(d);
    if (mu == 0) continue;
    sum += mu * pow_big(BigInt(q), static_cast<unsigned>(n / d));
  }
  BigInt count = sum / n;
  if (count * n != sum) throw internal_error("Moebius census sum not divisible by n");
  return count;
}

std::vector<BigInt> irreducible_counts(std::uint64_t q, int n_max) {
  std::vector<BigInt> pi(static_cast<size_t>(n_max + 1), BigInt(0));
  for (int d = 1; d <= n_max; ++d) pi[static_cast<size_t>(d)] = mobius_irreducible_count(q, d);
  return pi;
}

IrreducibleTable build_irreducible_table(const FieldSpec& F, int max_deg, std::uint64_t memory_budget) {
  if (max_deg < 1) throw std::invalid_argument("max_deg must be >= 1");
  const std::uint64_t q = F.q();
  std::uint64_t qd = 1;
  for (int d = 0; d < max_deg; ++d) {
    qd *= q;
    if (qd > memory_budget)
      throw resource_error("q^max_deg exceeds the irreducible-table memory budget");
  }

  IrreducibleTable table;
  table.field = F;
  table.max_deg = max_deg;
  table.by_degree.resize(static_cast<size_t>(max_deg + 1));
  table.counts.assign(static_cast<size_t>(max_deg + 1), 0);

  // reducible[d][index] marks monic degree-d products of lower-degree factors
  std::vector<std::vector<bool>> reducible(static_cast<size_t>(max_deg + 1));
  {
    std::uint64_t sz = 1;
    for (int d = 1; d <= max_deg; ++d) {
      sz *= q;
      reducible[static_cast<size_t>(d)].assign(sz, false);
    }
  }

  for (int d = 1; d <= max_deg; ++d) {
    auto& level = table.by_degree[static_cast<size_t>(d)];
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (reducible[static_cast<size_t>(d)][idx]) continue;
      const MonicPoly P = MonicPoly::from_index(F, d, idx);
      level.push_back(P);
      // mark every multiple P*h, h monic of degree 1..max_deg-d
      for (int m = 1; m + d <= max_deg; ++m) {
        for_each_monic(F, m, [&](const MonicPoly& h) {
          const MonicPoly prod = monic_mul(F, P, h);
          reducible[static_cast<size_t>(prod.degree())][prod.index(F)] = true;
        });
      }
    }
    table.counts[static_cast<size_t>(d)] = static_cast<long long>(level.size());
    if (BigInt(table.counts[static_cast<size_t>(d)]) != mobius_irreducible_count(q, d))
      throw internal_error("sieve count disagrees with Moebius census at degree " + std::to_string(d));
  }
  return table;
}

bool is_irreducible(const FieldSpec& F, const MonicPoly& g, const IrreducibleTable& table) {
  if (g.degree() == 0) return false;
  const Factorization fac = factorize(F, g, table);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

Factorization factorize(const FieldSpec& F, const MonicPoly& g, const IrreducibleTable& table) {
  if (!(table.field == F)) throw std::invalid_argument("table built over a different field");
  if (g.degree() > 2 * table.max_deg)
    throw std::invalid_argument("irreducible table too shallow for deg " + std::to_string(g.degree()));

  Factorization fac;
  Poly rem = g.as_poly();
  for (int d = 1; d <= table.max_deg && 2 * d <= rem.degree(); ++d) {
    for (const auto& P : table.by_degree[static_cast<size_t>(d)]) {
      if (2 * d > rem.degree()) break;
      int mult = 0;
      for (;;) {
        const auto dm = poly_divmod(F, rem, P.as_poly());
        if (!dm.rem.is_zero()) break;
        rem = dm.quot;
        ++mult;
      }
      if (mult > 0) fac.factors.emplace_back(P, mult);
    }
  }
  if (rem.degree() >= 1) fac.factors.emplace_back(MonicPoly::from_poly(rem), 1);

  std::sort(fac.factors.begin(), fac.factors.end(), [&](const auto& a, const auto& b) {
    return canonical_less(F, a.first, b.first);
  });
  return fac;
}

MonicPoly factorization_product(const FieldSpec& F, const Factorization& fac) {
  MonicPoly prod = MonicPoly::one();
  for (const auto& [P, e] : fac.factors) prod = monic_mul(F, prod, monic_pow(F, P, e));
  return prod;
}

std::vector<MonicPoly> divisors(const FieldSpec& F, const Factorization& fac) {
  std::vector<MonicPoly> out{MonicPoly::one()};
  for (const auto& [P, e] : fac.factors) {
    const size_t base = out.size();
    MonicPoly pk = MonicPoly::one();
    for (int k = 1; k <= e; ++k) {
      pk = monic_mul(F, pk, P);
      for (size_t i = 0; i < base; ++i) out.push_back(monic_mul(F, out[i], pk));
    }
  }
  return out;
}

}  // namespace fqt
