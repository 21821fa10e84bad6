#pragma once

#include <cstdint>
#include <vector>

#include "fqt/bigint.hpp"
#include "fqt/poly.hpp"

namespace fqt {

// Irreducible decomposition, factors sorted canonically (degree, then index).
struct Factorization {
  std::vector<std::pair<MonicPoly, int>> factors;  // (irreducible, multiplicity >= 1)

  int omega() const {
    int t = 0;
    for (const auto& [p, e] : factors) t += e;
    return t;
  }
};

// Monic irreducibles of every degree d <= max_deg, built by sieve and
// cross-checked against the Moebius-inversion census (mismatch throws
// internal_error).  Shared read-only once built.
struct IrreducibleTable {
  FieldSpec field;
  int max_deg = 0;
  std::vector<std::vector<MonicPoly>> by_degree;  // [d] sorted canonically; [0] empty
  std::vector<long long> counts;                  // counts[d] = pi(d); counts[0] = 0

  long long count_at(int d) const { return counts[static_cast<size_t>(d)]; }
};

// pi(n) = N_1(n) = (1/n) sum_{d|n} mu(d) q^{n/d}, exact.
BigInt mobius_irreducible_count(std::uint64_t q, int n);
// pi(d) for d = 0..n_max as exact integers (index 0 unused = 0).
std::vector<BigInt> irreducible_counts(std::uint64_t q, int n_max);

IrreducibleTable build_irreducible_table(const FieldSpec& F, int max_deg,
                                         std::uint64_t memory_budget = (1ull << 22));

bool is_irreducible(const FieldSpec& F, const MonicPoly& g, const IrreducibleTable& table);

// Trial division against the table.  Requires deg g <= 2 * table.max_deg.
Factorization factorize(const FieldSpec& F, const MonicPoly& g, const IrreducibleTable& table);

MonicPoly factorization_product(const FieldSpec& F, const Factorization& fac);

// All prod(e_i + 1) monic divisors, each exactly once (includes 1 and f).
std::vector<MonicPoly> divisors(const FieldSpec& F, const Factorization& fac);

}  // namespace fqt
