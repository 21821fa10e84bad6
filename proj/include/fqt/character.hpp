#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fqt/bigint.hpp"
#include "fqt/unit_group.hpp"

namespace fqt {

// Exact character value: either 0 or e^{2 pi i num/den} with the exponent
// carried as a reduced rational mod 1.
struct RootToken {
  bool zero = true;
  long long num = 0;  // 0 <= num < den when !zero
  long long den = 1;

  static RootToken zero_token() { return {}; }
  static RootToken one_token() { return {false, 0, 1}; }
  static RootToken from_exponent(long long num, long long den);

  bool is_one() const { return !zero && num == 0; }
  friend bool operator==(const RootToken& a, const RootToken& b) {
    if (a.zero != b.zero) return false;
    if (a.zero) return true;
    return a.num == b.num && a.den == b.den;
  }
};

RootToken token_mul(const RootToken& a, const RootToken& b);
RootToken token_conj(const RootToken& a);
RootToken token_pow(const RootToken& a, long long k);
Complex token_value(const RootToken& a);

// Dirichlet character mod Q given by an exponent vector against the unit-group
// generators: chi(g_i) = e^{2 pi i a_i / e_i}; zero off the units.
class DirichletChar {
 public:
  DirichletChar(const ModulusCtx* ctx, std::vector<int> expo);

  const ModulusCtx& ctx() const { return *ctx_; }
  const std::vector<int>& exponents() const { return expo_; }
  bool is_principal() const;

  RootToken eval_unit(std::uint64_t unit_code) const;
  RootToken operator()(const MonicPoly& f) const;  // zero token when gcd(f,Q) != 1

  DirichletChar conjugate() const;
  DirichletChar power(long long k) const;
  DirichletChar operator*(const DirichletChar& other) const;

  // Mixed-radix position in the canonical character enumeration.
  long long index() const;

  friend bool operator==(const DirichletChar& a, const DirichletChar& b) {
    return a.ctx_ == b.ctx_ && a.expo_ == b.expo_;
  }

 private:
  const ModulusCtx* ctx_;
  std::vector<int> expo_;
};

// All Phi(Q) characters; the principal character comes first.
std::vector<DirichletChar> characters(const ModulusCtx& ctx);

// Exact finite sum of rational multiples of roots of unity, keyed by reduced
// exponent.  Used where the spec wants token arithmetic instead of floats.
class TokenSum {
 public:
  void add(const RootToken& t, const BigRat& coeff = BigRat(1));
  TokenSum operator*(const TokenSum& other) const;
  TokenSum conj() const;
  Complex value() const;
  bool is_empty() const { return terms_.empty(); }

 private:
  std::map<std::pair<long long, long long>, BigRat> terms_;  // (num, den) -> coeff
};

}  // namespace fqt
