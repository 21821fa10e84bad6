#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fqt/character.hpp"
#include "fqt/series.hpp"

namespace fqt {

struct GrhRoot {
  Complex alpha;     // inverse root 1/u_j
  char cls = 'u';    // 'u': |alpha| ~ 1, 's': |alpha| ~ sqrt(q)
  double deviation = 0.0;  // | |alpha| - band |
};

// L(u,chi) = sum_f chi(f) u^{deg f}; a polynomial of degree <= deg(Q) - 1 for
// non-principal chi.  Coefficients come from exact token sums over A_n.
struct LPoly {
  DirichletChar chi;
  std::vector<Complex> coeffs;  // trailing (near-)zero coefficients trimmed
  std::vector<GrhRoot> inverse_roots;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

LPoly l_polynomial(const DirichletChar& chi);  // requires non-principal

// Verifies coefficient-by-coefficient, in exact integer arithmetic, that
// #{f in A_n : gcd(f,Q)=1} equals [u^n] prod_{P|Q}(1-u^{deg P}) / (1-qu),
// for all n <= trunc.  Counts come from inclusion-exclusion over the
// squarefree divisors of rad(Q); degrees within enum_budget are additionally
// cross-checked by direct enumeration.
struct PrincipalCheckReport {
  bool ok = false;
  int trunc = 0;
  int enumerated_up_to = -1;
};
PrincipalCheckReport l_principal_check(const ModulusCtx& ctx, int trunc,
                                       std::uint64_t enum_budget = (1u << 14));

// Finds all roots (companion-matrix eigenvalues, Aberth fallback) and asserts
// every inverse root lies within tol of modulus 1 or sqrt(q).  A violation
// throws internal_error (the Weil bound is a theorem here).
std::vector<GrhRoot> grh_certify(LPoly& lp, double tol);

// Roots of a complex polynomial (ascending coefficients); used by grh_certify.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, double rel_tol);

// Shared L-function machinery for one modulus: all characters, their
// L-polynomials, and the prime character sums S_m(chi) = sum_{deg P = m} chi(P)
// recovered exactly from the L-polynomial family via the log-derivative
// recursion m S_m(chi) = T_m(chi) - sum_{d | m, d < m} d S_d(chi^{m/d}).
// This reaches truncation degrees far beyond any feasible irreducible list.
class LSeriesEngine {
 public:
  explicit LSeriesEngine(const ModulusCtx& ctx);

  const ModulusCtx& ctx() const { return *ctx_; }
  int char_count() const { return static_cast<int>(chars_.size()); }
  const DirichletChar& character(int idx) const { return chars_[static_cast<size_t>(idx)]; }
  const std::vector<DirichletChar>& all_characters() const { return chars_; }
  bool is_principal(int idx) const { return chars_[static_cast<size_t>(idx)].is_principal(); }
  const LPoly& l_poly(int idx) const;  // non-principal slots only

  Complex prime_char_sum(int m, int idx);

  // L(u,chi,y) as a truncated series: exp of sum_{dk<=trunc} (y^k/k) S_d(chi^k) u^{dk}.
  ComplexSeries weighted_series(int idx, Complex y, int trunc);
  ComplexSeries weighted_series(const DirichletChar& chi, Complex y, int trunc);

  // sum over non-principal chi of L(u,chi,y) L(u,conj chi,y).
  ComplexSeries nonprincipal_pair_sum(Complex y, int trunc);

 private:
  void extend_prime_sums(int trunc);

  const ModulusCtx* ctx_;
  std::vector<DirichletChar> chars_;
  std::vector<std::optional<LPoly>> lpolys_;          // empty at the principal index
  std::vector<std::vector<Complex>> prime_sums_;      // [idx][m], m <= sums_trunc_
  int sums_trunc_ = 0;
};

// One-shot form of LSeriesEngine::weighted_series; loops should hold an engine.
ComplexSeries l_weighted_series(const DirichletChar& chi, Complex y, int trunc);

// L(1,chi) = L(1/q, chi, y) and the s-log-derivative at s = 1:
// logderiv = -(log q / q) L'(1/q) / L(1/q).  Exact polynomial evaluation when
// y = 1; truncated series with a tail bound otherwise.
struct SpecialValues {
  Complex L_at_1;
  Complex logderiv_at_1;
  double tail = 0.0;
};
SpecialValues l_special_values(LSeriesEngine& engine, int idx, Complex y, int trunc);

}  // namespace fqt
