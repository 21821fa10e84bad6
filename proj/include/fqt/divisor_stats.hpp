#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fqt/l_function.hpp"

namespace fqt {

// sigma_a(f,chi) = sum over monic divisors d of chi(d) |d|^a.
// Exact token sum for a = 0; complex in general.
TokenSum sigma0_chi_tokens(const FieldSpec& F, const Factorization& fac, const DirichletChar& chi);
Complex sigma_a_chi(const FieldSpec& F, const Factorization& fac, const DirichletChar& chi, int a);

// tau(f; h, Q) per reduced residue class h, and tau(f; Q) over divisors
// coprime to Q.  Divisors sharing a factor with Q belong to no class.
struct DivisorProfile {
  std::map<std::uint64_t, long long> per_class;  // unit residue code -> count
  long long tau_coprime = 0;
};
DivisorProfile divisor_profile(const FieldSpec& F, const Factorization& fac, const ModulusCtx& ctx);

// V[tau(f;.,Q)] = (1/Phi) sum_h (tau(f;h,Q) - tau(f;Q)/Phi)^2, exact rationals,
// together with the character-sum path (1/Phi^2) sum_{chi != chi0}
// sigma_0(f,chi) sigma_0(f,conj chi); the two must agree.
struct VarianceRecord {
  BigRat variance_direct = 0;
  Complex variance_character = 0;
  double agreement = 0;  // |direct - character|
};
BigRat variance_direct_of_profile(const ModulusCtx& ctx, const DivisorProfile& prof);
VarianceRecord variance(const FieldSpec& F, const Factorization& fac, const ModulusCtx& ctx,
                        const std::vector<DirichletChar>& chars, double tol = 1e-9);

// sum over A_n of the exact variance.
BigRat sum_variance_exact(const FieldSpec& F, int n, const ModulusCtx& ctx,
                          const IrreducibleTable& table, std::uint64_t budget = (1ull << 22));
// Same weighted by y^{Omega(f)}, exact when y is rational.
BigRat sum_weighted_variance_exact(const FieldSpec& F, int n, const ModulusCtx& ctx,
                                   const IrreducibleTable& table, const BigRat& y,
                                   std::uint64_t budget = (1ull << 22));
Complex sum_weighted_variance_enum(const FieldSpec& F, int n, const ModulusCtx& ctx,
                                   const IrreducibleTable& table, Complex y,
                                   std::uint64_t budget = (1ull << 22));

// Generating function of sum_{f in A_n} y^{Omega(f)} V[tau(f;.,Q)]:
//   (1/Phi^2) ghat_Q(u) zeta(u,y)^2 / zeta(u^2,y^2) sum_{chi != chi0} L(u,chi,y) L(u,conj chi,y)
// with ghat_Q(u) = prod_{P|Q} (1 + y u^{deg P})^{-1}.
ComplexSeries weighted_variance_series(const ModulusCtx& ctx, LSeriesEngine& engine,
                                       const OmegaCountTable& tbl, Complex y, int trunc);

// Coefficient-by-coefficient comparison of the brute sum
// sum_{f in A_n} y^{Omega(f)} sigma_a(f,chi1) sigma_b(f,chi2) against
// zeta(u,y) L(q^a u,chi1,y) L(q^b u,chi2,y) L(q^{a+b} u,chi1 chi2,y)
//   / L(q^{a+b} u^2, chi1 chi2, y^2).
struct IdentityCheck {
  int n_check = 0;
  std::vector<Complex> brute, series;
  double max_scaled_err = 0;  // max_n |diff_n| / q^n
  bool ok = false;
};
IdentityCheck general_sigma_identity_check(int a, int b, const DirichletChar& chi1,
                                           const DirichletChar& chi2, Complex y, int n_check,
                                           const IrreducibleTable& table, LSeriesEngine& engine,
                                           const OmegaCountTable& tbl, double tol);

// sum_{v>=0} u^v (sum_{j<=v} p^j)(sum_{j<=v} r^j) = (1-pru^2)/((1-upr)(1-up)(1-ur)(1-u)),
// truncated at v_max with a geometric tail bound.
struct HallIdentity {
  Complex lhs, rhs;
  double diff = 0;
  double tail = 0;
};
HallIdentity hall_rational_identity(Complex u, Complex p, Complex r, int v_max);

}  // namespace fqt
