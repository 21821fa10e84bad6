#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqt/divisor_stats.hpp"
#include "fqt/gamma.hpp"

namespace fqt {

// kappa(y, n) = exp(-(1-y) int_0^inf B1(t) dt / ((n-1+y+t)(n+t))).  The paper
// writes kappa(y), but the defining integral contains n; the dependence is
// explicit here.
Complex kappa(Complex y, long long n, const GammaConfig& cfg = {});

struct AsymptoticReport {
  std::string theorem;
  long long n = 0;
  Complex exact_value = 0;
  Complex main_term = 0;
  double relative_deviation = 0;  // |exact - main| / |main| when main != 0
  std::optional<double> error_exponent_estimate;
};

// Gamma(n-1+y)/Gamma(n) vs kappa(y,n)/n^{1-y}; error_exponent_estimate carries
// the scaled error |exact - predicted| n^{2-Re y}, which should stay bounded.
AsymptoticReport gamma_ratio_check(long long n, Complex y, const GammaConfig& cfg = {});

struct ValueWithTail {
  Complex value = 0;
  double tail = 0;
};

// prod_{d<=D} [(1 - q^{-d})^y (1 - y q^{-d})^{-1}]^{pi(d)} with a geometric
// tail extrapolated from the last log increment.  Equals N(1/q, y).
ValueWithTail euler_constant_C(Complex y, std::span<const double> pi_counts, std::uint64_t q, int D);

// Taylor coefficients A_r of G(y) = kappa(y,n) C(y) / Gamma(y), extracted by a
// discrete Cauchy integral on |y| = ring_radius with M samples.  n_ref <= 0
// selects the kappa == 1 (large-n) convention.
std::vector<Complex> coeffs_A(std::span<const double> pi_counts, std::uint64_t q, int D,
                              long long n_ref, int r_max, double ring_radius, int M,
                              const GammaConfig& cfg = {});

// Main term of the y-weighted count over A_n: C(y) kappa(y,n) q^n / (Gamma(y) n^{1-y}).
Complex main_term_count(Complex y, long long n, Complex C_y, std::uint64_t q,
                        const GammaConfig& cfg = {});
// Residue-class variant as displayed: extra (1/Phi) prod_{P|Q} (1 - 1/|P|)^{-1}.
Complex main_term_residue(Complex y, long long n, Complex C_y, const ModulusCtx& ctx,
                          const GammaConfig& cfg = {});

// H_1(1/q, y): ghat_Q(1/q) (1 - 1/q)^{y^2} N(1/q,y)^2
//            / (Phi^2 N(1/q^2, y^2)) * sum_{chi != chi0} L L-bar at 1/q.
ValueWithTail h1_value(const ModulusCtx& ctx, LSeriesEngine& engine, const OmegaCountTable& tbl,
                       Complex y, int trunc);

// Main term of sum_f y^Omega V[tau]: H_1(1/q,y) kappa(2y,n) q^n / (Gamma(2y) n^{1-2y}),
// for Re y < 1/2.  At y = 1/2 the residue collapses to H_1(1/q,1/2) q^n.
Complex main_term_variance(Complex y, long long n, const ValueWithTail& h1, std::uint64_t q,
                           const GammaConfig& cfg = {});
Complex main_term_variance_half(long long n, const ValueWithTail& h1_at_half, std::uint64_t q);

// Theorem constants for sum over A_n of V[tau] ~ (A_Q (n+1) + B_Q) q^{n+1}.
// b_displayed follows the displayed formula; b_derived carries sum |L(1,chi)|^2
// on all residue terms (the two differ unless that sum is 1).
struct VarianceConstants {
  double a_q = 0;
  double b_displayed = 0;
  double b_derived = 0;
  double sum_l2 = 0;  // sum_{chi != chi0} |L(1,chi)|^2
};
VarianceConstants constants_AQ_BQ(const ModulusCtx& ctx, LSeriesEngine& engine);

// Least-squares fit of exact sums v_n ~ (A (n+1) + B) q^{n+1}.
struct LinearFit {
  double a = 0;
  double b = 0;
};
LinearFit fit_variance_constants(std::span<const std::pair<long long, double>> sums, std::uint64_t q);

// A-hat_r: Taylor coefficients of H_1(1/q,y) kappa(2y,n)/Gamma(2y).
std::vector<Complex> coeffs_A_hat(const ModulusCtx& ctx, LSeriesEngine& engine,
                                  const OmegaCountTable& tbl, long long n_ref, int r_max,
                                  double ring_radius, int M, int trunc,
                                  const GammaConfig& cfg = {});

// N_t(n) main term: (q^n / n) sum_{r=1}^{t} A_r log^{t-r}(n) / (t-r)!.
double predicted_count_t(long long n, int t, std::span<const Complex> coeffs_a, std::uint64_t q);
// Residue-class variant: prefactor prod_{P|Q}(1-1/|P|)^{-1} / Phi(Q), as displayed.
double predicted_count_residue(long long n, int t, std::span<const Complex> coeffs_a,
                               const ModulusCtx& ctx);
// Variance-over-A_n(t) variant with 2 log n in place of log n.
double predicted_count_variance(long long n, int t, std::span<const Complex> coeffs_a_hat,
                                std::uint64_t q);

}  // namespace fqt
