#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fqt/bigint.hpp"
#include "fqt/omega_table.hpp"

namespace fqt {

// Truncated power series in u with complex coefficients.  Arithmetic never
// reads beyond trunc_deg; a binary operation carries the minimum trunc_deg of
// its inputs.
struct ComplexSeries {
  std::vector<Complex> c;  // c[n] = coefficient of u^n, size trunc_deg + 1
  int trunc_deg = 0;

  Complex coeff(int n) const {
    return (n >= 0 && n <= trunc_deg) ? c[static_cast<size_t>(n)] : Complex(0);
  }
};

ComplexSeries series_const(Complex value, int trunc);
ComplexSeries series_add(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries series_sub(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries series_mul(const ComplexSeries& a, const ComplexSeries& b);
ComplexSeries series_scale(Complex s, const ComplexSeries& a);
// 1/a; requires a nonzero constant term.
ComplexSeries series_inverse(const ComplexSeries& a);
// log a; requires constant term 1.
ComplexSeries series_log(const ComplexSeries& a);
// exp a; requires constant term 0.
ComplexSeries series_exp(const ComplexSeries& a);
// d/du.
ComplexSeries series_derivative(const ComplexSeries& a);
// u -> s*u (coefficient n scaled by s^n).
ComplexSeries series_scale_var(const ComplexSeries& a, Complex s);
// u -> u^2 (trunc doubles: coefficients are known through 2*trunc+1).
ComplexSeries series_substitute_u2(const ComplexSeries& a);
Complex series_eval(const ComplexSeries& a, Complex u0);

// (1 - qu)^{-y}: coefficient of u^n is binom(y+n-1, n) q^n via the rising
// factorial.  (1 - qu)^{+y} is obtained by negating y.
ComplexSeries binomial_series(Complex y, std::uint64_t q, int trunc);

// zeta(u,y) = sum_n (sum_t N_t(n) y^t) u^n from the exact table.
ComplexSeries zeta_series(const OmegaCountTable& tbl, Complex y, int trunc);

// N(u,y) = zeta(u,y) (1-qu)^y, the correction factor; constant term 1.
ComplexSeries n_series(const OmegaCountTable& tbl, Complex y, int trunc);

struct TailEval {
  Complex value = 0;
  double tail_bound = 0;
};

// value = sum c[n] u0^n; tail_bound = |last term| * decay / (1 - decay) where
// decay is the asserted geometric ratio of successive terms beyond trunc_deg.
TailEval eval_with_tail(const ComplexSeries& s, Complex u0, double decay);
// Same, with decay measured from the last two nonzero terms, clamped to 0.9.
TailEval eval_with_tail(const ComplexSeries& s, Complex u0);

// Direct Euler product for N(u,y) truncated at degree D:
// prod_{d<=D} [(1-u^d)^y (1-y u^d)^{-1}]^{pi(d)}, principal logs.
Complex n_euler_product(std::span<const double> pi_counts, Complex y, Complex u0, int D);

}  // namespace fqt
