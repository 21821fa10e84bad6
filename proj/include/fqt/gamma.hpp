#pragma once

#include "fqt/bigint.hpp"

namespace fqt {

struct GammaConfig {
  double quadrature_step = 0.05;    // DE step for the direct Beta integral
  double tail_cutoff = 1e-14;       // stop summing unit-interval pieces below this
  double lanczos_check_tol = 1e-9;  // Stirling-vs-Lanczos cross-check
};

// log Gamma via the complex Stirling formula: (s-1/2) log s - s + (1/2) log 2pi
// - int_0^inf B1(t)/(s+t) dt, the integral summed analytically per unit
// interval with an asymptotic tail.  Requires s off (-inf, 0].
Complex log_gamma_stirling(Complex s, const GammaConfig& cfg = {});

// Independent Lanczos evaluation (g = 7, 9 terms), reflection for Re s < 1/2.
Complex log_gamma_lanczos(Complex s);

// Stirling value, cross-checked against Lanczos within cfg.lanczos_check_tol
// (internal_error on disagreement).
Complex log_gamma(Complex s, const GammaConfig& cfg = {});

// 1/Gamma(y): exp(-log Gamma) for Re y >= 1/2, reflection sin(pi y) Gamma(1-y)/pi
// otherwise (entire; equals 0 at y = 0, -1, -2, ...).
Complex inv_gamma(Complex y, const GammaConfig& cfg = {});

// B(x,y) = Gamma(x) Gamma(y) / Gamma(x+y), Re x, Re y > 0.
Complex beta(Complex x, Complex y, const GammaConfig& cfg = {});

// int_0^1 t^{x-1} (1-t)^{y-1} dt by double-exponential quadrature; the
// independent oracle for the Beta/Gamma identity.
double beta_direct_quadrature(double x, double y, const GammaConfig& cfg = {});

// int_k^{k+1} B1(t)/(x+t) dt, B1 the 1-periodic sawtooth t - floor(t) - 1/2;
// analytic via the atanh series in w = 1/(x+k+1/2).
Complex b1_piece(Complex x, int k);
// int_K^inf B1(t)/(x+t) dt = -mu(x+K), mu the Stirling asymptotic series.
Complex b1_tail(Complex x_plus_K);

}  // namespace fqt
