#include "fqt/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fqt {

ComplexSeries series_const(Complex value, int trunc) {
  ComplexSeries s;
  s.trunc_deg = trunc;
  s.c.assign(static_cast<size_t>(trunc + 1), Complex(0));
  s.c[0] = value;
  return s;
}

ComplexSeries series_add(const ComplexSeries& a, const ComplexSeries& b) {
  ComplexSeries r = series_const(0, std::min(a.trunc_deg, b.trunc_deg));
  for (int n = 0; n <= r.trunc_deg; ++n) r.c[static_cast<size_t>(n)] = a.coeff(n) + b.coeff(n);
  return r;
}

ComplexSeries series_sub(const ComplexSeries& a, const ComplexSeries& b) {
  ComplexSeries r = series_const(0, std::min(a.trunc_deg, b.trunc_deg));
  for (int n = 0; n <= r.trunc_deg; ++n) r.c[static_cast<size_t>(n)] = a.coeff(n) - b.coeff(n);
  return r;
}

ComplexSeries series_mul(const ComplexSeries& a, const ComplexSeries& b) {
  ComplexSeries r = series_const(0, std::min(a.trunc_deg, b.trunc_deg));
  for (int i = 0; i <= r.trunc_deg; ++i) {
    const Complex ai = a.coeff(i);
    if (ai == Complex(0)) continue;
    for (int j = 0; i + j <= r.trunc_deg; ++j) r.c[static_cast<size_t>(i + j)] += ai * b.coeff(j);
  }
  return r;
}

ComplexSeries series_scale(Complex s, const ComplexSeries& a) {
  ComplexSeries r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

ComplexSeries series_inverse(const ComplexSeries& a) {
  if (a.coeff(0) == Complex(0)) throw std::domain_error("series inversion requires nonzero constant term");
  ComplexSeries r = series_const(0, a.trunc_deg);
  const Complex inv0 = 1.0 / a.coeff(0);
  r.c[0] = inv0;
  for (int n = 1; n <= r.trunc_deg; ++n) {
    Complex s = 0;
    for (int k = 1; k <= n; ++k) s += a.coeff(k) * r.c[static_cast<size_t>(n - k)];
    r.c[static_cast<size_t>(n)] = -inv0 * s;
  }
  return r;
}

ComplexSeries series_log(const ComplexSeries& a) {
  if (a.coeff(0) != Complex(1)) throw std::domain_error("series log requires constant term 1");
  // n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}
  ComplexSeries r = series_const(0, a.trunc_deg);
  for (int n = 1; n <= r.trunc_deg; ++n) {
    Complex s = static_cast<double>(n) * a.coeff(n);
    for (int k = 1; k < n; ++k) s -= static_cast<double>(k) * r.c[static_cast<size_t>(k)] * a.coeff(n - k);
    r.c[static_cast<size_t>(n)] = s / static_cast<double>(n);
  }
  return r;
}

ComplexSeries series_exp(const ComplexSeries& a) {
  if (a.coeff(0) != Complex(0)) throw std::domain_error("series exp requires constant term 0");
  // n E_n = sum_{k=1}^{n} k a_k E_{n-k}
  ComplexSeries r = series_const(1, a.trunc_deg);
  for (int n = 1; n <= r.trunc_deg; ++n) {
    Complex s = 0;
    for (int k = 1; k <= n; ++k) s += static_cast<double>(k) * a.coeff(k) * r.c[static_cast<size_t>(n - k)];
    r.c[static_cast<size_t>(n)] = s / static_cast<double>(n);
  }
  return r;
}

ComplexSeries series_derivative(const ComplexSeries& a) {
  ComplexSeries r = series_const(0, std::max(0, a.trunc_deg - 1));
  for (int n = 1; n <= a.trunc_deg; ++n) r.c[static_cast<size_t>(n - 1)] = static_cast<double>(n) * a.coeff(n);
  return r;
}

ComplexSeries series_scale_var(const ComplexSeries& a, Complex s) {
  ComplexSeries r = a;
  Complex sn = 1;
  for (int n = 0; n <= r.trunc_deg; ++n) {
    r.c[static_cast<size_t>(n)] *= sn;
    sn *= s;
  }
  return r;
}

ComplexSeries series_substitute_u2(const ComplexSeries& a) {
  ComplexSeries r = series_const(0, 2 * a.trunc_deg + 1);
  for (int n = 0; n <= a.trunc_deg; ++n) r.c[static_cast<size_t>(2 * n)] = a.coeff(n);
  return r;
}

Complex series_eval(const ComplexSeries& a, Complex u0) {
  Complex v = 0;
  for (int n = a.trunc_deg; n >= 0; --n) v = v * u0 + a.coeff(n);
  return v;
}

ComplexSeries binomial_series(Complex y, std::uint64_t q, int trunc) {
  if (trunc < 0) throw std::invalid_argument("truncation must be >= 0");
  ComplexSeries r = series_const(1, trunc);
  const double qd = static_cast<double>(q);
  Complex cur = 1;
  for (int n = 1; n <= trunc; ++n) {
    cur *= (y + static_cast<double>(n - 1)) * qd / static_cast<double>(n);
    r.c[static_cast<size_t>(n)] = cur;
  }
  return r;
}

ComplexSeries zeta_series(const OmegaCountTable& tbl, Complex y, int trunc) {
  if (trunc > tbl.n_max) throw std::invalid_argument("truncation exceeds the Omega table range");
  ComplexSeries r = series_const(0, trunc);
  for (int n = 0; n <= trunc; ++n) r.c[static_cast<size_t>(n)] = weighted_sum(tbl, n, y);
  return r;
}

ComplexSeries n_series(const OmegaCountTable& tbl, Complex y, int trunc) {
  return series_mul(zeta_series(tbl, y, trunc), binomial_series(-y, tbl.q, trunc));
}

TailEval eval_with_tail(const ComplexSeries& s, Complex u0, double decay) {
  if (decay >= 1.0 || decay < 0.0) throw std::invalid_argument("decay must lie in [0, 1)");
  TailEval out;
  Complex last_term = 0;
  Complex un = 1;
  for (int n = 0; n <= s.trunc_deg; ++n) {
    const Complex term = s.coeff(n) * un;
    out.value += term;
    if (term != Complex(0)) last_term = term;
    un *= u0;
  }
  out.tail_bound = std::abs(last_term) * decay / (1.0 - decay);
  return out;
}

TailEval eval_with_tail(const ComplexSeries& s, Complex u0) {
  // measured decay: ratio of the magnitudes of the last two nonzero terms
  double prev = 0, last = 0;
  Complex un = 1;
  for (int n = 0; n <= s.trunc_deg; ++n) {
    const double m = std::abs(s.coeff(n) * un);
    if (m > 0) {
      prev = last;
      last = m;
    }
    un *= u0;
  }
  double decay = (prev > 0 && last > 0) ? last / prev : 0.0;
  decay = std::clamp(decay, 0.0, 0.9);
  return eval_with_tail(s, u0, decay);
}

Complex n_euler_product(std::span<const double> pi_counts, Complex y, Complex u0, int D) {
  if (D >= static_cast<int>(pi_counts.size()))
    throw std::invalid_argument("need pi(d) for every d <= D");
  Complex log_sum = 0;
  Complex ud = 1;
  for (int d = 1; d <= D; ++d) {
    ud *= u0;
    log_sum += pi_counts[static_cast<size_t>(d)] * (y * std::log(1.0 - ud) - std::log(1.0 - y * ud));
  }
  return std::exp(log_sum);
}

}  // namespace fqt
