#include "fqt/l_function.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fqt/errors.hpp"

namespace fqt {

namespace {

constexpr double kTrimEps = 1e-9;

Complex horner(const std::vector<Complex>& c, Complex u) {
  Complex v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * u + c[i];
  return v;
}

}  // namespace

LPoly l_polynomial(const DirichletChar& chi) {
  if (chi.is_principal())
    throw std::invalid_argument("principal character: use l_principal_check instead");
  const ModulusCtx& ctx = chi.ctx();
  const FieldSpec& F = ctx.field();
  LPoly lp{chi, {}, {}};
  const int deg_q = ctx.modulus().degree();
  for (int n = 0; n < deg_q; ++n) {
    TokenSum sum;
    for_each_monic(F, n, [&](const MonicPoly& f) { sum.add(chi(f)); });
    lp.coeffs.push_back(sum.value());
  }
  while (lp.coeffs.size() > 1 && std::abs(lp.coeffs.back()) < kTrimEps) lp.coeffs.pop_back();
  return lp;
}

PrincipalCheckReport l_principal_check(const ModulusCtx& ctx, int trunc, std::uint64_t enum_budget) {
  if (trunc < ctx.modulus().degree()) throw std::invalid_argument("trunc must be >= deg Q");
  const FieldSpec& F = ctx.field();
  const std::uint64_t q = F.q();

  // right side: integer coefficients of prod_{P|Q}(1 - u^{deg P}) * 1/(1-qu)
  std::vector<BigInt> numer(static_cast<size_t>(trunc + 1), BigInt(0));
  numer[0] = 1;
  for (const auto& P : ctx.prime_factors()) {
    std::vector<BigInt> next(numer.size(), BigInt(0));
    for (int n = 0; n <= trunc; ++n) {
      if (numer[static_cast<size_t>(n)] == 0) continue;
      next[static_cast<size_t>(n)] += numer[static_cast<size_t>(n)];
      if (n + P.degree() <= trunc) next[static_cast<size_t>(n + P.degree())] -= numer[static_cast<size_t>(n)];
    }
    numer = std::move(next);
  }
  std::vector<BigInt> rhs(static_cast<size_t>(trunc + 1), BigInt(0));
  for (int n = 0; n <= trunc; ++n) {
    BigInt s = 0;
    BigInt qpow = 1;
    for (int k = n; k >= 0; --k) {
      s += numer[static_cast<size_t>(k)] * qpow;
      qpow *= q;
    }
    rhs[static_cast<size_t>(n)] = s;
  }

  // left side: inclusion-exclusion over squarefree divisors of rad(Q)
  const auto& primes = ctx.prime_factors();
  PrincipalCheckReport rep;
  rep.trunc = trunc;
  rep.ok = true;
  for (int n = 0; n <= trunc; ++n) {
    BigInt lhs = 0;
    for (std::uint32_t mask = 0; mask < (1u << primes.size()); ++mask) {
      int d = 0, bits = 0;
      for (size_t i = 0; i < primes.size(); ++i)
        if (mask & (1u << i)) {
          d += primes[i].degree();
          ++bits;
        }
      if (d > n) continue;
      const BigInt term = pow_big(BigInt(q), static_cast<unsigned>(n - d));
      lhs += (bits % 2 == 0) ? term : -term;
    }
    if (lhs != rhs[static_cast<size_t>(n)]) {
      rep.ok = false;
      return rep;
    }
  }

  // direct enumeration cross-check where feasible
  std::uint64_t qn = 1;
  for (int n = 0; n <= trunc && qn <= enum_budget; ++n, qn *= q) {
    BigInt count = 0;
    for_each_monic(F, n, [&](const MonicPoly& f) {
      if (ctx.coprime_to_modulus(f)) ++count;
    });
    if (count != rhs[static_cast<size_t>(n)]) {
      rep.ok = false;
      return rep;
    }
    rep.enumerated_up_to = n;
  }
  return rep;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, double rel_tol) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  const int m = static_cast<int>(c.size()) - 1;
  if (m <= 0) return {};

  double max_coeff = 0;
  for (const auto& v : c) max_coeff = std::max(max_coeff, std::abs(v));
  const auto residual_ok = [&](const std::vector<Complex>& roots) {
    for (const auto& r : roots)
      if (std::abs(horner(c, r)) > rel_tol * max_coeff) return false;
    return true;
  };

  // companion matrix of the monic normalization
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) comp(i, m - 1) = -c[static_cast<size_t>(i)] / c[static_cast<size_t>(m)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);

  if (!residual_ok(roots)) {
    // Aberth-Ehrlich refinement from fresh circular starts
    std::vector<Complex> z(static_cast<size_t>(m));
    const double radius = std::pow(std::abs(c[0] / c[static_cast<size_t>(m)]), 1.0 / m);
    for (int i = 0; i < m; ++i) {
      const double theta = 2.0 * M_PI * (i + 0.25) / m + 0.7;
      z[static_cast<size_t>(i)] = radius * Complex(std::cos(theta), std::sin(theta));
    }
    std::vector<Complex> dc(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) dc[static_cast<size_t>(i - 1)] = static_cast<double>(i) * c[static_cast<size_t>(i)];
    for (int iter = 0; iter < 200; ++iter) {
      double moved = 0;
      for (int i = 0; i < m; ++i) {
        const Complex pv = horner(c, z[static_cast<size_t>(i)]);
        const Complex dv = horner(dc, z[static_cast<size_t>(i)]);
        if (dv == Complex(0)) continue;
        const Complex newton = pv / dv;
        Complex repel = 0;
        for (int j = 0; j < m; ++j)
          if (j != i) repel += 1.0 / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
        const Complex step = newton / (1.0 - newton * repel);
        z[static_cast<size_t>(i)] -= step;
        moved = std::max(moved, std::abs(step));
      }
      if (moved < 1e-14 * (1.0 + radius)) break;
    }
    roots = z;
    if (!residual_ok(roots))
      throw internal_error("polynomial root finding failed the residual check");
  }
  return roots;
}

std::vector<GrhRoot> grh_certify(LPoly& lp, double tol) {
  const double sqrt_q = std::sqrt(static_cast<double>(lp.chi.ctx().field().q()));
  const auto roots = polynomial_roots(lp.coeffs, tol);
  std::vector<GrhRoot> out;
  for (const auto& u : roots) {
    const Complex alpha = 1.0 / u;
    const double mod = std::abs(alpha);
    const double dev_unit = std::abs(mod - 1.0);
    const double dev_sqrt = std::abs(mod - sqrt_q);
    GrhRoot r;
    r.alpha = alpha;
    if (dev_unit <= dev_sqrt) {
      r.cls = 'u';
      r.deviation = dev_unit;
    } else {
      r.cls = 's';
      r.deviation = dev_sqrt;
    }
    if (r.deviation > tol)
      throw internal_error("GRH band violation: |alpha| = " + std::to_string(mod));
    out.push_back(r);
  }
  lp.inverse_roots = out;
  return out;
}

LSeriesEngine::LSeriesEngine(const ModulusCtx& ctx) : ctx_(&ctx), chars_(characters(ctx)) {
  lpolys_.resize(chars_.size());
  prime_sums_.resize(chars_.size());
  for (size_t i = 0; i < chars_.size(); ++i) {
    if (!chars_[i].is_principal()) lpolys_[i] = l_polynomial(chars_[i]);
    prime_sums_[i].assign(1, Complex(0));  // m = 0 slot unused
  }
}

const LPoly& LSeriesEngine::l_poly(int idx) const {
  const auto& slot = lpolys_[static_cast<size_t>(idx)];
  if (!slot) throw std::invalid_argument("principal character has no L-polynomial");
  return *slot;
}

void LSeriesEngine::extend_prime_sums(int trunc) {
  if (trunc <= sums_trunc_) return;
  const int k = char_count();

  // T_m(chi): coefficient of u^m in u (log L)'.  Non-principal: series division
  // u L' / L of the exact polynomial.  Principal: q^m - sum_{P|Q, deg P | m} deg P.
  std::vector<std::vector<Complex>> t_coeffs(static_cast<size_t>(k));
  for (int idx = 0; idx < k; ++idx) {
    auto& t = t_coeffs[static_cast<size_t>(idx)];
    t.assign(static_cast<size_t>(trunc + 1), Complex(0));
    if (is_principal(idx)) {
      double qm = 1;
      for (int m = 1; m <= trunc; ++m) {
        qm *= static_cast<double>(ctx_->field().q());
        double drop = 0;
        for (const auto& P : ctx_->prime_factors())
          if (m % P.degree() == 0) drop += P.degree();
        t[static_cast<size_t>(m)] = qm - drop;
      }
    } else {
      const auto& c = lpolys_[static_cast<size_t>(idx)]->coeffs;
      ComplexSeries lser = series_const(0, trunc);
      for (size_t i = 0; i < c.size() && static_cast<int>(i) <= trunc; ++i) lser.c[i] = c[i];
      ComplexSeries num = series_const(0, trunc);  // u L'(u)
      for (size_t i = 1; i < c.size() && static_cast<int>(i) <= trunc; ++i)
        num.c[i] = static_cast<double>(i) * c[i];
      const ComplexSeries ratio = series_mul(num, series_inverse(lser));
      for (int m = 0; m <= trunc; ++m) t[static_cast<size_t>(m)] = ratio.coeff(m);
    }
  }

  // m S_m(chi) = T_m(chi) - sum_{d | m, d < m} d S_d(chi^{m/d})
  for (int idx = 0; idx < k; ++idx) prime_sums_[static_cast<size_t>(idx)].resize(static_cast<size_t>(trunc + 1), Complex(0));
  for (int m = 1; m <= trunc; ++m) {
    for (int idx = 0; idx < k; ++idx) {
      if (m <= sums_trunc_) continue;  // already computed
      Complex s = t_coeffs[static_cast<size_t>(idx)][static_cast<size_t>(m)];
      for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        const int pow_idx = static_cast<int>(chars_[static_cast<size_t>(idx)].power(m / d).index());
        s -= static_cast<double>(d) * prime_sums_[static_cast<size_t>(pow_idx)][static_cast<size_t>(d)];
      }
      prime_sums_[static_cast<size_t>(idx)][static_cast<size_t>(m)] = s / static_cast<double>(m);
    }
  }
  sums_trunc_ = trunc;
}

Complex LSeriesEngine::prime_char_sum(int m, int idx) {
  if (m < 1) throw std::invalid_argument("prime sums start at degree 1");
  extend_prime_sums(m);
  return prime_sums_[static_cast<size_t>(idx)][static_cast<size_t>(m)];
}

ComplexSeries LSeriesEngine::weighted_series(int idx, Complex y, int trunc) {
  extend_prime_sums(trunc);
  ComplexSeries logser = series_const(0, trunc);
  for (int d = 1; d <= trunc; ++d) {
    Complex yk = 1;
    for (int kk = 1; d * kk <= trunc; ++kk) {
      yk *= y;
      const int pow_idx = static_cast<int>(chars_[static_cast<size_t>(idx)].power(kk).index());
      logser.c[static_cast<size_t>(d * kk)] +=
          yk / static_cast<double>(kk) * prime_sums_[static_cast<size_t>(pow_idx)][static_cast<size_t>(d)];
    }
  }
  return series_exp(logser);
}

ComplexSeries LSeriesEngine::weighted_series(const DirichletChar& chi, Complex y, int trunc) {
  return weighted_series(static_cast<int>(chi.index()), y, trunc);
}

ComplexSeries LSeriesEngine::nonprincipal_pair_sum(Complex y, int trunc) {
  ComplexSeries sum = series_const(0, trunc);
  for (int idx = 0; idx < char_count(); ++idx) {
    if (is_principal(idx)) continue;
    const ComplexSeries a = weighted_series(idx, y, trunc);
    const int conj_idx = static_cast<int>(chars_[static_cast<size_t>(idx)].conjugate().index());
    const ComplexSeries b = weighted_series(conj_idx, y, trunc);
    sum = series_add(sum, series_mul(a, b));
  }
  return sum;
}

ComplexSeries l_weighted_series(const DirichletChar& chi, Complex y, int trunc) {
  LSeriesEngine engine(chi.ctx());
  return engine.weighted_series(chi, y, trunc);
}

SpecialValues l_special_values(LSeriesEngine& engine, int idx, Complex y, int trunc) {
  if (engine.is_principal(idx))
    throw std::invalid_argument("special values require a non-principal character");
  const double q = static_cast<double>(engine.ctx().field().q());
  const Complex u0 = Complex(1.0 / q, 0.0);

  Complex L1, Lprime;
  double tail = 0;
  if (y == Complex(1.0, 0.0)) {
    const auto& c = engine.l_poly(idx).coeffs;
    L1 = horner(c, u0);
    std::vector<Complex> dc;
    for (size_t i = 1; i < c.size(); ++i) dc.push_back(static_cast<double>(i) * c[i]);
    Lprime = horner(dc, u0);
  } else {
    const ComplexSeries s = engine.weighted_series(idx, y, trunc);
    const TailEval v = eval_with_tail(s, u0);
    const TailEval d = eval_with_tail(series_derivative(s), u0);
    L1 = v.value;
    Lprime = d.value;
    tail = std::max(v.tail_bound, d.tail_bound);
  }
  if (std::abs(L1) < 1e-12)
    throw std::domain_error("L(1,chi) vanishes within tolerance; log-derivative undefined");

  SpecialValues out;
  out.L_at_1 = L1;
  out.logderiv_at_1 = -(std::log(q) / q) * Lprime / L1;
  out.tail = tail;
  return out;
}

}  // namespace fqt
