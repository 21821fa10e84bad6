#include "fqt/divisor_stats.hpp"

#include <cmath>
#include <stdexcept>

#include "fqt/errors.hpp"

namespace fqt {

TokenSum sigma0_chi_tokens(const FieldSpec& F, const Factorization& fac, const DirichletChar& chi) {
  TokenSum sum;
  for (const auto& d : divisors(F, fac)) sum.add(chi(d));
  return sum;
}

Complex sigma_a_chi(const FieldSpec& F, const Factorization& fac, const DirichletChar& chi, int a) {
  Complex sum = 0;
  const double q = static_cast<double>(F.q());
  for (const auto& d : divisors(F, fac))
    sum += token_value(chi(d)) * std::pow(q, static_cast<double>(a) * d.degree());
  return sum;
}

DivisorProfile divisor_profile(const FieldSpec& F, const Factorization& fac, const ModulusCtx& ctx) {
  DivisorProfile prof;
  for (const auto h : ctx.units()) prof.per_class[h] = 0;
  for (const auto& d : divisors(F, fac)) {
    const auto code = ctx.residue_of(d);
    if (!ctx.is_unit(code)) continue;  // shares a factor with Q: no class
    prof.per_class[code] += 1;
    prof.tau_coprime += 1;
  }
  return prof;
}

BigRat variance_direct_of_profile(const ModulusCtx& ctx, const DivisorProfile& prof) {
  const BigRat phi(ctx.phi());
  const BigRat mean = BigRat(prof.tau_coprime) / phi;
  BigRat acc = 0;
  for (const auto& [h, count] : prof.per_class) {
    const BigRat d = BigRat(count) - mean;
    acc += d * d;
  }
  return acc / phi;
}

VarianceRecord variance(const FieldSpec& F, const Factorization& fac, const ModulusCtx& ctx,
                        const std::vector<DirichletChar>& chars, double tol) {
  VarianceRecord rec;
  rec.variance_direct = variance_direct_of_profile(ctx, divisor_profile(F, fac, ctx));

  Complex acc = 0;
  for (const auto& chi : chars) {
    if (chi.is_principal()) continue;
    const TokenSum s = sigma0_chi_tokens(F, fac, chi);
    acc += s.value() * s.conj().value();
  }
  const double phi = static_cast<double>(ctx.phi());
  rec.variance_character = acc / (phi * phi);
  rec.agreement = std::abs(to_double(rec.variance_direct) - rec.variance_character);
  if (rec.agreement > tol)
    throw internal_error("variance paths disagree beyond tolerance: " + std::to_string(rec.agreement));
  return rec;
}

namespace {

void check_budget(const FieldSpec& F, int n, std::uint64_t budget) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) {
    qn *= F.q();
    if (qn > budget) throw resource_error("enumeration budget exceeded at degree " + std::to_string(n));
  }
}

}  // namespace

BigRat sum_variance_exact(const FieldSpec& F, int n, const ModulusCtx& ctx,
                          const IrreducibleTable& table, std::uint64_t budget) {
  check_budget(F, n, budget);
  BigRat total = 0;
  for_each_monic(F, n, [&](const MonicPoly& f) {
    total += variance_direct_of_profile(ctx, divisor_profile(F, factorize(F, f, table), ctx));
  });
  return total;
}

BigRat sum_weighted_variance_exact(const FieldSpec& F, int n, const ModulusCtx& ctx,
                                   const IrreducibleTable& table, const BigRat& y,
                                   std::uint64_t budget) {
  check_budget(F, n, budget);
  BigRat total = 0;
  for_each_monic(F, n, [&](const MonicPoly& f) {
    const Factorization fac = factorize(F, f, table);
    BigRat yk = 1;
    for (int i = 0; i < fac.omega(); ++i) yk *= y;
    total += yk * variance_direct_of_profile(ctx, divisor_profile(F, fac, ctx));
  });
  return total;
}

Complex sum_weighted_variance_enum(const FieldSpec& F, int n, const ModulusCtx& ctx,
                                   const IrreducibleTable& table, Complex y, std::uint64_t budget) {
  check_budget(F, n, budget);
  Complex total = 0;
  for_each_monic(F, n, [&](const MonicPoly& f) {
    const Factorization fac = factorize(F, f, table);
    total += std::pow(y, fac.omega()) *
             to_double(variance_direct_of_profile(ctx, divisor_profile(F, fac, ctx)));
  });
  return total;
}

ComplexSeries weighted_variance_series(const ModulusCtx& ctx, LSeriesEngine& engine,
                                       const OmegaCountTable& tbl, Complex y, int trunc) {
  if (trunc > tbl.n_max) throw std::invalid_argument("truncation exceeds the Omega table range");

  // ghat_Q(u) = prod_{P|Q} (1 + y u^{deg P})^{-1} = prod sum_k (-y)^k u^{k deg P}
  ComplexSeries ghat = series_const(1, trunc);
  for (const auto& P : ctx.prime_factors()) {
    ComplexSeries factor = series_const(0, trunc);
    Complex w = 1;
    for (int k = 0; k * P.degree() <= trunc; ++k) {
      factor.c[static_cast<size_t>(k * P.degree())] = w;
      w *= -y;
    }
    ghat = series_mul(ghat, factor);
  }

  const ComplexSeries zeta_u = zeta_series(tbl, y, trunc);
  // zeta(u^2, y^2) to u-degree trunc
  const ComplexSeries zeta_u2 = series_substitute_u2(zeta_series(tbl, y * y, trunc / 2));
  ComplexSeries zeta_u2_trunc = series_const(0, trunc);
  for (int k = 0; k <= trunc; ++k) zeta_u2_trunc.c[static_cast<size_t>(k)] = zeta_u2.coeff(k);

  ComplexSeries out = series_mul(ghat, series_mul(zeta_u, zeta_u));
  out = series_mul(out, series_inverse(zeta_u2_trunc));
  out = series_mul(out, engine.nonprincipal_pair_sum(y, trunc));
  const double phi = static_cast<double>(ctx.phi());
  return series_scale(1.0 / (phi * phi), out);
}

IdentityCheck general_sigma_identity_check(int a, int b, const DirichletChar& chi1,
                                           const DirichletChar& chi2, Complex y, int n_check,
                                           const IrreducibleTable& table, LSeriesEngine& engine,
                                           const OmegaCountTable& tbl, double tol) {
  if (std::abs(a) > 3 || std::abs(b) > 3)
    throw std::invalid_argument("shifts a, b restricted to |a|,|b| <= 3");
  const FieldSpec& F = engine.ctx().field();
  const double q = static_cast<double>(F.q());

  IdentityCheck chk;
  chk.n_check = n_check;

  // brute side by enumeration
  for (int n = 0; n <= n_check; ++n) {
    Complex sum = 0;
    for_each_monic(F, n, [&](const MonicPoly& f) {
      const Factorization fac = factorize(F, f, table);
      sum += std::pow(y, fac.omega()) * sigma_a_chi(F, fac, chi1, a) * sigma_a_chi(F, fac, chi2, b);
    });
    chk.brute.push_back(sum);
  }

  // series side
  const DirichletChar chi12 = chi1 * chi2;
  const ComplexSeries zeta_u = zeta_series(tbl, y, n_check);
  const ComplexSeries l1 = series_scale_var(engine.weighted_series(chi1, y, n_check), std::pow(q, a));
  const ComplexSeries l2 = series_scale_var(engine.weighted_series(chi2, y, n_check), std::pow(q, b));
  const ComplexSeries l12 = series_scale_var(engine.weighted_series(chi12, y, n_check), std::pow(q, a + b));
  const ComplexSeries l12_sq_full = series_substitute_u2(
      series_scale_var(engine.weighted_series(chi12, y * y, n_check / 2 + 1), std::pow(q, a + b)));
  ComplexSeries l12_sq = series_const(0, n_check);
  for (int k = 0; k <= n_check; ++k) l12_sq.c[static_cast<size_t>(k)] = l12_sq_full.coeff(k);

  ComplexSeries prod = series_mul(zeta_u, series_mul(l1, series_mul(l2, l12)));
  prod = series_mul(prod, series_inverse(l12_sq));

  double qn = 1;
  for (int n = 0; n <= n_check; ++n) {
    chk.series.push_back(prod.coeff(n));
    chk.max_scaled_err = std::max(chk.max_scaled_err,
                                  std::abs(chk.brute[static_cast<size_t>(n)] - prod.coeff(n)) / qn);
    qn *= q;
  }
  chk.ok = chk.max_scaled_err <= tol;
  return chk;
}

HallIdentity hall_rational_identity(Complex u, Complex p, Complex r, int v_max) {
  const double growth = std::abs(u) * std::max(1.0, std::abs(p)) * std::max(1.0, std::abs(r));
  if (growth >= 1.0)
    throw std::invalid_argument("outside the convergence polydisc: |u| max(1,|p|) max(1,|r|) >= 1");

  HallIdentity out;
  Complex lhs = 0, uv = 1, psum = 0, rsum = 0, pj = 1, rj = 1;
  Complex last_term = 0;
  for (int v = 0; v <= v_max; ++v) {
    psum += pj;
    rsum += rj;
    last_term = uv * psum * rsum;
    lhs += last_term;
    uv *= u;
    pj *= p;
    rj *= r;
  }
  out.lhs = lhs;
  out.tail = std::abs(last_term) * growth / (1.0 - growth);
  out.rhs = (1.0 - p * r * u * u) /
            ((1.0 - u * p * r) * (1.0 - u * p) * (1.0 - u * r) * (1.0 - u));
  out.diff = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace fqt
