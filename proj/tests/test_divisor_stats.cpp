#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fqt/divisor_stats.hpp"
#include "fqt/errors.hpp"

using namespace fqt;

namespace {

struct Fixture {
  FieldSpec f2 = FieldSpec::prime_field(2);
  IrreducibleTable table = build_irreducible_table(f2, 6);
  MonicPoly Q = poly_from_text(f2, "T^2+T+1");
  ModulusCtx ctx = ModulusCtx::build(f2, Q);
  std::vector<DirichletChar> chars = characters(ctx);
};

}  // namespace

TEST_CASE("sigma_0 token sums") {
  Fixture fx;
  const Factorization one = factorize(fx.f2, MonicPoly::one(), fx.table);
  for (const auto& chi : fx.chars)
    CHECK(std::abs(sigma0_chi_tokens(fx.f2, one, chi).value() - Complex(1, 0)) < 1e-14);

  // f = T(T+1): divisors 1, T, T+1, T^2+T = 1 mod Q; nontrivial chi gives
  // 1 + w + w^2 + 1 = 1
  const Factorization fac = factorize(fx.f2, poly_from_text(fx.f2, "T^2+T"), fx.table);
  CHECK(std::abs(sigma0_chi_tokens(fx.f2, fac, fx.chars[1]).value() - Complex(1, 0)) < 1e-12);
  // principal, a = 0: number of divisors coprime to Q = 4
  CHECK(std::abs(sigma0_chi_tokens(fx.f2, fac, fx.chars[0]).value() - Complex(4, 0)) < 1e-12);
  CHECK(std::abs(sigma_a_chi(fx.f2, fac, fx.chars[0], 0) - Complex(4, 0)) < 1e-12);
}

TEST_CASE("sigma multiplicativity on coprime arguments (exact tokens)") {
  Fixture fx;
  std::mt19937_64 rng(99);
  int done = 0;
  while (done < 25) {
    const MonicPoly f = MonicPoly::from_index(fx.f2, 3, rng() % 8);
    const MonicPoly g = MonicPoly::from_index(fx.f2, 2, rng() % 4);
    if (poly_gcd(fx.f2, f.as_poly(), g.as_poly()).degree() != 0) continue;
    ++done;
    const Factorization ff = factorize(fx.f2, f, fx.table);
    const Factorization fg = factorize(fx.f2, g, fx.table);
    const Factorization ffg = factorize(fx.f2, monic_mul(fx.f2, f, g), fx.table);
    for (const auto& chi : fx.chars) {
      const Complex lhs = sigma0_chi_tokens(fx.f2, ffg, chi).value();
      const Complex rhs =
          sigma0_chi_tokens(fx.f2, ff, chi).value() * sigma0_chi_tokens(fx.f2, fg, chi).value();
      CHECK(std::abs(lhs - rhs) < 1e-11);
    }
  }
}

TEST_CASE("divisor profile examples") {
  Fixture fx;

  // f = 1: single divisor in class 1
  const DivisorProfile p1 = divisor_profile(fx.f2, factorize(fx.f2, MonicPoly::one(), fx.table), fx.ctx);
  CHECK(p1.tau_coprime == 1);
  CHECK(p1.per_class.at(fx.ctx.one_code()) == 1);

  // f = T, Q = T: only the divisor 1 is coprime
  const ModulusCtx ct = ModulusCtx::build(fx.f2, poly_from_text(fx.f2, "T"));
  const DivisorProfile pt = divisor_profile(fx.f2, factorize(fx.f2, poly_from_text(fx.f2, "T"), fx.table), ct);
  CHECK(pt.tau_coprime == 1);

  // f = T(T+1) mod T^2+T+1: classes {1: 2, T: 1, T+1: 1}
  const DivisorProfile pf = divisor_profile(fx.f2, factorize(fx.f2, poly_from_text(fx.f2, "T^2+T"), fx.table), fx.ctx);
  CHECK(pf.tau_coprime == 4);
  CHECK(pf.per_class.at(fx.ctx.one_code()) == 2);
  CHECK(pf.per_class.at(fx.ctx.residue_of(poly_from_text(fx.f2, "T"))) == 1);
  CHECK(pf.per_class.at(fx.ctx.residue_of(poly_from_text(fx.f2, "T+1"))) == 1);

  // class totals always sum to tau_coprime
  for (int n = 0; n <= 5; ++n)
    for_each_monic(fx.f2, n, [&](const MonicPoly& f) {
      const DivisorProfile p = divisor_profile(fx.f2, factorize(fx.f2, f, fx.table), fx.ctx);
      long long total = 0;
      for (const auto& [h, c] : p.per_class) total += c;
      CHECK(total == p.tau_coprime);
    });
}

TEST_CASE("variance: direct and character paths") {
  Fixture fx;

  // f = 1, Phi = 3: V = (1/3)[(2/3)^2 + 2 (1/3)^2] = 2/9
  const VarianceRecord v1 = variance(fx.f2, factorize(fx.f2, MonicPoly::one(), fx.table), fx.ctx, fx.chars);
  CHECK(v1.variance_direct == BigRat(2, 9));

  // f = T(T+1): classes (2,1,1) -> 2/9 again
  const VarianceRecord v2 =
      variance(fx.f2, factorize(fx.f2, poly_from_text(fx.f2, "T^2+T"), fx.table), fx.ctx, fx.chars);
  CHECK(v2.variance_direct == BigRat(2, 9));
  CHECK(v2.agreement < 1e-12);

  // Phi(Q) = 1: variance 0 always
  const ModulusCtx ct = ModulusCtx::build(fx.f2, poly_from_text(fx.f2, "T"));
  const auto tchars = characters(ct);
  for (int n = 0; n <= 4; ++n)
    for_each_monic(fx.f2, n, [&](const MonicPoly& f) {
      const VarianceRecord v = variance(fx.f2, factorize(fx.f2, f, fx.table), ct, tchars);
      CHECK(v.variance_direct == 0);
    });
}

TEST_CASE("variance dual paths agree for deg f <= 6 over three moduli") {
  Fixture fx;
  for (const char* qtext : {"T^2+T+1", "T^2+T", "T^3+T+1"}) {
    const ModulusCtx ctx = ModulusCtx::build(fx.f2, poly_from_text(fx.f2, qtext));
    const auto chars = characters(ctx);
    for (int n = 0; n <= 6; ++n) {
      for_each_monic(fx.f2, n, [&](const MonicPoly& f) {
        const VarianceRecord v = variance(fx.f2, factorize(fx.f2, f, fx.table), ctx, chars, 1e-9);
        CHECK(v.variance_direct >= 0);
        CHECK(v.agreement <= 1e-9);
      });
    }
  }
}

TEST_CASE("sum_variance_exact") {
  Fixture fx;
  CHECK(sum_variance_exact(fx.f2, 0, fx.ctx, fx.table) == BigRat(2, 9));
  // reproducible across runs
  const BigRat a = sum_variance_exact(fx.f2, 4, fx.ctx, fx.table);
  const BigRat b = sum_variance_exact(fx.f2, 4, fx.ctx, fx.table);
  CHECK(a == b);
  CHECK(a > 0);
  CHECK_THROWS_AS(sum_variance_exact(fx.f2, 40, fx.ctx, fx.table, 1 << 10), resource_error);
}

TEST_CASE("weighted variance series matches enumeration") {
  Fixture fx;
  const OmegaCountTable tbl = build_omega_table(2, 20, irreducible_counts(2, 20));
  const Complex ys[] = {{1, 0}, {0.5, 0}, {0.3, 0.2}};
  for (const char* qtext : {"T^2+T+1", "T^2+T", "T^3+T+1"}) {
    const ModulusCtx ctx = ModulusCtx::build(fx.f2, poly_from_text(fx.f2, qtext));
    LSeriesEngine engine(ctx);
    for (const Complex y : ys) {
      const ComplexSeries s = weighted_variance_series(ctx, engine, tbl, y, 8);
      double qn = 1;
      for (int n = 0; n <= 8; ++n) {
        const Complex brute = sum_weighted_variance_enum(fx.f2, n, ctx, fx.table, y);
        CHECK(std::abs(s.coeff(n) - brute) <= 1e-8 * qn);
        qn *= 2;
      }
    }
  }
}

TEST_CASE("weighted variance series coefficient u^0 is (Phi-1)/Phi^2") {
  // f = 1 contributes V[1] = (Phi-1)/Phi^2 regardless of y
  Fixture fx;
  const OmegaCountTable tbl = build_omega_table(2, 10, irreducible_counts(2, 10));
  LSeriesEngine engine(fx.ctx);
  const ComplexSeries s = weighted_variance_series(fx.ctx, engine, tbl, Complex(0.5, 0), 8);
  CHECK(std::abs(s.coeff(0) - Complex(2.0 / 9.0, 0)) < 1e-10);
}

TEST_CASE("variance series is identically zero when Phi = 1") {
  Fixture fx;
  const OmegaCountTable tbl = build_omega_table(2, 10, irreducible_counts(2, 10));
  const ModulusCtx ct = ModulusCtx::build(fx.f2, poly_from_text(fx.f2, "T"));
  LSeriesEngine engine(ct);
  const ComplexSeries s = weighted_variance_series(ct, engine, tbl, Complex(0.7, 0.1), 8);
  for (int n = 0; n <= 8; ++n) CHECK(std::abs(s.coeff(n)) < 1e-12);
}

TEST_CASE("general sigma identity") {
  Fixture fx;
  const OmegaCountTable tbl = build_omega_table(2, 16, irreducible_counts(2, 16));
  LSeriesEngine engine(fx.ctx);
  const auto& chars = fx.chars;

  // a = b = 0, chi1 = chi2 = chi0, y = 1, Q = T: tau-squared series
  const ModulusCtx ct = ModulusCtx::build(fx.f2, poly_from_text(fx.f2, "T"));
  LSeriesEngine tengine(ct);
  const auto tchars = characters(ct);
  const IdentityCheck tau2 = general_sigma_identity_check(0, 0, tchars[0], tchars[0], Complex(1, 0), 6,
                                                          fx.table, tengine, tbl, 1e-8);
  CHECK(tau2.ok);

  // y = 0: only f = 1 contributes
  const IdentityCheck y0 = general_sigma_identity_check(0, 0, chars[1], chars[2], Complex(0, 0), 5,
                                                        fx.table, engine, tbl, 1e-10);
  CHECK(y0.ok);
  CHECK(std::abs(y0.brute[0] - Complex(1, 0)) < 1e-12);
  for (int n = 1; n <= 5; ++n) CHECK(std::abs(y0.brute[static_cast<size_t>(n)]) < 1e-12);

  // conjugate pair at y = 1/2
  const IdentityCheck conj = general_sigma_identity_check(0, 0, chars[1], chars[1].conjugate(),
                                                          Complex(0.5, 0), 6, fx.table, engine, tbl, 1e-9);
  CHECK(conj.ok);

  // nonzero shifts
  const IdentityCheck shifted = general_sigma_identity_check(1, 0, chars[1], chars[2], Complex(0.5, 0), 6,
                                                             fx.table, engine, tbl, 1e-8);
  CHECK(shifted.ok);

  CHECK_THROWS_AS(general_sigma_identity_check(5, 0, chars[1], chars[2], Complex(1, 0), 4, fx.table,
                                               engine, tbl, 1e-8),
                  std::invalid_argument);
}

TEST_CASE("rational divisor-pair identity") {
  // p = r = 0: both sides 1/(1-u)
  const HallIdentity h0 = hall_rational_identity(Complex(0.5, 0), 0, 0, 300);
  CHECK(std::abs(h0.lhs - 2.0) < 1e-12);
  CHECK(h0.diff < 1e-12);

  // p = r = 1: sum (v+1)^2 u^v = (1+u)/(1-u)^3
  const HallIdentity h1 = hall_rational_identity(Complex(0.4, 0), 1, 1, 400);
  const Complex expect = (1.0 + 0.4) / std::pow(1.0 - 0.4, 3);
  CHECK(std::abs(h1.lhs - expect) < 1e-9);
  CHECK(h1.diff < 1e-9);

  // seeded random points in the convergence polydisc
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rand_c = [&](double rmax) {
      const double r = rmax * unif(rng), th = 2 * M_PI * unif(rng);
      return Complex(r * std::cos(th), r * std::sin(th));
    };
    const Complex p = rand_c(1.4), r = rand_c(1.4);
    const double umax = 0.8 / (std::max(1.0, std::abs(p)) * std::max(1.0, std::abs(r)));
    const Complex u = rand_c(umax);
    const HallIdentity h = hall_rational_identity(u, p, r, 200);
    CHECK(h.diff <= 1e-9);
  }

  CHECK_THROWS_AS(hall_rational_identity(Complex(0.9, 0), Complex(1.2, 0), 0, 100),
                  std::invalid_argument);
}
