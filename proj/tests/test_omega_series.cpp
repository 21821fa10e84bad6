#include <doctest.h>

#include <map>

#include "fqt/series.hpp"

using namespace fqt;

namespace {

// brute-force Omega histogram over all monic polynomials of degree n
std::map<int, long long> omega_histogram(const FieldSpec& F, const IrreducibleTable& table, int n) {
  std::map<int, long long> hist;
  for_each_monic(F, n, [&](const MonicPoly& f) { hist[factorize(F, f, table).omega()] += 1; });
  return hist;
}

}  // namespace

TEST_CASE("omega table against brute force") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const IrreducibleTable table = build_irreducible_table(f2, 8);
  const OmegaCountTable tbl = build_omega_table(table, 8);

  // frozen oracle values for q=2, n=4 (brute-force factorization of all 16 quartics)
  CHECK(tbl.at(4, 1) == 3);
  CHECK(tbl.at(4, 2) == 5);
  CHECK(tbl.at(4, 3) == 3);
  CHECK(tbl.at(4, 4) == 5);
  CHECK(tbl.at(2, 1) == 1);
  CHECK(tbl.at(2, 2) == 3);

  for (int n = 1; n <= 8; ++n) {
    const auto hist = omega_histogram(f2, table, n);
    for (int t = 1; t <= n; ++t) {
      const auto it = hist.find(t);
      const BigInt brute = it == hist.end() ? 0 : it->second;
      CHECK(tbl.at(n, t) == brute);
    }
  }
}

TEST_CASE("census identity and splitting count to n = 30") {
  const OmegaCountTable tbl = build_omega_table(2, 30, irreducible_counts(2, 30));
  BigInt qn = 1;
  for (int n = 0; n <= 30; ++n) {
    BigInt sum = 0;
    for (int t = 0; t <= n; ++t) sum += tbl.at(n, t);
    CHECK(sum == qn);
    qn *= 2;
    // N_n(n) = multisets of n linear factors = binom(q+n-1, n)
    CHECK(tbl.at(n, n) == multiset_count(BigInt(2), n));
    if (n >= 1) CHECK(tbl.at(n, 0) == 0);
  }
}

TEST_CASE("weighted sums") {
  const OmegaCountTable tbl = build_omega_table(2, 10, irreducible_counts(2, 10));
  CHECK(weighted_sum_rational(tbl, 4, BigRat(1)) == 16);          // y = 1: q^n
  CHECK(weighted_sum_rational(tbl, 5, BigRat(0)) == 0);           // y = 0, n >= 1
  CHECK(weighted_sum_rational(tbl, 4, BigRat(1, 2)) == BigRat(55, 16));
  const Complex w = weighted_sum(tbl, 4, Complex(0.5, 0.0));
  CHECK(std::abs(w - Complex(55.0 / 16.0, 0)) < 1e-12);
}

TEST_CASE("binomial series") {
  // y = 1: geometric series with coefficients q^n
  const ComplexSeries geo = binomial_series(1.0, 3, 6);
  for (int n = 0; n <= 6; ++n) CHECK(std::abs(geo.coeff(n) - std::pow(3.0, n)) < 1e-9);
  // y = 0: constant 1
  const ComplexSeries one = binomial_series(0.0, 5, 4);
  CHECK(std::abs(one.coeff(0) - 1.0) < 1e-15);
  for (int n = 1; n <= 4; ++n) CHECK(std::abs(one.coeff(n)) < 1e-15);
  // y = 2, q = 2: coefficient of u^2 is binom(3,2) 2^2 = 12
  CHECK(std::abs(binomial_series(2.0, 2, 3).coeff(2) - 12.0) < 1e-12);
}

TEST_CASE("n series properties") {
  const OmegaCountTable tbl = build_omega_table(2, 24, irreducible_counts(2, 24));

  const ComplexSeries n1 = n_series(tbl, 1.0, 20);
  CHECK(std::abs(n1.coeff(0) - 1.0) < 1e-12);
  for (int n = 1; n <= 20; ++n) CHECK(std::abs(n1.coeff(n)) < 1e-12);  // zeta(u,1) = zeta(u)

  const ComplexSeries nh = n_series(tbl, 0.5, 20);
  CHECK(std::abs(nh.coeff(0) - 1.0) < 1e-12);
  CHECK(std::abs(nh.coeff(1)) < 1e-12);  // the u^1 coefficient vanishes for every y
}

TEST_CASE("factor identity zeta = binomial * n_series on a y grid") {
  const OmegaCountTable tbl = build_omega_table(2, 16, irreducible_counts(2, 16));
  const Complex ys[] = {{0.9, 0}, {-0.9, 0}, {0.3, 0.2}, {0, 0.7}, {-0.4, -0.5}};
  for (const Complex y : ys) {
    const ComplexSeries lhs = zeta_series(tbl, y, 16);
    const ComplexSeries rhs = series_mul(binomial_series(y, 2, 16), n_series(tbl, y, 16));
    for (int n = 0; n <= 16; ++n) {
      const double scale = std::max(1.0, std::abs(lhs.coeff(n)));
      CHECK(std::abs(lhs.coeff(n) - rhs.coeff(n)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("series log/exp/inverse consistency") {
  ComplexSeries s = series_const(1, 12);
  s.c[1] = Complex(0.3, 0.1);
  s.c[2] = Complex(-0.2, 0.05);
  s.c[5] = Complex(0.7, -0.4);
  const ComplexSeries back = series_exp(series_log(s));
  for (int n = 0; n <= 12; ++n) CHECK(std::abs(back.coeff(n) - s.coeff(n)) < 1e-12);
  const ComplexSeries prod = series_mul(s, series_inverse(s));
  CHECK(std::abs(prod.coeff(0) - 1.0) < 1e-12);
  for (int n = 1; n <= 12; ++n) CHECK(std::abs(prod.coeff(n)) < 1e-12);
}

TEST_CASE("eval with tail") {
  const ComplexSeries zero = series_const(0, 5);
  const TailEval z = eval_with_tail(zero, 0.3, 0.5);
  CHECK(z.value == Complex(0));
  CHECK(z.tail_bound == 0);

  // geometric coefficients q^n at u0 = 1/(2q): value 2, tiny tail
  const ComplexSeries geo = binomial_series(1.0, 2, 50);
  const TailEval g = eval_with_tail(geo, 0.25);
  CHECK(std::abs(g.value - 2.0) < 1e-12);
  CHECK(g.tail_bound < 1e-12);

  CHECK_THROWS_AS(eval_with_tail(geo, 0.25, 1.5), std::invalid_argument);
}

TEST_CASE("measured decay is clamped for non-decaying terms") {
  // geometric coefficients q^n evaluated outside the disc: terms grow, the
  // measured ratio clamps to 0.9 and the bound stays finite
  const ComplexSeries geo = binomial_series(1.0, 2, 20);
  const TailEval t = eval_with_tail(geo, 0.8);
  CHECK(std::isfinite(t.tail_bound));
  CHECK(t.tail_bound >= 9.0 * std::abs(geo.coeff(20)) * std::pow(0.8, 20) - 1e-6);
}

TEST_CASE("series preconditions") {
  const ComplexSeries z = series_const(0, 5);
  CHECK_THROWS_AS(series_inverse(z), std::domain_error);
  CHECK_THROWS_AS(series_log(series_const(2.0, 5)), std::domain_error);
  ComplexSeries nz = series_const(1, 5);
  CHECK_THROWS_AS(series_exp(nz), std::domain_error);
  const OmegaCountTable tbl = build_omega_table(2, 6, irreducible_counts(2, 6));
  CHECK_THROWS_AS(zeta_series(tbl, 0.5, 10), std::invalid_argument);  // trunc > n_max
}

TEST_CASE("n series evaluation vs direct Euler product") {
  const OmegaCountTable tbl = build_omega_table(2, 60, irreducible_counts(2, 60));
  const ComplexSeries nh = n_series(tbl, 0.5, 60);
  const TailEval at_half = eval_with_tail(nh, 0.5);
  CHECK(at_half.tail_bound < 1e-8);

  const auto pi_big = irreducible_counts(2, 13);
  std::vector<double> pi(pi_big.size());
  for (size_t i = 0; i < pi.size(); ++i) pi[i] = to_double(pi_big[i]);
  const Complex direct = n_euler_product(pi, 0.5, 0.5, 12);
  CHECK(std::abs(at_half.value - direct) < 1e-5);  // product truncated at degree 12
}

TEST_CASE("partial Euler products of N form a Cauchy sequence at u = q^{-0.6}") {
  const auto pi_big = irreducible_counts(2, 41);
  std::vector<double> pi(pi_big.size());
  for (size_t i = 0; i < pi.size(); ++i) pi[i] = to_double(pi_big[i]);
  const Complex u0 = std::pow(2.0, -0.6);
  const Complex y(0.5, 0.2);
  double prev_inc = 0;
  int shrinking = 0, total = 0;
  Complex prev = n_euler_product(pi, y, u0, 5);
  for (int D = 6; D <= 40; ++D) {
    const Complex cur = n_euler_product(pi, y, u0, D);
    const double inc = std::abs(cur - prev);
    if (D > 6) {
      ++total;
      if (inc < prev_inc || inc < 1e-14) ++shrinking;
    }
    prev_inc = inc;
    prev = cur;
  }
  CHECK(shrinking >= total - 2);  // geometric shrink, allowing parity wobble
  CHECK(prev_inc < 1e-3);
}
