#include "fqt/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "fqt/asymptotics.hpp"
#include "fqt/errors.hpp"

namespace fqt {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

CheckResult guard(const std::string& id, const std::string& name,
                  const std::function<std::pair<bool, std::string>()>& body) {
  CheckResult r;
  r.id = id;
  r.name = name;
  try {
    const auto [pass, detail] = body();
    r.pass = pass;
    r.detail = detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::vector<double> pi_doubles(std::uint64_t q, int n_max) {
  const auto big = irreducible_counts(q, n_max);
  std::vector<double> out(big.size());
  for (size_t i = 0; i < big.size(); ++i) out[i] = to_double(big[i]);
  return out;
}

const std::vector<const char*>& variance_moduli() {
  static const std::vector<const char*> qs = {"T^2+T+1", "T^2+T", "T^3+T+1"};
  return qs;
}

std::vector<ModulusCtx> all_moduli_deg_le(const FieldSpec& F, int max_deg) {
  std::vector<ModulusCtx> out;
  for (int d = 1; d <= max_deg; ++d)
    for (const auto& Q : enumerate_monic(F, d)) out.push_back(ModulusCtx::build(F, Q));
  return out;
}

// ---- acceptance criteria -----------------------------------------------

CheckResult check_census_bruteforce() {  // criterion 1
  return guard("1", "exact census vs brute-force Omega histogram (q=2 n<=8, q=3 n<=6)", [] {
    for (const auto& [p, n_hi] : {std::pair<int, int>{2, 8}, {3, 6}}) {
      const FieldSpec F = FieldSpec::prime_field(static_cast<std::uint32_t>(p));
      const IrreducibleTable table = build_irreducible_table(F, (n_hi + 1) / 2 + 1);
      const OmegaCountTable tbl = build_omega_table(F.q(), n_hi, irreducible_counts(F.q(), n_hi));
      for (int n = 0; n <= n_hi; ++n) {
        std::map<int, BigInt> hist;
        for_each_monic(F, n, [&](const MonicPoly& f) { hist[factorize(F, f, table).omega()] += 1; });
        for (int t = 0; t <= n; ++t) {
          const auto it = hist.find(t);
          const BigInt brute = it == hist.end() ? BigInt(0) : it->second;
          if (tbl.at(n, t) != brute)
            return std::pair{false, "mismatch at q=" + std::to_string(p) + " n=" + std::to_string(n) +
                                        " t=" + std::to_string(t)};
        }
      }
    }
    return std::pair{true, std::string("exact equality on both fields")};
  });
}

CheckResult check_census_identity() {  // criterion 2
  return guard("2", "census identity sum_t N_t(n) = q^n, q=2, n<=30, DP only", [] {
    const OmegaCountTable tbl = build_omega_table(2, 30, irreducible_counts(2, 30));
    BigInt qn = 1;
    for (int n = 0; n <= 30; ++n) {
      BigInt sum = 0;
      for (int t = 0; t <= n; ++t) sum += tbl.at(n, t);
      if (sum != qn) return std::pair{false, "failure at n=" + std::to_string(n)};
      qn *= 2;
    }
    return std::pair{true, std::string("exact for all n <= 30")};
  });
}

CheckResult check_moebius_sieve() {  // criterion 3
  return guard("3", "Moebius/sieve agreement for pi(d) (q=2 d<=12, q=3 d<=8)", [] {
    for (const auto& [p, d_hi] : {std::pair<int, int>{2, 12}, {3, 8}}) {
      const FieldSpec F = FieldSpec::prime_field(static_cast<std::uint32_t>(p));
      const IrreducibleTable table = build_irreducible_table(F, d_hi);  // cross-checks internally
      for (int d = 1; d <= d_hi; ++d)
        if (BigInt(table.count_at(d)) != mobius_irreducible_count(F.q(), d))
          return std::pair{false, "mismatch at q=" + std::to_string(p) + " d=" + std::to_string(d)};
    }
    return std::pair{true, std::string("exact integer equality")};
  });
}

CheckResult check_orthogonality() {  // criterion 4
  return guard("4", "character orthogonality, exact tokens + complex sums, deg Q <= 4 over F_2/F_3", [] {
    double worst = 0;
    for (const std::uint32_t p : {2u, 3u}) {
      const FieldSpec F = FieldSpec::prime_field(p);
      for (const auto& ctx : all_moduli_deg_le(F, 4)) {
        const auto chars = characters(ctx);
        const auto& gens = ctx.generators();
        std::vector<std::vector<Complex>> vals(chars.size());
        for (size_t c = 0; c < chars.size(); ++c) {
          vals[c].reserve(ctx.units().size());
          for (const auto u : ctx.units()) vals[c].push_back(token_value(chars[c].eval_unit(u)));
        }
        for (size_t ia = 0; ia < ctx.units().size(); ++ia) {
          for (size_t ib = 0; ib < ctx.units().size(); ++ib) {
            const auto a = ctx.units()[ia];
            const auto b = ctx.units()[ib];
            // exact route: each cyclic factor contributes e_i iff e_i | (x_i - y_i), else 0
            const auto& da = ctx.dlog(a);
            const auto& db = ctx.dlog(b);
            bool all_zero = true;
            for (size_t i = 0; i < gens.size(); ++i)
              all_zero &= ((da[i] - db[i]) % gens[i].order == 0);
            if (all_zero != (a == b))
              return std::pair{false, std::string("exact orthogonality failed")};
            Complex sum = 0;
            for (size_t c = 0; c < chars.size(); ++c) sum += vals[c][ia] * std::conj(vals[c][ib]);
            const Complex expect = a == b ? Complex(static_cast<double>(ctx.phi()), 0) : Complex(0, 0);
            worst = std::max(worst, std::abs(sum - expect));
          }
        }
      }
    }
    return std::pair{worst < 1e-10, "max complex deviation " + fmt(worst)};
  });
}

CheckResult check_eq6() {  // criterion 5
  return guard("5", "principal-character identity, exact integers, n <= 20, deg Q <= 4 over F_2/F_3", [] {
    for (const std::uint32_t p : {2u, 3u}) {
      const FieldSpec F = FieldSpec::prime_field(p);
      for (const auto& ctx : all_moduli_deg_le(F, 4)) {
        const auto rep = l_principal_check(ctx, 20, p == 2 ? (1u << 12) : (1u << 10));
        if (!rep.ok)
          return std::pair{false, "failed for Q = " + poly_to_pretty(F, ctx.modulus()) + " over F_" +
                                      std::to_string(p)};
      }
    }
    return std::pair{true, std::string("exact for every modulus")};
  });
}

CheckResult check_grh() {  // criterion 6
  return guard("6", "GRH bands: every inverse root within 1e-6 of 1 or sqrt(q), deg Q <= 4 over F_2/F_3", [] {
    double worst = 0;
    int certified = 0;
    for (const std::uint32_t p : {2u, 3u}) {
      const FieldSpec F = FieldSpec::prime_field(p);
      for (const auto& ctx : all_moduli_deg_le(F, 4)) {
        for (const auto& chi : characters(ctx)) {
          if (chi.is_principal()) continue;
          LPoly lp = l_polynomial(chi);
          for (const auto& root : grh_certify(lp, 1e-6)) {  // throws on violation
            worst = std::max(worst, root.deviation);
            ++certified;
          }
        }
      }
    }
    return std::pair{true, std::to_string(certified) + " roots certified, worst deviation " + fmt(worst)};
  });
}

CheckResult check_lemma51() {  // criterion 7
  return guard("7", "divisor variance: direct vs character path, deg f <= 6 over F_2, three moduli", [] {
    const FieldSpec F = FieldSpec::prime_field(2);
    const IrreducibleTable table = build_irreducible_table(F, 4);
    double worst = 0;
    for (const char* qt : variance_moduli()) {
      const ModulusCtx ctx = ModulusCtx::build(F, poly_from_text(F, qt));
      const auto chars = characters(ctx);
      for (int n = 0; n <= 6; ++n) {
        bool bad = false;
        for_each_monic(F, n, [&](const MonicPoly& f) {
          const VarianceRecord v = variance(F, factorize(F, f, table), ctx, chars, 1e-9);
          if (v.variance_direct < 0) bad = true;
          worst = std::max(worst, v.agreement);
        });
        if (bad) return std::pair{false, std::string("negative variance")};
      }
    }
    return std::pair{worst <= 1e-9, "max path disagreement " + fmt(worst)};
  });
}

CheckResult check_lemma52(std::uint64_t seed) {  // criterion 8
  return guard("8", "rational divisor-pair identity at 1000 seeded points, v_max = 200", [seed] {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto rand_c = [&](double rmax) {
      const double r = rmax * unif(rng), th = 2 * M_PI * unif(rng);
      return Complex(r * std::cos(th), r * std::sin(th));
    };
    double worst = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const Complex p = rand_c(1.5), r = rand_c(1.5);
      const double umax = 0.8 / (std::max(1.0, std::abs(p)) * std::max(1.0, std::abs(r)));
      const HallIdentity h = hall_rational_identity(rand_c(umax), p, r, 200);
      worst = std::max(worst, h.diff);
    }
    return std::pair{worst <= 1e-9, "max |lhs - rhs| = " + fmt(worst)};
  });
}

CheckResult check_generating_identity() {  // criterion 9
  return guard("9", "variance generating identity vs enumeration, n <= 8, y in {1, 1/2, 0.3+0.2i}", [] {
    const FieldSpec F = FieldSpec::prime_field(2);
    const IrreducibleTable table = build_irreducible_table(F, 4);
    const OmegaCountTable tbl = build_omega_table(2, 20, irreducible_counts(2, 20));
    const Complex ys[] = {{1, 0}, {0.5, 0}, {0.3, 0.2}};
    double worst = 0;
    for (const char* qt : variance_moduli()) {
      const ModulusCtx ctx = ModulusCtx::build(F, poly_from_text(F, qt));
      LSeriesEngine engine(ctx);
      std::vector<std::vector<std::pair<int, double>>> per_n(9);
      for (int n = 0; n <= 8; ++n)
        for_each_monic(F, n, [&](const MonicPoly& f) {
          const Factorization fac = factorize(F, f, table);
          per_n[static_cast<size_t>(n)].push_back(
              {fac.omega(), to_double(variance_direct_of_profile(ctx, divisor_profile(F, fac, ctx)))});
        });
      for (const Complex y : ys) {
        const ComplexSeries s = weighted_variance_series(ctx, engine, tbl, y, 8);
        double qn = 1;
        for (int n = 0; n <= 8; ++n) {
          Complex brute = 0;
          for (const auto& [omega, v] : per_n[static_cast<size_t>(n)]) brute += std::pow(y, omega) * v;
          worst = std::max(worst, std::abs(s.coeff(n) - brute) / qn);
          qn *= 2;
        }
      }
    }
    return std::pair{worst <= 1e-8, "max scaled coefficient error " + fmt(worst)};
  });
}

CheckResult check_t54() {  // criterion 10
  return guard("10", "average-variance constants: fit recovers A_Q within 5%; residual q^{-0.6n} bounded", [] {
    const FieldSpec F = FieldSpec::prime_field(2);
    const IrreducibleTable table = build_irreducible_table(F, 7);
    const ModulusCtx ctx = ModulusCtx::build(F, poly_from_text(F, "T^2+T+1"));
    LSeriesEngine engine(ctx);
    const VarianceConstants vc = constants_AQ_BQ(ctx, engine);

    std::vector<std::pair<long long, double>> sums;
    for (int n = 6; n <= 14; ++n)
      sums.push_back({n, to_double(sum_variance_exact(F, n, ctx, table))});
    const LinearFit fit = fit_variance_constants(sums, 2);

    const double a_dev = std::abs(fit.a - vc.a_q) / vc.a_q;
    if (a_dev > 0.05) return std::pair{false, "fit A deviates " + fmt(100 * a_dev) + "% from the formula"};

    // the displayed B and the residue-derived B disagree; the fit arbitrates
    const bool displayed_ok = std::abs(fit.b - vc.b_displayed) <= std::abs(fit.b - vc.b_derived);
    const double b_used = displayed_ok ? vc.b_displayed : vc.b_derived;

    const auto scaled_residuals = [&](double b) {
      std::vector<double> out;
      for (const auto& [n, v] : sums) {
        const double model = (vc.a_q * static_cast<double>(n + 1) + b) * std::pow(2.0, n + 1);
        out.push_back(std::abs(v - model) * std::pow(2.0, -0.6 * static_cast<double>(n)));
      }
      return out;
    };
    const auto bounded = [](const std::vector<double>& r) {
      const size_t half = r.size() / 2;
      double first = 0, second = 0;
      for (size_t i = 0; i < r.size(); ++i) {
        auto& slot = i < half ? first : second;
        slot = std::max(slot, r[i]);
      }
      return second <= 1.5 * std::max(first, 1e-12);
    };
    if (!bounded(scaled_residuals(b_used)))
      return std::pair{false, std::string("scaled residual grows even with the fit-selected constant")};

    std::string detail = "fit A within " + fmt(100 * a_dev) + "% of formula A_Q=" + fmt(vc.a_q);
    if (!displayed_ok)
      detail += "; FLAG: displayed B_Q=" + fmt(vc.b_displayed) +
                " rejected by fit (B_fit=" + fmt(fit.b) + "); residue-derived B_Q=" + fmt(vc.b_derived) +
                " used for the boundedness run (open question: displayed formula drops sum|L|^2)";
    return std::pair{true, detail};
  });
}

CheckResult check_lemma33() {  // criterion 11
  return guard("11", "Gamma-ratio scaled error bounded (max/min <= 10) for three y values", [] {
    const Complex ys[] = {{0, 0}, {0.5, 0}, {0.3, 0.4}};
    double worst_ratio = 0;
    for (const Complex y : ys) {
      double lo = 1e300, hi = 0;
      for (const long long n : {10LL, 100LL, 1000LL, 10000LL}) {
        const double scaled = *gamma_ratio_check(n, y).error_exponent_estimate;
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
      }
      worst_ratio = std::max(worst_ratio, hi / lo);
    }
    return std::pair{worst_ratio <= 10.0, "worst max/min ratio " + fmt(worst_ratio)};
  });
}

CheckResult check_t33_convergence() {  // criterion 12
  return guard("12", "count main term: relative deviation at n=30 below n=10 (y=1/2, q=2)", [] {
    const OmegaCountTable tbl = build_omega_table(2, 30, irreducible_counts(2, 30));
    const auto pi = pi_doubles(2, 31);
    const Complex c = euler_constant_C({0.5, 0}, pi, 2, 30).value;
    const auto reldev = [&](long long n) {
      const double exact = to_double(weighted_sum_rational(tbl, static_cast<int>(n), BigRat(1, 2)));
      const Complex main = main_term_count({0.5, 0}, n, c, 2);
      return std::abs(exact - main) / std::abs(main);
    };
    const double d10 = reldev(10), d30 = reldev(30);
    return std::pair{d30 < d10, "reldev(10)=" + fmt(d10) + " reldev(30)=" + fmt(d30)};
  });
}

CheckResult check_a1() {  // criterion 13
  return guard("13", "leading Taylor coefficient A_1 = 1 within 1e-5 (large-n convention)", [] {
    const auto pi = pi_doubles(2, 31);
    const auto a = coeffs_A(pi, 2, 30, /*n_ref=*/0, 16, 0.5, 64);
    const double dev = std::abs(a[1] - Complex(1, 0));
    return std::pair{dev < 1e-5, "|A_1 - 1| = " + fmt(dev)};
  });
}

CheckResult check_log_gamma() {  // criterion 14
  return guard("14", "log-gamma: Stirling vs Lanczos <= 1e-9 on grid; recurrence/reflection <= 1e-10", [] {
    double worst_cross = 0;
    for (double re = 0.5; re <= 10.0; re += 0.5)
      for (double im = -5.0; im <= 5.0; im += 0.5)
        worst_cross =
            std::max(worst_cross, std::abs(log_gamma_stirling({re, im}) - log_gamma_lanczos({re, im})));
    if (worst_cross > 1e-9) return std::pair{false, "cross-check " + fmt(worst_cross)};

    double worst_id = 0;
    for (double re = 0.6; re <= 9.0; re += 0.7)
      for (double im = -4.0; im <= 4.0; im += 0.9) {
        const Complex s(re, im);
        worst_id =
            std::max(worst_id, std::abs(log_gamma(s + Complex(1, 0)) - log_gamma(s) - std::log(s)));
      }
    for (double r = 0.1; r <= 0.9; r += 0.2)
      for (int a = 0; a < 8; ++a) {
        if (a == 4) continue;  // the cut
        const double th = 2 * M_PI * a / 8;
        const Complex y = r * Complex(std::cos(th), std::sin(th));
        const Complex lhs = std::sin(M_PI * y) * std::exp(log_gamma(1.0 - y)) / M_PI;
        worst_id = std::max(worst_id, std::abs(lhs - std::exp(-log_gamma(y))));
      }
    return std::pair{worst_id <= 1e-10, "cross " + fmt(worst_cross) + ", identities " + fmt(worst_id)};
  });
}

// ---- extra invariant checks for the named suites -------------------------

CheckResult check_factor_identity() {
  return guard("E1", "zeta(u,y) = (1-qu)^{-y} N(u,y) on a y grid", [] {
    const OmegaCountTable tbl = build_omega_table(2, 16, irreducible_counts(2, 16));
    const Complex ys[] = {{0.9, 0}, {-0.9, 0}, {0.3, 0.2}, {0, 0.7}};
    double worst = 0;
    for (const Complex y : ys) {
      const ComplexSeries lhs = zeta_series(tbl, y, 16);
      const ComplexSeries rhs = series_mul(binomial_series(y, 2, 16), n_series(tbl, y, 16));
      for (int n = 0; n <= 16; ++n)
        worst = std::max(worst,
                         std::abs(lhs.coeff(n) - rhs.coeff(n)) / std::max(1.0, std::abs(lhs.coeff(n))));
    }
    return std::pair{worst <= 1e-10, "max relative error " + fmt(worst)};
  });
}

CheckResult check_splitting_count() {
  return guard("E2", "N_n(n) = multiset count binom(q+n-1, n)", [] {
    for (const std::uint64_t q : {2ull, 3ull}) {
      const OmegaCountTable tbl = build_omega_table(q, 12, irreducible_counts(q, 12));
      for (int n = 0; n <= 12; ++n)
        if (tbl.at(n, n) != multiset_count(BigInt(q), n))
          return std::pair{false, "mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n)};
    }
    return std::pair{true, std::string("exact")};
  });
}

CheckResult check_factorize_roundtrip(std::uint64_t seed) {
  return guard("E3", "factorize then multiply is the identity on random factor multisets", [seed] {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (const std::uint32_t p : {2u, 3u}) {
      const FieldSpec F = FieldSpec::prime_field(p);
      const IrreducibleTable table = build_irreducible_table(F, 5);
      std::vector<MonicPoly> pool;
      for (int d = 1; d <= 3; ++d)
        for (const auto& P : table.by_degree[static_cast<size_t>(d)]) pool.push_back(P);
      for (int trial = 0; trial < 50; ++trial) {
        MonicPoly f = MonicPoly::one();
        for (int i = 0; i < 3 && f.degree() <= 7; ++i) f = monic_mul(F, f, pool[rng() % pool.size()]);
        if (factorization_product(F, factorize(F, f, table)) != f)
          return std::pair{false, std::string("round trip failed")};
      }
    }
    return std::pair{true, std::string("100 random multisets")};
  });
}

CheckResult check_multiplicativity(std::uint64_t seed) {
  return guard("C1", "chi(fg) = chi(f) chi(g) as exact tokens", [seed] {
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4full);
    const FieldSpec F = FieldSpec::prime_field(3);
    const ModulusCtx ctx = ModulusCtx::build(F, poly_from_text(F, "T^2+1"));
    const auto chars = characters(ctx);
    for (int trial = 0; trial < 60; ++trial) {
      const MonicPoly f = MonicPoly::from_index(F, 2, rng() % 9);
      const MonicPoly g = MonicPoly::from_index(F, 3, rng() % 27);
      const MonicPoly fg = monic_mul(F, f, g);
      for (const auto& chi : chars)
        if (!(chi(fg) == token_mul(chi(f), chi(g))))
          return std::pair{false, std::string("token mismatch")};
    }
    return std::pair{true, std::string("exact over 60 random pairs")};
  });
}

CheckResult check_lseries_consistency() {
  return guard("C2", "L(u,chi,y) coefficients vs enumeration, n <= 6", [] {
    const FieldSpec F = FieldSpec::prime_field(2);
    const IrreducibleTable table = build_irreducible_table(F, 6);
    const ModulusCtx ctx = ModulusCtx::build(F, poly_from_text(F, "T^3+T+1"));
    LSeriesEngine engine(ctx);
    const Complex ys[] = {{1, 0}, {0.5, 0}, {0.3, 0.2}};
    double worst_scaled = 0;
    for (const Complex y : ys) {
      for (int idx = 0; idx < engine.char_count(); ++idx) {
        const ComplexSeries s = engine.weighted_series(idx, y, 6);
        const auto& chi = engine.character(idx);
        double qn = 1;
        for (int n = 0; n <= 6; ++n) {
          Complex brute = 0;
          for_each_monic(F, n, [&](const MonicPoly& f) {
            const auto tok = chi(f);
            if (tok.zero) return;
            brute += std::pow(y, factorize(F, f, table).omega()) * token_value(tok);
          });
          worst_scaled = std::max(worst_scaled, std::abs(s.coeff(n) - brute) / qn);
          qn *= 2;
        }
      }
    }
    return std::pair{worst_scaled <= 1e-9, "max error / q^n = " + fmt(worst_scaled)};
  });
}

CheckResult check_degree_bound() {
  return guard("C3", "|L(u,chi)| <= (1+sqrt(q)|u|)^m on the sampled GRH disc", [] {
    for (const std::uint32_t p : {2u, 3u}) {
      const FieldSpec F = FieldSpec::prime_field(p);
      for (const auto& ctx : all_moduli_deg_le(F, 3)) {
        const int m = std::max(ctx.modulus().degree() - 1, 0);
        for (const auto& chi : characters(ctx)) {
          if (chi.is_principal()) continue;
          const LPoly lp = l_polynomial(chi);
          for (const double r : {0.1, 0.3, 1.0 / std::sqrt(static_cast<double>(p))}) {
            for (int a = 0; a < 12; ++a) {
              const double th = 2 * M_PI * a / 12;
              const Complex u = r * Complex(std::cos(th), std::sin(th));
              Complex v = 0;
              for (size_t i = lp.coeffs.size(); i-- > 0;) v = v * u + lp.coeffs[i];
              if (std::abs(v) > std::pow(1.0 + std::sqrt(static_cast<double>(p)) * r, m) + 1e-9)
                return std::pair{false, std::string("bound exceeded")};
            }
          }
        }
      }
    }
    return std::pair{true, std::string("bound holds at all samples")};
  });
}

CheckResult check_class_totals() {
  return guard("V1", "class totals sum to tau(f;Q); variance nonnegative", [] {
    const FieldSpec F = FieldSpec::prime_field(2);
    const IrreducibleTable table = build_irreducible_table(F, 3);
    const ModulusCtx ctx = ModulusCtx::build(F, poly_from_text(F, "T^2+T+1"));
    for (int n = 0; n <= 6; ++n) {
      bool ok = true;
      for_each_monic(F, n, [&](const MonicPoly& f) {
        const DivisorProfile prof = divisor_profile(F, factorize(F, f, table), ctx);
        long long total = 0;
        for (const auto& [h, c] : prof.per_class) total += c;
        if (total != prof.tau_coprime) ok = false;
        if (variance_direct_of_profile(ctx, prof) < 0) ok = false;
      });
      if (!ok) return std::pair{false, "failed at degree " + std::to_string(n)};
    }
    return std::pair{true, std::string("exact")};
  });
}

CheckResult check_general_identity(std::uint64_t seed) {
  return guard("V2", "general sigma_a sigma_b Dirichlet-series identity", [seed] {
    const FieldSpec F = FieldSpec::prime_field(2);
    const IrreducibleTable table = build_irreducible_table(F, 4);
    const OmegaCountTable tbl = build_omega_table(2, 16, irreducible_counts(2, 16));
    const ModulusCtx ctx = ModulusCtx::build(F, poly_from_text(F, "T^2+T+1"));
    LSeriesEngine engine(ctx);
    const auto chars = characters(ctx);
    std::mt19937_64 rng(seed ^ 0xa0761d6478bd642full);
    const Complex ys[] = {{1, 0}, {0.5, 0}, {0.3, 0.2}};
    for (int trial = 0; trial < 6; ++trial) {
      const int a = static_cast<int>(rng() % 3) - 1;
      const int b = static_cast<int>(rng() % 3) - 1;
      const auto& c1 = chars[rng() % chars.size()];
      const auto& c2 = chars[rng() % chars.size()];
      const Complex y = ys[rng() % 3];
      const IdentityCheck chk =
          general_sigma_identity_check(a, b, c1, c2, y, 6, table, engine, tbl, 1e-8);
      if (!chk.ok) return std::pair{false, "failed with scaled error " + fmt(chk.max_scaled_err)};
    }
    return std::pair{true, std::string("6 random (a,b,chi1,chi2,y) combinations")};
  });
}

CheckResult check_eq8_convergence() {
  return guard("A1", "partial Euler products of N(u,y) Cauchy at u = q^{-0.6}", [] {
    const auto pi = pi_doubles(2, 41);
    const Complex u0 = std::pow(2.0, -0.6);
    const Complex y(0.5, 0.2);
    double prev_inc = 1e300;
    int non_shrinking = 0;
    Complex prev = n_euler_product(pi, y, u0, 5);
    for (int D = 6; D <= 40; ++D) {
      const Complex cur = n_euler_product(pi, y, u0, D);
      const double inc = std::abs(cur - prev);
      if (D > 6 && inc > prev_inc && inc > 1e-14) ++non_shrinking;
      prev_inc = inc;
      prev = cur;
    }
    return std::pair{non_shrinking <= 2 && prev_inc < 1e-3,
                     "final increment " + fmt(prev_inc) + ", non-shrinking steps " +
                         std::to_string(non_shrinking)};
  });
}

CheckResult check_beta_identity() {
  return guard("A2", "Beta/Gamma identity vs direct quadrature", [] {
    double worst = 0;
    for (double x = 0.5; x <= 3.0; x += 0.5)
      for (double y = 0.5; y <= 3.0; y += 0.5)
        worst = std::max(worst, std::abs(beta_direct_quadrature(x, y) - beta({x, 0}, {y, 0})));
    return std::pair{worst <= 1e-6, "max deviation " + fmt(worst)};
  });
}

CheckResult check_reconstruction() {
  return guard("A3", "Cauchy coefficients re-evaluate G(y) on a second ring", [] {
    const auto pi = pi_doubles(2, 31);
    const auto a = coeffs_A(pi, 2, 30, 0, 24, 0.5, 128);
    Complex recon = 0;
    for (size_t r = 0; r < a.size(); ++r) recon += a[r] * std::pow(0.7, static_cast<double>(r));
    const Complex direct = euler_constant_C({0.7, 0}, pi, 2, 30).value * inv_gamma({0.7, 0});
    const double dev = std::abs(recon - direct);
    return std::pair{dev <= 1e-7, "deviation " + fmt(dev)};
  });
}

CheckResult check_t55_report() {
  return guard("A4", "weighted variance main term converges (y = 1/2 residue constant)", [] {
    const FieldSpec F = FieldSpec::prime_field(2);
    const IrreducibleTable table = build_irreducible_table(F, 7);
    const ModulusCtx ctx = ModulusCtx::build(F, poly_from_text(F, "T^2+T+1"));
    LSeriesEngine engine(ctx);
    const OmegaCountTable tbl = build_omega_table(2, 60, irreducible_counts(2, 60));
    const ValueWithTail h1 = h1_value(ctx, engine, tbl, {0.5, 0}, 60);
    const auto reldev = [&](int n) {
      const double exact = to_double(sum_weighted_variance_exact(F, n, ctx, table, BigRat(1, 2)));
      const Complex main = main_term_variance_half(n, h1, 2);
      return std::abs(exact - main.real()) / std::abs(main.real());
    };
    const double d10 = reldev(10), d14 = reldev(14);
    return std::pair{d14 < d10 && d14 < 0.01, "reldev(10)=" + fmt(d10) + " reldev(14)=" + fmt(d14)};
  });
}

}  // namespace

std::vector<CheckResult> run_suite_exact(std::uint64_t seed) {
  return {check_census_bruteforce(), check_census_identity(), check_moebius_sieve(),
          check_factor_identity(), check_splitting_count(), check_factorize_roundtrip(seed)};
}

std::vector<CheckResult> run_suite_characters(std::uint64_t seed) {
  return {check_orthogonality(), check_eq6(), check_grh(), check_multiplicativity(seed),
          check_lseries_consistency(), check_degree_bound()};
}

std::vector<CheckResult> run_suite_variance(std::uint64_t seed) {
  return {check_lemma51(), check_lemma52(seed), check_generating_identity(), check_class_totals(),
          check_general_identity(seed)};
}

std::vector<CheckResult> run_suite_asymptotics(std::uint64_t seed) {
  (void)seed;
  return {check_log_gamma(), check_lemma33(), check_t33_convergence(), check_a1(), check_t54(),
          check_eq8_convergence(), check_beta_identity(), check_reconstruction(), check_t55_report()};
}

std::vector<CheckResult> run_suite_all(std::uint64_t seed) {
  std::vector<CheckResult> all;
  for (auto& suite : {run_suite_exact(seed), run_suite_characters(seed), run_suite_variance(seed),
                      run_suite_asymptotics(seed)})
    all.insert(all.end(), suite.begin(), suite.end());
  return all;
}

std::vector<CheckResult> run_acceptance(std::uint64_t seed) {
  return {check_census_bruteforce(),
          check_census_identity(),
          check_moebius_sieve(),
          check_orthogonality(),
          check_eq6(),
          check_grh(),
          check_lemma51(),
          check_lemma52(seed),
          check_generating_identity(),
          check_t54(),
          check_lemma33(),
          check_t33_convergence(),
          check_a1(),
          check_log_gamma()};
}

}  // namespace fqt
