#include "fqt/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fqt/errors.hpp"

namespace fqt {

namespace {

constexpr int kKappaPieces = 64;

Complex power(Complex base, Complex e) { return std::exp(e * std::log(base)); }

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Complex kappa(Complex y, long long n, const GammaConfig& cfg) {
  if (n < 2) throw std::invalid_argument("kappa requires n >= 2");
  if (y == Complex(1.0, 0.0)) return 1.0;  // prefactor (1-y) vanishes
  if (std::abs(y) > 0.99 + 1e-12) throw std::invalid_argument("kappa requires |y| <= 0.99 or y = 1");

  const Complex a = static_cast<double>(n) - 1.0 + y;
  const Complex b = static_cast<double>(n);
  const Complex bma = b - a;  // = 1 - y, |.| >= 0.01 within the precondition
  Complex integral = 0;
  int k = 0;
  for (; k < kKappaPieces; ++k) {
    const Complex piece = (b1_piece(a, k) - b1_piece(b, k)) / bma;
    integral += piece;
    if (std::abs(piece) < cfg.tail_cutoff) {
      ++k;
      break;
    }
  }
  integral += (b1_tail(a + static_cast<double>(k)) - b1_tail(b + static_cast<double>(k))) / bma;
  return std::exp(-(1.0 - y) * integral);
}

AsymptoticReport gamma_ratio_check(long long n, Complex y, const GammaConfig& cfg) {
  if (n < 3) throw std::invalid_argument("gamma_ratio_check requires n >= 3");
  AsymptoticReport rep;
  rep.theorem = "L3.3";
  rep.n = n;
  const Complex nn = static_cast<double>(n);
  rep.exact_value = std::exp(log_gamma(nn - 1.0 + y, cfg) - log_gamma(nn, cfg));
  rep.main_term = kappa(y, n, cfg) * power(nn, y - 1.0);
  const double err = std::abs(rep.exact_value - rep.main_term);
  rep.relative_deviation = std::abs(rep.main_term) > 0 ? err / std::abs(rep.main_term) : err;
  rep.error_exponent_estimate = err * std::pow(static_cast<double>(n), 2.0 - y.real());
  return rep;
}

ValueWithTail euler_constant_C(Complex y, std::span<const double> pi_counts, std::uint64_t q, int D) {
  if (D >= static_cast<int>(pi_counts.size()))
    throw std::invalid_argument("need pi(d) for every d <= D");
  ValueWithTail out;
  Complex log_sum = 0;
  double inc_last = 0, inc_prev = 0;
  double qd = 1;
  for (int d = 1; d <= D; ++d) {
    qd *= static_cast<double>(q);
    const Complex x = 1.0 / qd;
    const Complex inc = pi_counts[static_cast<size_t>(d)] * (y * std::log(1.0 - x) - std::log(1.0 - y * x));
    log_sum += inc;
    inc_prev = inc_last;
    inc_last = std::abs(inc);
  }
  out.value = std::exp(log_sum);
  double ratio = inc_prev > 0 ? inc_last / inc_prev : 0.0;
  ratio = std::min(ratio, 0.9);
  out.tail = std::abs(out.value) * inc_last * ratio / (1.0 - ratio);
  return out;
}

std::vector<Complex> coeffs_A(std::span<const double> pi_counts, std::uint64_t q, int D,
                              long long n_ref, int r_max, double ring_radius, int M,
                              const GammaConfig& cfg) {
  if (ring_radius >= 1.0 || ring_radius <= 0.0) throw std::invalid_argument("ring_radius must lie in (0,1)");
  if (M < 4 * r_max) throw std::invalid_argument("need at least 4 r_max ring samples");
  std::vector<Complex> samples(static_cast<size_t>(M));
  for (int m = 0; m < M; ++m) {
    const double theta = 2.0 * std::numbers::pi * m / M;
    const Complex y = ring_radius * Complex(std::cos(theta), std::sin(theta));
    const Complex c = euler_constant_C(y, pi_counts, q, D).value;
    const Complex kap = n_ref > 0 ? kappa(y, n_ref, cfg) : Complex(1.0, 0.0);
    samples[static_cast<size_t>(m)] = kap * c * inv_gamma(y, cfg);
  }
  std::vector<Complex> coeffs(static_cast<size_t>(r_max + 1));
  for (int r = 0; r <= r_max; ++r) {
    Complex acc = 0;
    for (int m = 0; m < M; ++m) {
      const double theta = 2.0 * std::numbers::pi * m * r / M;
      acc += samples[static_cast<size_t>(m)] * Complex(std::cos(theta), -std::sin(theta));
    }
    coeffs[static_cast<size_t>(r)] = acc / (static_cast<double>(M) * std::pow(ring_radius, r));
  }
  return coeffs;
}

Complex main_term_count(Complex y, long long n, Complex C_y, std::uint64_t q, const GammaConfig& cfg) {
  const double qn = std::pow(static_cast<double>(q), static_cast<double>(n));
  return C_y * kappa(y, n, cfg) * inv_gamma(y, cfg) * qn *
         power(static_cast<double>(n), y - 1.0);
}

Complex main_term_residue(Complex y, long long n, Complex C_y, const ModulusCtx& ctx,
                          const GammaConfig& cfg) {
  double prefactor = 1.0 / static_cast<double>(ctx.phi());
  for (const auto& P : ctx.prime_factors()) {
    const double norm = std::pow(static_cast<double>(ctx.field().q()), P.degree());
    prefactor /= 1.0 - 1.0 / norm;
  }
  return prefactor * main_term_count(y, n, C_y, ctx.field().q(), cfg);
}

ValueWithTail h1_value(const ModulusCtx& ctx, LSeriesEngine& engine, const OmegaCountTable& tbl,
                       Complex y, int trunc) {
  const double q = static_cast<double>(ctx.field().q());
  const Complex u0(1.0 / q, 0.0);
  const Complex u0sq = u0 * u0;

  Complex ghat = 1;
  for (const auto& P : ctx.prime_factors()) ghat /= 1.0 + y * std::pow(u0, P.degree());

  const TailEval n_at_u0 = eval_with_tail(n_series(tbl, y, trunc), u0);
  const TailEval n_at_u0sq = eval_with_tail(n_series(tbl, y * y, trunc), u0sq);
  const TailEval pairs = eval_with_tail(engine.nonprincipal_pair_sum(y, trunc), u0);

  const double phi = static_cast<double>(ctx.phi());
  ValueWithTail out;
  out.value = ghat * power(1.0 - q * u0sq, y * y) * n_at_u0.value * n_at_u0.value /
              (phi * phi * n_at_u0sq.value) * pairs.value;
  out.tail = n_at_u0.tail_bound + n_at_u0sq.tail_bound + pairs.tail_bound;
  return out;
}

Complex main_term_variance(Complex y, long long n, const ValueWithTail& h1, std::uint64_t q,
                           const GammaConfig& cfg) {
  if (y.real() >= 0.5) throw std::invalid_argument("variance main term requires Re y < 1/2");
  const double qn = std::pow(static_cast<double>(q), static_cast<double>(n));
  return h1.value * kappa(2.0 * y, n, cfg) * inv_gamma(2.0 * y, cfg) * qn *
         power(static_cast<double>(n), 2.0 * y - 1.0);
}

Complex main_term_variance_half(long long n, const ValueWithTail& h1_at_half, std::uint64_t q) {
  return h1_at_half.value * std::pow(static_cast<double>(q), static_cast<double>(n));
}

VarianceConstants constants_AQ_BQ(const ModulusCtx& ctx, LSeriesEngine& engine) {
  if (ctx.phi() < 2) return {};  // empty character sum: variance identically zero
  const double q = static_cast<double>(ctx.field().q());
  const double phi = static_cast<double>(ctx.phi());

  double sum_l2 = 0, sum_l2_logderiv = 0;
  for (int idx = 0; idx < engine.char_count(); ++idx) {
    if (engine.is_principal(idx)) continue;
    const SpecialValues sv = l_special_values(engine, idx, Complex(1.0, 0.0), 0);
    const double l2 = std::norm(sv.L_at_1);
    sum_l2 += l2;
    sum_l2_logderiv += l2 * sv.logderiv_at_1.real();
  }

  double prod_inv = 1, prime_log_sum = 0;
  for (const auto& P : ctx.prime_factors()) {
    const double norm = std::pow(q, P.degree());
    prod_inv /= 1.0 + 1.0 / norm;
    prime_log_sum += std::log(norm) / (norm + 1.0);
  }

  VarianceConstants c;
  c.sum_l2 = sum_l2;
  const double scale = prod_inv / (q * q * phi * phi);
  c.a_q = (q - 1.0) * scale * sum_l2;
  const double lq = std::log(q);
  c.b_displayed = scale * ((q - 1.0) / lq * (2.0 * sum_l2_logderiv + prime_log_sum) + 2.0);
  c.b_derived = scale * ((q - 1.0) / lq * (2.0 * sum_l2_logderiv + prime_log_sum * sum_l2) + 2.0 * sum_l2);
  return c;
}

LinearFit fit_variance_constants(std::span<const std::pair<long long, double>> sums, std::uint64_t q) {
  // least squares on v_n q^{-(n+1)} = A (n+1) + B
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(sums.size());
  for (const auto& [n, v] : sums) {
    const double x = static_cast<double>(n + 1);
    const double y = v * std::pow(static_cast<double>(q), -static_cast<double>(n + 1));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = m * sxx - sx * sx;
  if (det == 0) throw std::invalid_argument("degenerate fit range");
  LinearFit fit;
  fit.a = (m * sxy - sx * sy) / det;
  fit.b = (sy * sxx - sx * sxy) / det;
  return fit;
}

std::vector<Complex> coeffs_A_hat(const ModulusCtx& ctx, LSeriesEngine& engine,
                                  const OmegaCountTable& tbl, long long n_ref, int r_max,
                                  double ring_radius, int M, int trunc, const GammaConfig& cfg) {
  if (ring_radius >= 0.5 || ring_radius <= 0.0)
    throw std::invalid_argument("A-hat ring radius must lie in (0, 1/2)");
  if (M < 4 * r_max) throw std::invalid_argument("need at least 4 r_max ring samples");
  std::vector<Complex> samples(static_cast<size_t>(M));
  for (int m = 0; m < M; ++m) {
    const double theta = 2.0 * std::numbers::pi * m / M;
    const Complex y = ring_radius * Complex(std::cos(theta), std::sin(theta));
    const ValueWithTail h1 = h1_value(ctx, engine, tbl, y, trunc);
    const Complex kap = n_ref > 0 ? kappa(2.0 * y, n_ref, cfg) : Complex(1.0, 0.0);
    samples[static_cast<size_t>(m)] = h1.value * kap * inv_gamma(2.0 * y, cfg);
  }
  std::vector<Complex> coeffs(static_cast<size_t>(r_max + 1));
  for (int r = 0; r <= r_max; ++r) {
    Complex acc = 0;
    for (int m = 0; m < M; ++m) {
      const double theta = 2.0 * std::numbers::pi * m * r / M;
      acc += samples[static_cast<size_t>(m)] * Complex(std::cos(theta), -std::sin(theta));
    }
    coeffs[static_cast<size_t>(r)] = acc / (static_cast<double>(M) * std::pow(ring_radius, r));
  }
  return coeffs;
}

namespace {

double predicted_sum(long long n, int t, std::span<const Complex> coeffs, double log_scale) {
  if (n < 3) throw std::invalid_argument("prediction requires n >= 3");
  if (t < 1) throw std::invalid_argument("prediction requires t >= 1");
  const double ln = log_scale * std::log(static_cast<double>(n));
  Complex sum = 0;
  const int r_max = static_cast<int>(coeffs.size()) - 1;
  for (int r = 1; r <= t && r <= r_max; ++r)
    sum += coeffs[static_cast<size_t>(r)] * std::pow(ln, t - r) / factorial(t - r);
  return sum.real() / static_cast<double>(n);
}

}  // namespace

double predicted_count_t(long long n, int t, std::span<const Complex> coeffs_a, std::uint64_t q) {
  return std::pow(static_cast<double>(q), static_cast<double>(n)) * predicted_sum(n, t, coeffs_a, 1.0);
}

double predicted_count_residue(long long n, int t, std::span<const Complex> coeffs_a,
                               const ModulusCtx& ctx) {
  double prefactor = 1.0 / static_cast<double>(ctx.phi());
  for (const auto& P : ctx.prime_factors()) {
    const double norm = std::pow(static_cast<double>(ctx.field().q()), P.degree());
    prefactor /= 1.0 - 1.0 / norm;
  }
  return prefactor * predicted_count_t(n, t, coeffs_a, ctx.field().q());
}

double predicted_count_variance(long long n, int t, std::span<const Complex> coeffs_a_hat,
                                std::uint64_t q) {
  return std::pow(static_cast<double>(q), static_cast<double>(n)) *
         predicted_sum(n, t, coeffs_a_hat, 2.0);
}

}  // namespace fqt
