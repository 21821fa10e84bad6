#include "fqt/character.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "fqt/errors.hpp"

namespace fqt {

RootToken RootToken::from_exponent(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("token denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const long long g = std::gcd(num, den);
  return {false, num / (g ? g : 1), den / (g ? g : 1)};
}

RootToken token_mul(const RootToken& a, const RootToken& b) {
  if (a.zero || b.zero) return RootToken::zero_token();
  const long long l = std::lcm(a.den, b.den);
  return RootToken::from_exponent(a.num * (l / a.den) + b.num * (l / b.den), l);
}

RootToken token_conj(const RootToken& a) {
  if (a.zero) return a;
  return RootToken::from_exponent(-a.num, a.den);
}

RootToken token_pow(const RootToken& a, long long k) {
  if (a.zero) return a;
  const long long r = ((k % a.den) + a.den) % a.den;
  return RootToken::from_exponent(a.num * r, a.den);
}

Complex token_value(const RootToken& a) {
  if (a.zero) return {0.0, 0.0};
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(a.num) / static_cast<double>(a.den);
  return {std::cos(theta), std::sin(theta)};
}

DirichletChar::DirichletChar(const ModulusCtx* ctx, std::vector<int> expo) : ctx_(ctx), expo_(std::move(expo)) {
  const auto& gens = ctx_->generators();
  if (expo_.size() != gens.size()) throw std::invalid_argument("exponent vector length mismatch");
  for (size_t i = 0; i < expo_.size(); ++i)
    if (expo_[i] < 0 || expo_[i] >= gens[i].order)
      throw std::invalid_argument("character exponent out of range");
}

bool DirichletChar::is_principal() const {
  for (const int a : expo_)
    if (a != 0) return false;
  return true;
}

RootToken DirichletChar::eval_unit(std::uint64_t unit_code) const {
  const auto& gens = ctx_->generators();
  const auto& x = ctx_->dlog(unit_code);
  // exponent = sum a_i x_i / e_i mod 1; all e_i divide e_1, so e_1 is a common
  // denominator
  const long long e1 = gens.empty() ? 1 : gens.front().order;
  long long num = 0;
  for (size_t i = 0; i < gens.size(); ++i) {
    const long long scale = e1 / gens[i].order;
    num = (num + static_cast<long long>(expo_[i]) * x[i] % e1 * scale) % e1;
  }
  return RootToken::from_exponent(num, e1);
}

RootToken DirichletChar::operator()(const MonicPoly& f) const {
  const auto code = ctx_->residue_of(f);
  if (!ctx_->is_unit(code)) return RootToken::zero_token();
  return eval_unit(code);
}

DirichletChar DirichletChar::conjugate() const {
  const auto& gens = ctx_->generators();
  std::vector<int> e(expo_.size());
  for (size_t i = 0; i < expo_.size(); ++i)
    e[i] = expo_[i] == 0 ? 0 : static_cast<int>(gens[i].order) - expo_[i];
  return {ctx_, std::move(e)};
}

DirichletChar DirichletChar::power(long long k) const {
  const auto& gens = ctx_->generators();
  std::vector<int> e(expo_.size());
  for (size_t i = 0; i < expo_.size(); ++i) {
    const long long m = gens[i].order;
    e[i] = static_cast<int>(((expo_[i] * (k % m)) % m + m) % m);
  }
  return {ctx_, std::move(e)};
}

DirichletChar DirichletChar::operator*(const DirichletChar& other) const {
  if (ctx_ != other.ctx_) throw std::invalid_argument("characters over different moduli");
  const auto& gens = ctx_->generators();
  std::vector<int> e(expo_.size());
  for (size_t i = 0; i < expo_.size(); ++i)
    e[i] = static_cast<int>((expo_[i] + other.expo_[i]) % gens[i].order);
  return {ctx_, std::move(e)};
}

long long DirichletChar::index() const {
  const auto& gens = ctx_->generators();
  long long idx = 0;
  for (size_t i = 0; i < expo_.size(); ++i) idx = idx * gens[i].order + expo_[i];
  return idx;
}

std::vector<DirichletChar> characters(const ModulusCtx& ctx) {
  const auto& gens = ctx.generators();
  std::vector<DirichletChar> out;
  out.reserve(static_cast<size_t>(ctx.phi()));
  std::vector<int> expo(gens.size(), 0);
  for (;;) {
    out.emplace_back(&ctx, expo);
    // mixed-radix increment, last generator fastest
    size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++expo[i] < gens[i].order) break;
      expo[i] = 0;
      if (i == 0) {
        if (static_cast<long long>(out.size()) != ctx.phi())
          throw internal_error("character count disagrees with Phi(Q)");
        return out;
      }
    }
    if (gens.empty()) {
      if (ctx.phi() != 1) throw internal_error("trivial generator set with Phi > 1");
      return out;
    }
  }
}

void TokenSum::add(const RootToken& t, const BigRat& coeff) {
  if (t.zero || coeff == 0) return;
  auto& slot = terms_[{t.num, t.den}];
  slot += coeff;
  if (slot == 0) terms_.erase({t.num, t.den});
}

TokenSum TokenSum::operator*(const TokenSum& other) const {
  TokenSum out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_)
      out.add(token_mul(RootToken{false, ea.first, ea.second}, RootToken{false, eb.first, eb.second}), ca * cb);
  return out;
}

TokenSum TokenSum::conj() const {
  TokenSum out;
  for (const auto& [e, c] : terms_) out.add(token_conj(RootToken{false, e.first, e.second}), c);
  return out;
}

Complex TokenSum::value() const {
  Complex v = 0;
  for (const auto& [e, c] : terms_) v += to_double(c) * token_value(RootToken{false, e.first, e.second});
  return v;
}

}  // namespace fqt
