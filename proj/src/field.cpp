#include "fqt/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fqt/errors.hpp"

namespace fqt {

namespace {

constexpr std::uint64_t kMaxQ = 1u << 20;

using PVec = std::vector<std::uint32_t>;  // ascending coefficients over F_p

int deg(const PVec& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

void trim(PVec& a) { a.resize(static_cast<size_t>(deg(a) + 1)); }

PVec pmul(const PVec& a, const PVec& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  trim(r);
  return r;
}

std::uint32_t pinv_scalar(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0: a^(p-2) mod p
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// a mod m (m nonzero), in place on a copy
PVec pmod(PVec a, const PVec& m, std::uint32_t p) {
  const int dm = deg(m);
  const std::uint32_t lead_inv = pinv_scalar(m[static_cast<size_t>(dm)], p);
  for (int da = deg(a); da >= dm; da = deg(a)) {
    const std::uint64_t c = static_cast<std::uint64_t>(a[static_cast<size_t>(da)]) * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      auto& t = a[static_cast<size_t>(da - dm + i)];
      t = static_cast<std::uint32_t>((t + p - static_cast<std::uint32_t>(c * m[static_cast<size_t>(i)] % p)) % p);
    }
  }
  trim(a);
  return a;
}

bool irreducible_over_fp(const PVec& m, std::uint32_t p) {
  const int d = deg(m);
  if (d < 1) return false;
  if (d == 1) return true;
  // trial division by all monic polynomials of degree 1..d/2
  for (int dd = 1; 2 * dd <= d; ++dd) {
    std::uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PVec div(static_cast<size_t>(dd + 1), 0);
      std::uint64_t t = idx;
      for (int i = 0; i < dd; ++i) {
        div[static_cast<size_t>(i)] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      div[static_cast<size_t>(dd)] = 1;
      if (deg(pmod(m, div, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
  if (p > kMaxQ) throw resource_error("q exceeds the supported bound 2^20");
  FieldSpec s;
  s.p_ = p;
  s.f_ = 1;
  s.q_ = p;
  return s;
}

FieldSpec FieldSpec::extension(std::uint32_t p, int f) {
  if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
  if (f < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (f == 1) return prime_field(p);
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxQ) throw resource_error("q exceeds the supported bound 2^20");
  }
  // lexicographically-first irreducible: scan lower coefficients as a base-p counter
  for (std::uint64_t idx = 0;; ++idx) {
    if (idx >= q) throw internal_error("no irreducible modulus found");
    PVec m(static_cast<size_t>(f + 1), 0);
    std::uint64_t t = idx;
    for (int i = 0; i < f; ++i) {
      m[static_cast<size_t>(i)] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    m[static_cast<size_t>(f)] = 1;
    if (irreducible_over_fp(m, p)) return extension(p, f, m);
  }
}

FieldSpec FieldSpec::extension(std::uint32_t p, int f, std::vector<std::uint32_t> modulus) {
  if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
  if (f < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (f == 1) {
    if (!modulus.empty()) throw std::invalid_argument("prime field takes no modulus");
    return prime_field(p);
  }
  if (modulus.size() != static_cast<size_t>(f + 1) || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree f");
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0,p)");
  if (!irreducible_over_fp(modulus, p)) throw std::invalid_argument("modulus is not irreducible over F_p");
  std::uint64_t q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxQ) throw resource_error("q exceeds the supported bound 2^20");
  }
  FieldSpec s;
  s.p_ = p;
  s.f_ = f;
  s.q_ = q;
  s.modulus_ = std::move(modulus);
  return s;
}

std::vector<std::uint32_t> FieldSpec::decode(FieldElem a) const {
  std::vector<std::uint32_t> d(static_cast<size_t>(f_));
  std::uint64_t t = a.code;
  for (int i = 0; i < f_; ++i) {
    d[static_cast<size_t>(i)] = static_cast<std::uint32_t>(t % p_);
    t /= p_;
  }
  return d;
}

FieldElem FieldSpec::encode(const std::vector<std::uint32_t>& digits) const {
  std::uint64_t code = 0;
  for (size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i] % p_;
  return {code};
}

FieldElem FieldSpec::add(FieldElem a, FieldElem b) const {
  if (f_ == 1) return {(a.code + b.code) % p_};
  std::uint64_t code = 0, pw = 1;
  for (int i = 0; i < f_; ++i) {
    code += (a.code % p_ + b.code % p_) % p_ * pw;
    a.code /= p_;
    b.code /= p_;
    pw *= p_;
  }
  return {code};
}

FieldElem FieldSpec::neg(FieldElem a) const {
  if (f_ == 1) return {(p_ - a.code % p_) % p_};
  std::uint64_t code = 0, pw = 1;
  for (int i = 0; i < f_; ++i) {
    code += (p_ - a.code % p_) % p_ * pw;
    a.code /= p_;
    pw *= p_;
  }
  return {code};
}

FieldElem FieldSpec::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldSpec::mul(FieldElem a, FieldElem b) const {
  if (f_ == 1) return {a.code * b.code % p_};
  const PVec av = decode(a), bv = decode(b);
  PVec prod = pmul(av, bv, p_);
  if (deg(prod) >= f_) prod = pmod(std::move(prod), modulus_, p_);
  prod.resize(static_cast<size_t>(f_), 0);
  return encode(prod);
}

FieldElem FieldSpec::pow(FieldElem a, std::uint64_t k) const {
  FieldElem r = one(), b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

FieldElem FieldSpec::inv(FieldElem a) const {
  if (a.code == 0) throw std::domain_error("inversion of zero field element");
  return pow(a, q_ - 2);
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  if (f_ == 1) {
    os << "F_" << p_;
  } else {
    os << "F_" << q_ << " = F_" << p_ << "[x]/(";
    for (int i = f_; i >= 0; --i) {
      const auto c = modulus_[static_cast<size_t>(i)];
      if (c == 0) continue;
      if (i < f_) os << "+";
      if (i == 0 || c != 1) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace fqt
