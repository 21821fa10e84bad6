#include "fqt/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fqt {

void poly_trim(Poly& a) {
  while (!a.c.empty() && a.c.back().code == 0) a.c.pop_back();
}

Poly poly_add(const FieldSpec& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), FieldElem{0});
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  poly_trim(r);
  return r;
}

Poly poly_sub(const FieldSpec& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), FieldElem{0});
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  poly_trim(r);
  return r;
}

Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, FieldElem{0});
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].code == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].code == 0) continue;
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
  }
  poly_trim(r);
  return r;
}

Poly poly_scale(const FieldSpec& F, FieldElem s, const Poly& a) {
  if (s.code == 0) return {};
  Poly r = a;
  for (auto& x : r.c) x = F.mul(s, x);
  poly_trim(r);
  return r;
}

PolyDivMod poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  PolyDivMod out;
  out.rem = a;
  const int db = b.degree();
  if (a.degree() < db) return out;
  out.quot.c.assign(static_cast<size_t>(a.degree() - db + 1), FieldElem{0});
  const FieldElem lead_inv = F.inv(b.c.back());
  while (!out.rem.is_zero() && out.rem.degree() >= db) {
    const int shift = out.rem.degree() - db;
    const FieldElem factor = F.mul(out.rem.c.back(), lead_inv);
    out.quot.c[static_cast<size_t>(shift)] = factor;
    for (int i = 0; i <= db; ++i) {
      auto& t = out.rem.c[static_cast<size_t>(shift + i)];
      t = F.sub(t, F.mul(factor, b.c[static_cast<size_t>(i)]));
    }
    poly_trim(out.rem);
  }
  poly_trim(out.quot);
  return out;
}

Poly poly_mod(const FieldSpec& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).rem; }

Poly poly_make_monic(const FieldSpec& F, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(F, F.inv(a.c.back()), a);
}

Poly poly_gcd(const FieldSpec& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(F, a);
}

MonicPoly MonicPoly::from_coeffs(std::vector<FieldElem> coeffs) {
  if (coeffs.empty() || coeffs.back().code != 1)
    throw std::invalid_argument("monic polynomial requires leading coefficient 1");
  MonicPoly m;
  m.c_ = std::move(coeffs);
  return m;
}

MonicPoly MonicPoly::from_poly(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial is not monic");
  return from_coeffs(p.c);
}

MonicPoly MonicPoly::from_index(const FieldSpec& F, int n, std::uint64_t index) {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<FieldElem> c(static_cast<size_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    c[static_cast<size_t>(i)] = FieldElem{index % F.q()};
    index /= F.q();
  }
  if (index != 0) throw std::invalid_argument("monic index out of range");
  c[static_cast<size_t>(n)] = FieldElem{1};
  return from_coeffs(std::move(c));
}

std::uint64_t MonicPoly::index(const FieldSpec& F) const {
  std::uint64_t idx = 0;
  for (int i = degree() - 1; i >= 0; --i) idx = idx * F.q() + c_[static_cast<size_t>(i)].code;
  return idx;
}

bool canonical_less(const FieldSpec& F, const MonicPoly& a, const MonicPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.index(F) < b.index(F);
}

MonicPoly monic_mul(const FieldSpec& F, const MonicPoly& a, const MonicPoly& b) {
  return MonicPoly::from_poly(poly_mul(F, a.as_poly(), b.as_poly()));
}

MonicPoly monic_pow(const FieldSpec& F, const MonicPoly& a, int e) {
  MonicPoly r = MonicPoly::one();
  for (int i = 0; i < e; ++i) r = monic_mul(F, r, a);
  return r;
}

double norm_of(const FieldSpec& F, const MonicPoly& f) {
  return std::pow(static_cast<double>(F.q()), f.degree());
}

void for_each_monic(const FieldSpec& F, int n, const std::function<void(const MonicPoly&)>& fn) {
  if (n < 0) throw std::invalid_argument("degree must be >= 0");
  const std::uint64_t q = F.q();
  std::vector<FieldElem> c(static_cast<size_t>(n + 1), FieldElem{0});
  c.back() = FieldElem{1};
  MonicPoly f = MonicPoly::from_coeffs(c);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    fn(f);
    if (idx + 1 == total) break;
    // increment the base-q counter in the lower coefficients
    std::vector<FieldElem> nc = f.coeffs();
    for (int i = 0; i < n; ++i) {
      auto& d = nc[static_cast<size_t>(i)];
      if (d.code + 1 < q) {
        d.code += 1;
        break;
      }
      d.code = 0;
    }
    f = MonicPoly::from_coeffs(std::move(nc));
  }
}

std::vector<MonicPoly> enumerate_monic(const FieldSpec& F, int n) {
  std::vector<MonicPoly> out;
  for_each_monic(F, n, [&](const MonicPoly& f) { out.push_back(f); });
  return out;
}

std::string poly_to_text(const FieldSpec& F, const MonicPoly& f) {
  std::ostringstream os;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) os << ",";
    if (F.ext_degree() == 1) {
      os << f.coeff(i).code;
    } else {
      const auto digits = F.decode(f.coeff(i));
      os << "[";
      for (size_t j = 0; j < digits.size(); ++j) {
        if (j) os << ",";
        os << digits[j];
      }
      os << "]";
    }
  }
  return os.str();
}

std::string poly_to_pretty(const FieldSpec& F, const MonicPoly& f) {
  if (F.ext_degree() != 1) return poly_to_text(F, f);
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const auto c = f.coeff(i).code;
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "T";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

bool looks_like_pretty(const std::string& s) {
  return s.find('T') != std::string::npos || s.find('t') != std::string::npos;
}

MonicPoly parse_pretty(const FieldSpec& F, const std::string& text) {
  if (F.ext_degree() != 1)
    throw std::invalid_argument("pretty polynomial input is only supported over prime fields");
  // terms like 2T^3, T, 5 joined by + or -
  std::vector<std::int64_t> coeff;
  size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '(' || text[i] == ')')) ++i;
  };
  int sign = 1;
  skip_ws();
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == '+') {
      sign = 1;
      ++i;
      continue;
    }
    if (text[i] == '-') {
      sign = -1;
      ++i;
      continue;
    }
    std::int64_t c = 1;
    bool saw_digit = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      c = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        c = c * 10 + (text[i] - '0');
        ++i;
      }
      saw_digit = true;
    }
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    int e = 0;
    if (i < text.size() && (text[i] == 'T' || text[i] == 't')) {
      ++i;
      e = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw std::invalid_argument("malformed exponent in polynomial: " + text);
        e = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          e = e * 10 + (text[i] - '0');
          ++i;
        }
      }
    } else if (!saw_digit) {
      throw std::invalid_argument("malformed polynomial text: " + text);
    }
    if (static_cast<size_t>(e) >= coeff.size()) coeff.resize(static_cast<size_t>(e + 1), 0);
    coeff[static_cast<size_t>(e)] += sign * c;
    sign = 1;
    skip_ws();
  }
  const std::int64_t p = F.p();
  std::vector<FieldElem> out(coeff.size());
  for (size_t j = 0; j < coeff.size(); ++j)
    out[j] = FieldElem{static_cast<std::uint64_t>(((coeff[j] % p) + p) % p)};
  while (out.size() > 1 && out.back().code == 0) out.pop_back();
  return MonicPoly::from_coeffs(std::move(out));
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

MonicPoly poly_from_text(const FieldSpec& F, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty polynomial text");
  if (looks_like_pretty(text)) return parse_pretty(F, text);
  const auto parts = split_top_level(text);
  std::vector<FieldElem> c;
  c.reserve(parts.size());
  for (const auto& part : parts) {
    std::string tok = part;
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](unsigned char ch) { return std::isspace(ch); }),
              tok.end());
    if (tok.empty()) throw std::invalid_argument("malformed polynomial text: " + text);
    if (tok.front() == '[') {
      if (tok.back() != ']') throw std::invalid_argument("malformed bracketed coefficient: " + tok);
      std::vector<std::uint32_t> digits;
      std::istringstream is(tok.substr(1, tok.size() - 2));
      std::string d;
      while (std::getline(is, d, ',')) digits.push_back(static_cast<std::uint32_t>(std::stoul(d)));
      if (static_cast<int>(digits.size()) > F.ext_degree())
        throw std::invalid_argument("coefficient vector longer than extension degree");
      digits.resize(static_cast<size_t>(F.ext_degree()), 0);
      c.push_back(F.encode(digits));
    } else {
      const std::uint64_t v = std::stoull(tok);
      if (F.ext_degree() == 1) {
        c.push_back(FieldElem{v % F.p()});
      } else {
        if (v >= F.q()) throw std::invalid_argument("coefficient code out of range");
        c.push_back(FieldElem{v});
      }
    }
  }
  return MonicPoly::from_coeffs(std::move(c));
}

}  // namespace fqt
