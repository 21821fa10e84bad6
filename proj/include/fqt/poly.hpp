#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fqt/field.hpp"

namespace fqt {

// Dense polynomial over F_q, ascending coefficients, no trailing zeros
// (empty vector = the zero polynomial).
struct Poly {
  std::vector<FieldElem> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  FieldElem coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : FieldElem{0};
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

void poly_trim(Poly& a);
Poly poly_add(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldSpec& F, FieldElem s, const Poly& a);
struct PolyDivMod {
  Poly quot, rem;
};
PolyDivMod poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_mod(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_gcd(const FieldSpec& F, Poly a, Poly b);  // monic-normalized (or zero)
Poly poly_make_monic(const FieldSpec& F, const Poly& a);

// Monic polynomial in F_q[T].  Degree 0 is the constant 1 (the empty product).
class MonicPoly {
 public:
  MonicPoly() : c_{FieldElem{1}} {}  // the constant 1

  static MonicPoly one() { return MonicPoly(); }
  // Validates that the leading coefficient is 1.
  static MonicPoly from_coeffs(std::vector<FieldElem> coeffs);
  static MonicPoly from_poly(const Poly& p);
  // The index-th monic of degree n in canonical order (index < q^n): lower
  // coefficients are the base-q digits of index, coefficient of T^0 least
  // significant.
  static MonicPoly from_index(const FieldSpec& F, int n, std::uint64_t index);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  FieldElem coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : FieldElem{0};
  }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  Poly as_poly() const { return Poly{c_}; }

  bool is_one() const { return c_.size() == 1; }
  std::uint64_t index(const FieldSpec& F) const;  // position within its degree

  friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const MonicPoly& a, const MonicPoly& b) { return !(a == b); }

 private:
  std::vector<FieldElem> c_;  // ascending; back() == 1
};

// Canonical order: by degree, then by index (ascending coefficient vector read
// as a base-q integer, constant coefficient least significant).
bool canonical_less(const FieldSpec& F, const MonicPoly& a, const MonicPoly& b);

MonicPoly monic_mul(const FieldSpec& F, const MonicPoly& a, const MonicPoly& b);
MonicPoly monic_pow(const FieldSpec& F, const MonicPoly& a, int e);
// |f| = q^{deg f}, computed on demand.
double norm_of(const FieldSpec& F, const MonicPoly& f);

// Calls fn on every monic polynomial of degree n in canonical order (q^n of
// them).  The caller guards against infeasible q^n.
void for_each_monic(const FieldSpec& F, int n, const std::function<void(const MonicPoly&)>& fn);
std::vector<MonicPoly> enumerate_monic(const FieldSpec& F, int n);

// Text format: ascending coefficient list "1,1,1" (= T^2+T+1) for prime
// fields; extension-field coefficients as bracketed digit vectors "[0,1],[1,0]".
// Pretty input like "T^2+T+1", "T^3+2*T+1", "(T+1)" is accepted for prime fields.
std::string poly_to_text(const FieldSpec& F, const MonicPoly& f);
std::string poly_to_pretty(const FieldSpec& F, const MonicPoly& f);
MonicPoly poly_from_text(const FieldSpec& F, const std::string& text);

}  // namespace fqt
