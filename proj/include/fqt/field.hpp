#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fqt {

// An element of F_q, stored as a code in [0, q).  For q = p^f the code is the
// base-p encoding of the coefficient vector of the residue modulo the field's
// defining polynomial (digit i = coefficient of x^i).
struct FieldElem {
  std::uint64_t code = 0;

  friend bool operator==(FieldElem a, FieldElem b) { return a.code == b.code; }
  friend bool operator!=(FieldElem a, FieldElem b) { return a.code != b.code; }
  friend bool operator<(FieldElem a, FieldElem b) { return a.code < b.code; }
};

// F_q with q = p^f.  For f > 1 arithmetic is mod (p, modulus), where modulus is
// a monic irreducible of degree f over F_p.  Immutable after construction.
class FieldSpec {
 public:
  FieldSpec() = default;  // F_2

  static FieldSpec prime_field(std::uint32_t p);
  // Uses the lexicographically-first (by ascending coefficient vector read as a
  // base-p integer) monic irreducible of degree f.
  static FieldSpec extension(std::uint32_t p, int f);
  // modulus: ascending coefficients over F_p, length f + 1, monic; validated
  // irreducible.
  static FieldSpec extension(std::uint32_t p, int f, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  int ext_degree() const { return f_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;  // throws std::domain_error on zero
  FieldElem pow(FieldElem a, std::uint64_t k) const;

  // Base-p digits of the code, length ext_degree().
  std::vector<std::uint32_t> decode(FieldElem a) const;
  FieldElem encode(const std::vector<std::uint32_t>& digits) const;

  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.f_ == b.f_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint32_t p_ = 2;
  int f_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint32_t> modulus_;  // empty when f == 1
};

bool is_prime_u32(std::uint32_t n);

}  // namespace fqt
