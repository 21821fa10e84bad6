#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fqt/factor.hpp"
#include "fqt/poly.hpp"

namespace fqt {

struct UnitGroupGen {
  std::uint64_t residue = 0;  // residue code
  long long order = 0;
};

// The unit group (F_q[T]/Q)^* decomposed into cyclic factors with a
// divisibility chain e_{i+1} | e_i, plus a full discrete-log table.
// Residues of degree < deg Q are encoded as base-q integers of their
// coefficient codes.  Immutable after construction; share read-only.
class ModulusCtx {
 public:
  static ModulusCtx build(const FieldSpec& F, const MonicPoly& Q, long long phi_budget = 100000);

  const FieldSpec& field() const { return field_; }
  const MonicPoly& modulus() const { return Q_; }
  long long phi() const { return phi_; }
  const std::vector<UnitGroupGen>& generators() const { return gens_; }
  const std::vector<std::uint64_t>& units() const { return units_; }  // ascending codes
  // Distinct monic irreducibles dividing Q.
  const std::vector<MonicPoly>& prime_factors() const { return primes_; }

  bool is_unit(std::uint64_t code) const { return dlog_.count(code) != 0; }
  const std::vector<int>& dlog(std::uint64_t code) const;

  std::uint64_t one_code() const { return 1; }
  std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow_mod(std::uint64_t a, long long e) const;

  Poly decode_residue(std::uint64_t code) const;
  std::uint64_t encode_residue(const Poly& r) const;  // requires deg r < deg Q
  std::uint64_t residue_of(const Poly& f) const;
  std::uint64_t residue_of(const MonicPoly& f) const { return residue_of(f.as_poly()); }

  bool coprime_to_modulus(const MonicPoly& f) const;

 private:
  ModulusCtx() = default;

  FieldSpec field_;
  MonicPoly Q_;
  long long phi_ = 0;
  std::vector<MonicPoly> primes_;
  std::vector<UnitGroupGen> gens_;
  std::vector<std::uint64_t> units_;
  std::unordered_map<std::uint64_t, std::vector<int>> dlog_;
};

}  // namespace fqt
