#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace fqt {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// binom(m + k - 1, k): number of k-multisets from m symbols.
inline BigInt multiset_count(const BigInt& m, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= m + i;
    r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
  }
  return r;
}

inline BigInt pow_big(const BigInt& base, unsigned e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const BigRat& v) { return v.convert_to<double>(); }

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Lossless "num/den" form used across all serialized output.
inline std::string to_fraction(const BigRat& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace fqt
