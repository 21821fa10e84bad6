#include <doctest.h>

#include <stdexcept>

#include "fqt/poly.hpp"

using namespace fqt;

TEST_CASE("prime field arithmetic") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  CHECK(f2.add({1}, {1}) == f2.zero());  // characteristic 2

  const FieldSpec f3 = FieldSpec::prime_field(3);
  CHECK(f3.inv({2}) == FieldElem{2});  // 2*2 = 4 = 1 mod 3
  CHECK(f3.mul({2}, {2}) == f3.one());

  CHECK_THROWS_AS(f3.inv(f3.zero()), std::domain_error);
  CHECK_THROWS_AS(FieldSpec::prime_field(4), std::invalid_argument);
}

TEST_CASE("F_4 extension arithmetic") {
  // F_4 = F_2[x]/(x^2+x+1); codes: 0, 1, 2 = x, 3 = x+1
  const FieldSpec f4 = FieldSpec::extension(2, 2, {1, 1, 1});
  CHECK(f4.q() == 4);
  CHECK(f4.mul({2}, {2}) == FieldElem{3});  // x*x = x+1
  CHECK(f4.mul({2}, {3}) == f4.one());      // x(x+1) = x^2+x = 1
  for (std::uint64_t c = 1; c < 4; ++c) CHECK(f4.mul(f4.inv({c}), {c}) == f4.one());

  // lexicographically-first modulus for degree 2 over F_2 is x^2+x+1
  const FieldSpec auto4 = FieldSpec::extension(2, 2);
  CHECK(auto4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("field axioms on a sample of F_9") {
  const FieldSpec f9 = FieldSpec::extension(3, 2);
  CHECK(f9.q() == 9);
  for (std::uint64_t a = 0; a < 9; ++a)
    for (std::uint64_t b = 0; b < 9; ++b) {
      CHECK(f9.add({a}, {b}) == f9.add({b}, {a}));
      CHECK(f9.mul({a}, {b}) == f9.mul({b}, {a}));
      CHECK(f9.mul({a}, f9.add({b}, {1})) ==
            f9.add(f9.mul({a}, {b}), f9.mul({a}, {1})));
    }
  // pow via square-and-multiply: Fermat a^q = a
  for (std::uint64_t a = 0; a < 9; ++a) CHECK(f9.pow({a}, 9) == FieldElem{a});
}

TEST_CASE("monic enumeration counts and order") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  CHECK(enumerate_monic(f2, 0).size() == 1);
  CHECK(enumerate_monic(f2, 0)[0] == MonicPoly::one());

  const auto quad = enumerate_monic(f2, 2);
  REQUIRE(quad.size() == 4);
  // canonical order: T^2, T^2+1, T^2+T, T^2+T+1
  CHECK(poly_to_pretty(f2, quad[0]) == "T^2");
  CHECK(poly_to_pretty(f2, quad[1]) == "T^2+1");
  CHECK(poly_to_pretty(f2, quad[2]) == "T^2+T");
  CHECK(poly_to_pretty(f2, quad[3]) == "T^2+T+1");
  for (size_t i = 0; i + 1 < quad.size(); ++i) CHECK(canonical_less(f2, quad[i], quad[i + 1]));

  const FieldSpec f3 = FieldSpec::prime_field(3);
  CHECK(enumerate_monic(f3, 3).size() == 27);  // q^n
}

TEST_CASE("poly divmod and gcd") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const MonicPoly a = poly_from_text(f2, "T^4+T^2+1");
  const MonicPoly b = poly_from_text(f2, "T^2+T+1");
  const auto dm = poly_divmod(f2, a.as_poly(), b.as_poly());
  CHECK(dm.rem.is_zero());
  CHECK(MonicPoly::from_poly(dm.quot) == b);  // (T^2+T+1)^2 = T^4+T^2+1 over F_2

  // gcd((T^2+T+1)^2, T(T^2+T+1)) = T^2+T+1
  const Poly g = poly_gcd(f2, a.as_poly(), poly_from_text(f2, "T^3+T^2+T").as_poly());
  CHECK(MonicPoly::from_poly(g) == b);
  // coprime pair
  CHECK(poly_gcd(f2, a.as_poly(), poly_from_text(f2, "T^2+T").as_poly()).degree() == 0);
}

TEST_CASE("text round trip") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const MonicPoly p = poly_from_text(f2, "1,1,1");
  CHECK(poly_to_pretty(f2, p) == "T^2+T+1");
  CHECK(poly_to_text(f2, p) == "1,1,1");
  CHECK(poly_from_text(f2, "T^2+T+1") == p);

  const FieldSpec f3 = FieldSpec::prime_field(3);
  CHECK(poly_to_text(f3, poly_from_text(f3, "T^3+2T+1")) == "1,2,0,1");

  const FieldSpec f4 = FieldSpec::extension(2, 2, {1, 1, 1});
  const MonicPoly e = poly_from_text(f4, "[0,1],[1,0]");  // T + x
  CHECK(e.degree() == 1);
  CHECK(e.coeff(0) == FieldElem{2});
  CHECK(poly_to_text(f4, e) == "[0,1],[1,0]");

  CHECK_THROWS_AS(poly_from_text(f2, "1,1,0"), std::invalid_argument);  // not monic
  CHECK_THROWS_AS(poly_from_text(f2, ""), std::invalid_argument);
}
