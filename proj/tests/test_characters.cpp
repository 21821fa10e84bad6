#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fqt/character.hpp"
#include "fqt/errors.hpp"

using namespace fqt;

TEST_CASE("unit group of small moduli") {
  const FieldSpec f2 = FieldSpec::prime_field(2);

  // Q = T: the only unit residue is 1
  const ModulusCtx ct = ModulusCtx::build(f2, poly_from_text(f2, "T"));
  CHECK(ct.phi() == 1);
  CHECK(ct.generators().empty());

  // Q = T^2+T+1: Phi = 3, cyclic, generated by T with T^3 = 1
  const ModulusCtx c3 = ModulusCtx::build(f2, poly_from_text(f2, "T^2+T+1"));
  CHECK(c3.phi() == 3);
  REQUIRE(c3.generators().size() == 1);
  CHECK(c3.generators()[0].order == 3);
  const auto t_code = c3.residue_of(poly_from_text(f2, "T"));
  CHECK(c3.pow_mod(t_code, 3) == c3.one_code());
  CHECK(c3.mul_mod(t_code, t_code) == c3.residue_of(poly_from_text(f2, "T+1")));  // T^2 = T+1

  // Q = T over F_3: units {1, 2}, Phi = q - 1 = 2
  const FieldSpec f3 = FieldSpec::prime_field(3);
  const ModulusCtx c2 = ModulusCtx::build(f3, poly_from_text(f3, "T"));
  CHECK(c2.phi() == 2);
}

TEST_CASE("unit group invariant factors form a divisibility chain") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const FieldSpec f3 = FieldSpec::prime_field(3);
  for (const FieldSpec& F : {f2, f3}) {
    for (int deg = 1; deg <= 4; ++deg) {
      for (const auto& Q : enumerate_monic(F, deg)) {
        const ModulusCtx ctx = ModulusCtx::build(F, Q);
        long long prod = 1;
        const auto& gens = ctx.generators();
        for (size_t i = 0; i < gens.size(); ++i) {
          prod *= gens[i].order;
          CHECK(gens[i].order >= 2);
          if (i + 1 < gens.size()) CHECK(gens[i].order % gens[i + 1].order == 0);
          CHECK(ctx.pow_mod(gens[i].residue, gens[i].order) == ctx.one_code());
        }
        CHECK(prod == ctx.phi());
      }
    }
  }
}

TEST_CASE("unit group over an extension field") {
  // Q = T over F_4: units are the three nonzero constants, cyclic C_3
  const FieldSpec f4 = FieldSpec::extension(2, 2, {1, 1, 1});
  const ModulusCtx ctx = ModulusCtx::build(f4, poly_from_text(f4, "0,1"));
  CHECK(ctx.phi() == 3);
  REQUIRE(ctx.generators().size() == 1);
  CHECK(ctx.generators()[0].order == 3);
  const auto chars = characters(ctx);
  CHECK(chars.size() == 3);

  // orthogonality row sums: sum_chi chi(a) = 0 for a != 1
  for (const auto a : ctx.units()) {
    Complex sum = 0;
    for (const auto& chi : chars) sum += token_value(chi.eval_unit(a));
    const Complex expect = a == ctx.one_code() ? Complex(3, 0) : Complex(0, 0);
    CHECK(std::abs(sum - expect) < 1e-12);
  }

  // a quadratic modulus over F_4 (list form: pretty input is prime-field only)
  const ModulusCtx c2 = ModulusCtx::build(f4, poly_from_text(f4, "1,1,1"));
  long long prod = 1;
  for (const auto& g : c2.generators()) prod *= g.order;
  CHECK(prod == c2.phi());
}

TEST_CASE("phi budget guard") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  CHECK_THROWS_AS(ModulusCtx::build(f2, poly_from_text(f2, "T^5+T^2+1"), 10), resource_error);
}

TEST_CASE("character stream and evaluation for Q = T^2+T+1") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const ModulusCtx ctx = ModulusCtx::build(f2, poly_from_text(f2, "T^2+T+1"));
  const auto chars = characters(ctx);
  REQUIRE(chars.size() == 3);
  CHECK(chars[0].is_principal());
  CHECK(!chars[1].is_principal());

  const MonicPoly T = poly_from_text(f2, "T");
  const MonicPoly T1 = poly_from_text(f2, "T+1");

  // principal: 1 on everything coprime to Q
  CHECK(chars[0](T).is_one());
  CHECK(chars[0](T1).is_one());
  // chi(f) = 0 when gcd(f, Q) > 1
  CHECK(chars[1](poly_from_text(f2, "T^2+T+1")).zero);

  // nontrivial chi with chi(T) = omega: chi(T+1) = omega^2 since T+1 = T^2 mod Q
  for (int i = 1; i <= 2; ++i) {
    const RootToken wt = chars[static_cast<size_t>(i)](T);
    const RootToken wt1 = chars[static_cast<size_t>(i)](T1);
    CHECK(!wt.zero);
    CHECK(wt.den == 3);
    CHECK(wt1 == token_mul(wt, wt));
  }
  // the two nontrivial characters are conjugate
  CHECK(chars[1].conjugate() == chars[2]);
  CHECK(chars[1].power(2) == chars[2]);
  CHECK((chars[1] * chars[2]).is_principal());
}

TEST_CASE("multiplicativity as exact tokens") {
  const FieldSpec f3 = FieldSpec::prime_field(3);
  const ModulusCtx ctx = ModulusCtx::build(f3, poly_from_text(f3, "T^2+1"));
  const auto chars = characters(ctx);
  std::mt19937_64 rng(777);
  const auto random_monic = [&](int n) { return MonicPoly::from_index(f3, n, rng() % 9); };
  for (int trial = 0; trial < 30; ++trial) {
    const MonicPoly f = random_monic(2);
    const MonicPoly g = random_monic(2);
    const MonicPoly fg = monic_mul(f3, f, g);
    for (const auto& chi : chars) CHECK(chi(fg) == token_mul(chi(f), chi(g)));
  }
}

TEST_CASE("orthogonality: exact and complex-converted") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const FieldSpec f3 = FieldSpec::prime_field(3);
  for (const FieldSpec& F : {f2, f3}) {
    for (int deg = 1; deg <= 3; ++deg) {
      for (const auto& Q : enumerate_monic(F, deg)) {
        const ModulusCtx ctx = ModulusCtx::build(F, Q);
        const auto chars = characters(ctx);
        const auto& gens = ctx.generators();
        for (const auto a : ctx.units()) {
          for (const auto b : ctx.units()) {
            // exact route: sum over chi of chi(a) conj chi(b) factors through
            // the generator exponents; each cyclic factor contributes e_i or 0
            const auto& da = ctx.dlog(a);
            const auto& db = ctx.dlog(b);
            bool all_zero = true;
            for (size_t i = 0; i < gens.size(); ++i)
              all_zero &= ((da[i] - db[i]) % gens[i].order == 0);
            CHECK(all_zero == (a == b));

            // complex route
            Complex sum = 0;
            for (const auto& chi : chars)
              sum += token_value(chi.eval_unit(a)) * token_value(token_conj(chi.eval_unit(b)));
            const Complex expect = (a == b) ? Complex(static_cast<double>(ctx.phi()), 0) : Complex(0, 0);
            CHECK(std::abs(sum - expect) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("token sums stay exact") {
  TokenSum s;
  s.add(RootToken::from_exponent(1, 3), BigRat(2));
  s.add(RootToken::from_exponent(2, 3), BigRat(2));
  s.add(RootToken::one_token(), BigRat(2));
  CHECK(std::abs(s.value()) < 1e-14);  // 2(1 + w + w^2) = 0

  TokenSum t;
  t.add(RootToken::one_token(), BigRat(1, 2));
  t.add(RootToken::one_token(), BigRat(1, 2));
  const TokenSum prod = s * t;  // scaling by 1 keeps the cancellation
  CHECK(std::abs(prod.value()) < 1e-14);
}
