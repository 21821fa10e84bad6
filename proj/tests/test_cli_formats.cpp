#include <doctest.h>

#include "fqt/json_io.hpp"
#include "fqt/selfcheck.hpp"

using namespace fqt;

TEST_CASE("omega table JSON schema") {
  const OmegaCountTable tbl = build_omega_table(2, 4, irreducible_counts(2, 4));
  const Json j = omega_table_to_json(tbl);
  CHECK(j["q"] == 2);
  CHECK(j["n_max"] == 4);
  CHECK(j["counts"].size() == 5);
  CHECK(j["counts"][4].size() == 5);
  CHECK(j["counts"][4][2] == "5");  // big integers as decimal strings
}

TEST_CASE("L-report JSON carries roots and special values") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const ModulusCtx ctx = ModulusCtx::build(f2, poly_from_text(f2, "T^2+T+1"));
  LSeriesEngine engine(ctx);
  LPoly lp = engine.l_poly(1);
  grh_certify(lp, 1e-6);
  const SpecialValues sv = l_special_values(engine, 1, Complex(1, 0), 0);
  const Json j = lpoly_report_to_json(ctx, lp, &sv);
  CHECK(j["observed_degree"] == 1);
  CHECK(j["inverse_roots"].size() == 1);
  CHECK(j["inverse_roots"][0]["class"] == "unit");
  CHECK(j["L_at_1"]["re"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("csv escaping follows RFC quoting") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("rational and complex serialization") {
  CHECK(to_fraction(BigRat(55, 16)) == "55/16");
  CHECK(to_fraction(BigRat(-2, 4)) == "-1/2");
  const Json z = complex_to_json({1.5, -2.0});
  CHECK(z["re"] == 1.5);
  CHECK(z["im"] == -2.0);
}

TEST_CASE("verify suites are deterministic for a fixed seed") {
  const auto a = run_suite_variance(42);
  const auto b = run_suite_variance(42);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].detail == b[i].detail);
  }
}
