#include "fqt/json_io.hpp"

namespace fqt {

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json omega_table_to_json(const OmegaCountTable& tbl) {
  Json rows = Json::array();
  for (int n = 0; n <= tbl.n_max; ++n) {
    Json row = Json::array();
    for (int t = 0; t <= n; ++t) row.push_back(to_decimal(tbl.at(n, t)));
    rows.push_back(row);
  }
  return Json{{"q", tbl.q}, {"n_max", tbl.n_max}, {"counts", rows}};
}

Json lpoly_report_to_json(const ModulusCtx& ctx, const LPoly& lp, const SpecialValues* sv) {
  Json j;
  j["modulus"] = poly_to_text(ctx.field(), ctx.modulus());
  j["exponents"] = lp.chi.exponents();
  Json coeffs = Json::array();
  for (const auto& c : lp.coeffs) coeffs.push_back(complex_to_json(c));
  j["l_coeffs"] = coeffs;
  j["observed_degree"] = lp.degree();
  Json roots = Json::array();
  for (const auto& r : lp.inverse_roots) {
    Json jr = complex_to_json(r.alpha);
    jr["class"] = r.cls == 'u' ? "unit" : "sqrt_q";
    jr["band_deviation"] = r.deviation;
    roots.push_back(jr);
  }
  j["inverse_roots"] = roots;
  if (sv) {
    j["L_at_1"] = complex_to_json(sv->L_at_1);
    j["logderiv_at_1"] = complex_to_json(sv->logderiv_at_1);
    j["tail"] = sv->tail;
  }
  return j;
}

Json asymptotic_report_to_json(const AsymptoticReport& rep) {
  Json j;
  j["theorem"] = rep.theorem;
  j["n"] = rep.n;
  j["exact_value"] = complex_to_json(rep.exact_value);
  j["main_term"] = complex_to_json(rep.main_term);
  j["relative_deviation"] = rep.relative_deviation;
  if (rep.error_exponent_estimate)
    j["error_exponent_estimate"] = *rep.error_exponent_estimate;
  else
    j["error_exponent_estimate"] = nullptr;
  return j;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace fqt
