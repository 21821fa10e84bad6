#pragma once

#include <json.hpp>

#include "fqt/asymptotics.hpp"

namespace fqt {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Json omega_table_to_json(const OmegaCountTable& tbl);
Json lpoly_report_to_json(const ModulusCtx& ctx, const LPoly& lp, const SpecialValues* sv);
Json asymptotic_report_to_json(const AsymptoticReport& rep);

// CSV field quoting (RFC-style: quote when the value contains , " or newline).
std::string csv_escape(const std::string& field);

}  // namespace fqt
