#pragma once

#include <json.hpp>

#include "rmc/rankcodes.hpp"
#include "rmc/verify.hpp"

namespace rmc::io {

using nlohmann::json;

/// Field JSON: {"p":3,"e":1,"m":2,"base_poly":[1,1],"top_poly":[1,0,1]}.
/// Polynomials are constant-term-first full coefficient lists; the parser
/// also accepts the leading-1-omitted form. Base-field coefficients are
/// plain integers when e = 1 and arrays of e integers otherwise.
json field_to_json(const gf::FieldTower& t);
gf::FieldTower field_from_json(const json& j);

/// Elements: prime -> integer, base -> integer (e=1) or array, top -> array
/// of m base-element encodings.
json element_to_json(const gf::FieldTower& t, const gf::FieldElement& x);
gf::FieldElement element_from_json(const gf::FieldTower& t, gf::Level lvl, const json& j);

/// {"field":{...},"n":2,"generators":[[elt,elt],...]}
json code_to_json(const codes::GabidulinCode& C);
codes::GabidulinCode code_from_json(const json& j);

/// {"field":{...},"m":4,"n":2,"basis":[[[row],[row],...], ...]}
json delsarte_to_json(const codes::DelsarteCode& D);
codes::DelsarteCode delsarte_from_json(const json& j);

/// {"tag":"identity"} | {"tag":"hyperbolic"} | {"tag":"custom","B":[[...]]}
json form_to_json(const gf::FieldTower& t, const codes::BilinearFormSpec& form);
codes::BilinearFormSpec form_from_json(const gf::FieldTower& t, std::size_t n, const json& j);

/// {"field":{...},"vector":[elt,...]}
json vector_to_json(const gf::FieldTower& t, const std::vector<gf::FieldElement>& v);
std::vector<gf::FieldElement> vector_from_json(const gf::FieldTower& t, const json& j);

json basis_to_json(const gf::FieldTower& t, const codes::LBasis& b);
codes::LBasis basis_from_json(const gf::FieldTower& t, const json& j);

json report_to_json(const verify::TheoremReport& rep);

/// Canonical serialization used by the CLI: 2-space indent plus newline.
std::string dump(const json& j);

}  // namespace rmc::io
