#pragma once

#include <json.hpp>
#include <string>

#include "dcoh/complex/cochain.hpp"
#include "dcoh/complex/simplicial_complex.hpp"
#include "dcoh/linalg/group_descriptor.hpp"

namespace dcoh {

/// {"name": ..., "vertex_count": n, "facets": [[...], ...]}. Throws ParseError
/// (with line/column or field path) or ValidationError.
ComplexPtr parse_complex(const std::string& document);
ComplexPtr complex_from_json(const nlohmann::json& j, const std::string& where = "");
nlohmann::json complex_to_json(const SimplicialComplex& x);

/// A complex reference: a space expression string or an inline complex object.
ComplexPtr complex_from_reference(const nlohmann::json& j, const std::string& where = "complex");
/// The name if it resolves back to the same complex, otherwise the inline object.
nlohmann::json complex_reference(const SimplicialComplex& x);

/// {"complex": ref, "degree": n, "ring": "Z"|"Z2"|"Q"|"QZ", "values": [[[simplex], "p/q"], ...]}.
Cochain parse_cochain(const std::string& document);
Cochain cochain_from_json(const nlohmann::json& j, const std::string& where = "");
/// Same grammar against a known complex; any "complex" field is ignored.
Cochain cochain_from_json(const nlohmann::json& j, const ComplexPtr& x, const std::string& where);
/// Omits zero values; simplices in table order.
nlohmann::json cochain_to_json(const Cochain& u, bool with_complex = true);
/// Values only (the "values" array).
nlohmann::json cochain_values_json(const Cochain& u);

/// {"free_rank": r, "torsion": [d...]} plus "divisible_rank" when nonzero.
nlohmann::json group_to_json(const GroupDescriptor& g);
/// An exact number: a JSON integer when it fits in 64 bits, else a string.
nlohmann::json integer_to_json(const Integer& v);

/// Parses text as JSON, reporting line and column on failure.
nlohmann::json parse_json_document(const std::string& document);

}  // namespace dcoh
