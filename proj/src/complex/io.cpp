#include "dcoh/complex/io.hpp"

#include "dcoh/complex/constructions.hpp"
#include "dcoh/errors.hpp"

namespace dcoh {

using nlohmann::json;

json parse_json_document(const std::string& document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < document.size(); ++i) {
      if (document[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

namespace {

std::string field(const std::string& where, const std::string& name) { return where.empty() ? name : where + "." + name; }

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError("field " + (where.empty() ? std::string("<root>") : where) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("field " + field(where, key) + ": missing");
  return *it;
}

std::uint64_t require_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError("field " + where + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

Simplex simplex_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("field " + where + ": expected an array of vertices");
  Simplex s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::uint64_t v = require_count(j[i], where + "[" + std::to_string(i) + "]");
    if (v > 0xffffffffu) throw ValidationError("field " + where + ": vertex too large");
    s.push_back(static_cast<Vertex>(v));
  }
  return s;
}

Rational coefficient_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
  } catch (const std::invalid_argument& e) {
    throw ParseError("field " + where + ": " + e.what());
  }
  throw ParseError("field " + where + ": expected a coefficient string such as \"1/2\"");
}

}  // namespace

ComplexPtr complex_from_json(const json& j, const std::string& where) {
  std::string name = "inline";
  if (j.is_object() && j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("field " + field(where, "name") + ": expected a string");
    name = j["name"].get<std::string>();
  }
  std::uint64_t n = require_count(require(j, "vertex_count", where), field(where, "vertex_count"));
  const json& fj = require(j, "facets", where);
  if (!fj.is_array()) throw ParseError("field " + field(where, "facets") + ": expected an array");
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < fj.size(); ++i)
    facets.push_back(simplex_from_json(fj[i], field(where, "facets") + "[" + std::to_string(i) + "]"));
  return SimplicialComplex::make(name, n, std::move(facets));
}

ComplexPtr parse_complex(const std::string& document) { return complex_from_json(parse_json_document(document)); }

json complex_to_json(const SimplicialComplex& x) {
  json facets = json::array();
  for (const auto& f : x.facets()) facets.push_back(f);
  return json{{"name", x.name()}, {"vertex_count", x.vertex_count()}, {"facets", facets}};
}

ComplexPtr complex_from_reference(const json& j, const std::string& where) {
  if (j.is_string()) return resolve_space(j.get<std::string>());
  if (j.is_object()) return complex_from_json(j, where);
  throw ParseError("field " + where + ": expected a space name or an inline complex");
}

json complex_reference(const SimplicialComplex& x) {
  try {
    ComplexPtr named = resolve_space(x.name());
    if (same_complex(*named, x)) return x.name();
  } catch (const std::exception&) {
  }
  return complex_to_json(x);
}

Cochain cochain_from_json(const json& j, const std::string& where) {
  ComplexPtr x = complex_from_reference(require(j, "complex", where), field(where, "complex"));
  return cochain_from_json(j, x, where);
}

Cochain cochain_from_json(const json& j, const ComplexPtr& x, const std::string& where) {
  const json& dj = require(j, "degree", where);
  if (!dj.is_number_integer()) throw ParseError("field " + field(where, "degree") + ": expected an integer");
  int degree = dj.get<int>();
  if (degree < 0) throw DegreeError("field " + field(where, "degree") + ": negative degree");
  const json& rj = require(j, "ring", where);
  if (!rj.is_string()) throw ParseError("field " + field(where, "ring") + ": expected a string");
  Ring ring = parse_ring(rj.get<std::string>());
  std::vector<Rational> values(x->count(degree), Rational(0));
  std::vector<char> seen(values.size(), 0);
  const json& vj = require(j, "values", where);
  if (!vj.is_array()) throw ParseError("field " + field(where, "values") + ": expected an array");
  for (std::size_t i = 0; i < vj.size(); ++i) {
    std::string at = field(where, "values") + "[" + std::to_string(i) + "]";
    if (!vj[i].is_array() || vj[i].size() != 2) throw ParseError("field " + at + ": expected [[simplex], \"coefficient\"]");
    Simplex s = simplex_from_json(vj[i][0], at + "[0]");
    if (static_cast<int>(s.size()) != degree + 1)
      throw ValidationError("field " + at + ": simplex " + simplex_to_string(s) + " has the wrong dimension");
    auto idx = x->index_of(s);
    if (!idx) throw ValidationError("field " + at + ": simplex " + simplex_to_string(s) + " is not in the complex");
    if (seen[*idx]) throw ValidationError("field " + at + ": simplex " + simplex_to_string(s) + " listed twice");
    seen[*idx] = 1;
    values[*idx] = coefficient_from_json(vj[i][1], at + "[1]");
  }
  try {
    return Cochain(x, degree, ring, std::move(values));
  } catch (const ValidationError& e) {
    throw ValidationError("field " + field(where, "values") + ": " + e.what());
  }
}

Cochain parse_cochain(const std::string& document) { return cochain_from_json(parse_json_document(document)); }

json cochain_values_json(const Cochain& u) {
  json values = json::array();
  const auto& simplices = u.complex()->simplices(u.degree());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) values.push_back(json::array({simplices[i], to_string(u[i])}));
  return values;
}

json cochain_to_json(const Cochain& u, bool with_complex) {
  json out;
  if (with_complex) out["complex"] = complex_reference(*u.complex());
  out["degree"] = u.degree();
  out["ring"] = ring_name(u.ring());
  out["values"] = cochain_values_json(u);
  return out;
}

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json group_to_json(const GroupDescriptor& g) {
  json torsion = json::array();
  for (const auto& d : g.invariant_factors) torsion.push_back(integer_to_json(d));
  json out{{"free_rank", g.free_rank}, {"torsion", torsion}};
  if (g.divisible_rank != 0) out["divisible_rank"] = g.divisible_rank;
  return out;
}

}  // namespace dcoh
