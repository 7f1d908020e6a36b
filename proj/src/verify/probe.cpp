#include "dcoh/verify/probe.hpp"

#include "dcoh/cohomology/coefficients.hpp"
#include "dcoh/complex/constructions.hpp"
#include "dcoh/complex/io.hpp"
#include "dcoh/diffcoh/checks.hpp"
#include "dcoh/errors.hpp"
#include "dcoh/linalg/errors.hpp"
#include "dcoh/steenrod/steenrod.hpp"
#include "dcoh/verify/reports.hpp"

namespace dcoh::verify {

using nlohmann::json;

Expr leaf(const Cochain& u) {
  auto n = std::make_shared<Node>();
  n->op = "cochain";
  n->cochain = u;
  return n;
}

Expr leaf(const DiffCocycle& x) {
  auto n = std::make_shared<Node>();
  n->op = "diff";
  n->diff = x;
  return n;
}

Expr make(std::string op, std::vector<Expr> args, json params) {
  auto n = std::make_shared<Node>();
  n->op = std::move(op);
  n->args = std::move(args);
  n->params = std::move(params);
  return n;
}

namespace {

const Cochain& as_cochain(const Value& v, const std::string& op) {
  if (auto c = std::get_if<Cochain>(&v)) return *c;
  throw InputError(op + ": expected a cochain argument");
}

const DiffCocycle& as_diff(const Value& v, const std::string& op) {
  if (auto d = std::get_if<DiffCocycle>(&v)) return *d;
  throw InputError(op + ": expected a differential cocycle argument");
}

int int_param(const Node& n, const char* key) {
  auto it = n.params.find(key);
  if (it == n.params.end() || !it->is_number_integer()) throw InputError(n.op + ": missing integer parameter " + key);
  return it->get<int>();
}

void arity(const Node& n, std::size_t k) {
  if (n.args.size() != k)
    throw InputError(n.op + ": expected " + std::to_string(k) + " arguments, got " + std::to_string(n.args.size()));
}

// Class-level operations go through CohomologyClass so non-cocycles are rejected.
Cochain via_class(const Cochain& u, CohomologyClass (*f)(const CohomologyClass&)) {
  return f(CohomologyClass(u)).representative();
}

bool beyond_top(const Cochain& u) { return u.degree() > u.complex()->dimension(); }

}  // namespace

Value evaluate(const Expr& e) {
  const Node& n = *e;
  if (n.op == "cochain") return *n.cochain;
  if (n.op == "diff") return *n.diff;
  if (auto r = run_report(n.op, n.params)) return *r;

  std::vector<Value> vals;
  vals.reserve(n.args.size());
  for (const auto& child : n.args) vals.push_back(evaluate(child));
  const std::string& op = n.op;
  auto C = [&](std::size_t i) -> const Cochain& { return as_cochain(vals.at(i), op); };
  auto D = [&](std::size_t i) -> const DiffCocycle& { return as_diff(vals.at(i), op); };
  bool diff_args = !vals.empty() && std::holds_alternative<DiffCocycle>(vals[0]);

  if (op == "add") {
    if (vals.empty()) throw InputError("add: no arguments");
    if (diff_args) {
      DiffCocycle s = D(0);
      for (std::size_t i = 1; i < vals.size(); ++i) s = s + D(i);
      return s;
    }
    Cochain s = C(0);
    for (std::size_t i = 1; i < vals.size(); ++i) s += C(i);
    return s;
  }
  if (op == "sub") {
    arity(n, 2);
    if (diff_args) return D(0) - D(1);
    return C(0) - C(1);
  }
  if (op == "scale") {
    arity(n, 1);
    Rational q = parse_rational(n.params.at("factor").get<std::string>());
    return C(0).scaled(q);
  }
  if (op == "times") {
    arity(n, 1);
    return D(0).times(Integer(int_param(n, "k")));
  }
  if (op == "ring") {
    arity(n, 1);
    return change_ring(C(0), parse_ring(n.params.at("ring").get<std::string>()));
  }
  if (op == "delta") {
    arity(n, 1);
    return coboundary(C(0));
  }
  if (op == "cup") {
    arity(n, 2);
    return cup(C(0), C(1));
  }
  if (op == "cup_i") {
    arity(n, 2);
    return cup_i(C(0), C(1), int_param(n, "i"));
  }
  if (op == "cup1q") {
    arity(n, 2);
    return cup1_rational(C(0), C(1));
  }
  if (op == "sq") {
    arity(n, 1);
    return sq(int_param(n, "k"), CohomologyClass(C(0))).representative();
  }
  if (op == "sq-int") {
    arity(n, 1);
    return sq_integral(int_param(n, "k"), CohomologyClass(C(0))).representative();
  }
  if (op == "rho2") {
    arity(n, 1);
    return via_class(C(0), rho2);
  }
  if (op == "gamma2") {
    arity(n, 1);
    return via_class(C(0), gamma2);
  }
  if (op == "beta") {
    arity(n, 1);
    return via_class(C(0), bockstein_beta);
  }
  if (op == "beta2") {
    arity(n, 1);
    return via_class(C(0), bockstein_beta2);
  }
  if (op == "beta-exp") {
    arity(n, 1);
    return via_class(C(0), bockstein_exp);
  }
  if (op == "suspend") {
    arity(n, 1);
    return suspend_cochain(suspension(C(0).complex()), C(0));
  }
  if (op == "refined-sq") {
    arity(n, 1);
    return refined_sq(int_param(n, "k"), D(0));
  }
  if (op == "db-cup") {
    arity(n, 2);
    return db_cup(D(0), D(1));
  }
  if (op == "dd-power") {
    arity(n, 1);
    return dd_power(D(0), int_param(n, "m"));
  }
  if (op == "j") {
    arity(n, 1);
    return j(C(0));
  }
  if (op == "a") {
    arity(n, 1);
    return a(C(0));
  }
  if (op == "I") {
    arity(n, 1);
    return D(0).c();
  }
  if (op == "R") {
    arity(n, 1);
    return D(0).omega();
  }
  if (op == "trapezoid") {
    arity(n, 1);
    return trapezoid_check(D(0)).to_json();
  }
  throw UnknownResourceError("unknown probe operation '" + op + "'");
}

json observe(const std::string& what, const Expr& e) {
  try {
    Value v = evaluate(e);
    if (what == "value") {
      if (auto j = std::get_if<json>(&v)) return *j;
      throw InputError("value: expected a report");
    }
    if (auto d = std::get_if<DiffCocycle>(&v)) {
      if (what == "trivial") return is_trivial(*d);
      if (what == "flat") return d->is_flat();
      if (what == "zero") return d->c().is_zero() && d->h().is_zero() && d->omega().is_zero();
      if (what == "holonomy") {
        json out = json::array();
        for (const auto& r : holonomy(*d)) out.push_back(to_string(r));
        return out;
      }
      throw InputError("cannot observe " + what + " of a differential cocycle");
    }
    if (auto c = std::get_if<Cochain>(&v)) {
      if (what == "zero") return c->is_zero();
      if (what == "cochain") return cochain_values_json(*c);
      if (what == "zero-class") return beyond_top(*c) || is_coboundary(*c);
      if (what == "coords") {
        json out = json::array();
        if (beyond_top(*c)) return out;
        for (const auto& r : class_coordinates(*c)) out.push_back(to_string(r));
        return out;
      }
      throw InputError("cannot observe " + what + " of a cochain");
    }
    throw InputError("cannot observe " + what + " of a report");
  } catch (const InputError& err) {
    return json{{"error", err.what()}};
  } catch (const DimensionMismatch& err) {
    return json{{"error", err.what()}};
  }
}

json expr_to_json(const Expr& e) {
  const Node& n = *e;
  if (n.op == "cochain") return json{{"cochain", cochain_to_json(*n.cochain)}};
  if (n.op == "diff") return json{{"diff", diffcocycle_to_json(*n.diff)}};
  json args = json::array();
  for (const auto& child : n.args) args.push_back(expr_to_json(child));
  json out{{"op", n.op}};
  if (!n.params.empty()) out["params"] = n.params;
  if (!args.empty()) out["args"] = args;
  return out;
}

Expr expr_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("probe: expected an object");
  if (j.contains("cochain")) return leaf(cochain_from_json(j["cochain"], "cochain"));
  if (j.contains("diff")) return leaf(diffcocycle_from_json(j["diff"], "diff"));
  if (!j.contains("op") || !j["op"].is_string()) throw ParseError("probe: missing op");
  std::vector<Expr> args;
  if (j.contains("args")) {
    if (!j["args"].is_array()) throw ParseError("probe: args must be an array");
    for (const auto& child : j["args"]) args.push_back(expr_from_json(child));
  }
  return make(j["op"].get<std::string>(), std::move(args), j.value("params", json::object()));
}

}  // namespace dcoh::verify
