#include "dcoh/diffcoh/diffcoh.hpp"

#include "dcoh/cohomology/coefficients.hpp"
#include "dcoh/complex/io.hpp"
#include "dcoh/errors.hpp"
#include "dcoh/fault.hpp"
#include "dcoh/linalg/solve.hpp"
#include "dcoh/steenrod/steenrod.hpp"

namespace dcoh {

namespace {

Cochain as_rational(const Cochain& u, const char* what) {
  if (u.ring() == Ring::Q) return u;
  if (u.ring() == Ring::Z) return change_ring(u, Ring::Q);
  throw RingMismatch(std::string(what) + " must be a Q (or Z) cochain, got " + ring_name(u.ring()));
}

void check_same(const Cochain& a, const Cochain& b) {
  if (!same_complex(*a.complex(), *b.complex())) throw ValidationError("cochains live on different complexes");
}

}  // namespace

Triple differential(const Triple& t) {
  check_same(t.c, t.h);
  check_same(t.c, t.omega);
  if (t.omega.degree() != t.c.degree() || t.h.degree() != t.c.degree() - 1)
    throw DegreeError("triple degrees must be (m, m-1, m), got (" + std::to_string(t.c.degree()) + ", " +
                      std::to_string(t.h.degree()) + ", " + std::to_string(t.omega.degree()) + ")");
  Cochain h = as_rational(t.h, "h");
  Cochain w = as_rational(t.omega, "omega");
  Cochain mid = w - change_ring(t.c, Ring::Q) - coboundary(h);
  return {coboundary(t.c), std::move(mid), coboundary(w)};
}

DiffCocycle::DiffCocycle(Cochain c, Cochain h, Cochain omega, Unchecked)
    : c_(std::move(c)), h_(std::move(h)), omega_(std::move(omega)) {}

DiffCocycle::DiffCocycle(Cochain c, Cochain h, Cochain omega)
    : c_(std::move(c)), h_(as_rational(h, "h")), omega_(as_rational(omega, "omega")) {
  if (c_.ring() != Ring::Z) throw RingMismatch("c must be a Z cochain, got " + ring_name(c_.ring()));
  if (c_.degree() < 0) throw DegreeError("differential cocycles need degree >= 0");
  Triple d = differential(triple());
  if (!d.h.is_zero()) throw ValidationError("delta h != omega - c");
  if (!d.omega.is_zero()) throw ValidationError("omega is not a cocycle");
  if (!d.c.is_zero()) throw ValidationError("c is not a cocycle");
}

DiffCocycle DiffCocycle::zero(const ComplexPtr& x, int m) {
  if (m < 0) throw DegreeError("differential cocycles need degree >= 0");
  return DiffCocycle(Cochain(x, m, Ring::Z), Cochain(x, m - 1, Ring::Q), Cochain(x, m, Ring::Q), Unchecked{});
}

DiffCocycle operator+(const DiffCocycle& a, const DiffCocycle& b) {
  return DiffCocycle(a.c_ + b.c_, a.h_ + b.h_, a.omega_ + b.omega_, DiffCocycle::Unchecked{});
}

DiffCocycle operator-(const DiffCocycle& a, const DiffCocycle& b) {
  return DiffCocycle(a.c_ - b.c_, a.h_ - b.h_, a.omega_ - b.omega_, DiffCocycle::Unchecked{});
}

DiffCocycle DiffCocycle::operator-() const { return DiffCocycle(-c_, -h_, -omega_, Unchecked{}); }

DiffCocycle DiffCocycle::times(const Integer& k) const {
  Rational q(k);
  return DiffCocycle(c_.scaled(q), h_.scaled(q), omega_.scaled(q), Unchecked{});
}

CohomologyClass integration(const DiffCocycle& x) { return CohomologyClass(x.c()); }

const Cochain& curvature(const DiffCocycle& x) { return x.omega(); }

DiffCocycle flat_inclusion(const Cochain& u) {
  if (u.ring() != Ring::QZ) throw RingMismatch("j needs a Q/Z cochain, got " + ring_name(u.ring()));
  Cochain h = rational_lift(u);  // values already in [0, 1)
  Cochain c = -beta_exp_cochain(u);
  Cochain w(u.complex(), u.degree() + 1, Ring::Q);
  return DiffCocycle(std::move(c), std::move(h), std::move(w));
}

DiffCocycle form_inclusion(const Cochain& eta) {
  Cochain h = as_rational(eta, "eta");
  Cochain w = coboundary(h);
  Cochain c(h.complex(), h.degree() + 1, Ring::Z);
  return DiffCocycle(std::move(c), std::move(h), std::move(w));
}

DiffCocycle from_integral_cocycle(const Cochain& c) {
  if (c.ring() != Ring::Z) throw RingMismatch("expected a Z cocycle, got " + ring_name(c.ring()));
  return DiffCocycle(c, Cochain(c.complex(), c.degree() - 1, Ring::Q), change_ring(c, Ring::Q));
}

Cochain flat_cochain(const DiffCocycle& x) {
  if (!x.is_flat()) throw ValidationError("class is not flat (omega != 0)");
  if (x.degree() == 0) throw DegreeError("no flat part in degree 0");
  return change_ring(x.h(), Ring::QZ);
}

std::vector<Rational> holonomy(const DiffCocycle& x) { return class_coordinates(flat_cochain(x)); }

bool is_trivial(const DiffCocycle& x) {
  if (!x.is_flat()) return false;
  if (x.degree() == 0) return x.c().is_zero();
  return is_coboundary(flat_cochain(x));
}

bool is_trivial_stepwise(const DiffCocycle& x) {
  if (!x.omega().is_zero()) return false;
  const ComplexPtr& cx = x.complex();
  int m = x.degree();
  if (m == 0) return x.c().is_zero();
  auto b = solve_integer(*coboundary_snf(cx, m - 1), x.c().integer_values());
  if (!b) return false;
  std::vector<Rational> v = x.h().values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += (*b)[i];
  std::vector<std::vector<Integer>> basis;
  for (const auto& z : integral_cocycle_basis(cx, m - 1)) basis.push_back(z.integer_values());
  SparseIntMatrix l = matrix_from_columns(cx->count(m - 1), basis);
  return in_lattice_image(v, l, cx->coboundary(m - 2));
}

bool equal_classes(const DiffCocycle& x, const DiffCocycle& y) { return is_trivial(x - y); }

DiffCocycle db_cup(const DiffCocycle& x, const DiffCocycle& y) {
  int p = x.degree();
  Cochain c = cup(x.c(), y.c());
  Cochain mid = cup(x.c(), y.h());
  if (p % 2 != 0) mid = -mid;
  mid += cup(x.h(), y.omega());
  return DiffCocycle(std::move(c), std::move(mid), cup(x.omega(), y.omega()));
}

DiffCocycle dd_power(const DiffCocycle& x, int m) {
  if (m < 1) throw InputError("power must be at least 1");
  DiffCocycle out = x;
  for (int i = 1; i < m; ++i) out = db_cup(out, x);
  return out;
}

DiffCocycle refined_sq(int k, const DiffCocycle& x) {
  if (k < 1) throw InputError("refined squares need k >= 1");
  if (k % 2 == 0) throw InputError("even refinement does not exist");
  CohomologyClass y = rho2(integration(x));
  CohomologyClass s = sq(k - 1, y);
  Cochain u = gamma2_cochain(s.representative());
  apply_fault("refined", u);
  return flat_inclusion(u);
}

DiffCocycle pullback(const SimplicialMap& f, const DiffCocycle& x) {
  return DiffCocycle(pullback(f, x.c()), pullback(f, x.h()), pullback(f, x.omega()));
}

DiffCocycle diffcocycle_from_json(const nlohmann::json& j, const std::string& where) {
  auto field = [&](const std::string& name) { return where.empty() ? name : where + "." + name; };
  if (!j.is_object()) throw ParseError("field " + (where.empty() ? std::string("<root>") : where) + ": expected an object");
  for (const char* key : {"complex", "degree", "c", "h", "omega"})
    if (!j.contains(key)) throw ParseError("field " + field(key) + ": missing");
  ComplexPtr x = complex_from_reference(j["complex"], field("complex"));
  if (!j["degree"].is_number_integer()) throw ParseError("field " + field("degree") + ": expected an integer");
  int m = j["degree"].get<int>();
  if (m < 0) throw DegreeError("field " + field("degree") + ": negative degree");
  auto component = [&](const char* key, int degree, Ring ring) {
    nlohmann::json cj = j[key];
    if (cj.is_array()) cj = nlohmann::json{{"values", cj}};
    if (!cj.is_object()) throw ParseError("field " + field(key) + ": expected a cochain object or a values array");
    if (!cj.contains("degree")) cj["degree"] = degree;
    if (!cj.contains("ring")) cj["ring"] = ring_name(ring);
    if (cj["degree"] != degree)
      throw DegreeError("field " + field(key) + ": degree must be " + std::to_string(degree));
    if (degree < 0) {
      if (!cj["values"].empty()) throw ValidationError("field " + field(key) + ": must be empty in degree -1");
      return Cochain(x, degree, ring);
    }
    return cochain_from_json(cj, x, field(key));
  };
  Cochain c = component("c", m, Ring::Z);
  Cochain h = component("h", m - 1, Ring::Q);
  Cochain w = component("omega", m, Ring::Q);
  try {
    return DiffCocycle(std::move(c), std::move(h), std::move(w));
  } catch (const InputError& e) {
    throw ValidationError(std::string(where.empty() ? "" : "field " + where + ": ") + e.what());
  }
}

DiffCocycle parse_diffcocycle(const std::string& document) { return diffcocycle_from_json(parse_json_document(document)); }

nlohmann::json diffcocycle_to_json(const DiffCocycle& x) {
  return nlohmann::json{{"complex", complex_reference(*x.complex())},
                        {"degree", x.degree()},
                        {"c", cochain_to_json(x.c(), false)},
                        {"h", cochain_to_json(x.h(), false)},
                        {"omega", cochain_to_json(x.omega(), false)}};
}

}  // namespace dcoh
