#include "dcoh/diffcoh/checks.hpp"

#include "dcoh/cohomology/coefficients.hpp"
#include "dcoh/complex/constructions.hpp"
#include "dcoh/complex/io.hpp"
#include "dcoh/diffcoh/random.hpp"
#include "dcoh/errors.hpp"
#include "dcoh/steenrod/steenrod.hpp"

namespace dcoh {

using nlohmann::json;

namespace {

GroupDescriptor group(const ComplexPtr& x, int n, Ring ring) {
  if (n < 0 || n > x->dimension()) return {};
  return cohomology_descriptor(x, n, ring);
}

json coordinates_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

json class_json(const Cochain& u) {
  if (u.degree() > u.complex()->dimension()) return json::array();
  return coordinates_json(class_coordinates(u));
}

std::vector<Rational> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

DiffProfile diff_profile(const ComplexPtr& x, int m) {
  if (m < 0) throw DegreeError("differential cohomology needs degree >= 0");
  DiffProfile p;
  p.flat_part = group(x, m - 1, Ring::QZ);
  p.integral_image = group(x, m, Ring::Z);
  if (m >= 1 && m - 1 <= x->dimension()) p.form_ambiguity_dim = coboundary_rank(x, m - 1);
  return p;
}

json profile_to_json(const DiffProfile& p) {
  return json{{"flat_part", group_to_json(p.flat_part)},
              {"flat_part_text", p.flat_part.to_string()},
              {"integral_image", group_to_json(p.integral_image)},
              {"integral_image_text", p.integral_image.to_string()},
              {"form_ambiguity_dim", p.form_ambiguity_dim}};
}

bool CheckReport::passed() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

json CheckReport::to_json() const {
  json cases = json::array();
  for (const auto& item : items)
    cases.push_back(json{{"id", item.id}, {"pass", item.pass}, {"expected", item.expected}, {"actual", item.actual}});
  return json{{"check", name}, {"pass", passed()}, {"items", cases}, {"notes", notes}};
}

CheckReport kunneth_check(const ComplexPtr& x, const ComplexPtr& y, int m) {
  if (m < 0) throw DegreeError("degree must be >= 0");
  CheckReport report;
  report.name = "kunneth " + x->name() + " x " + y->name() + " degree " + std::to_string(m);
  ComplexPtr xy = product(x, y, m + 1);
  DiffProfile direct = diff_profile(xy, m);

  GroupDescriptor flat, integral;
  json terms = json::array();
  auto note = [&](const std::string& label, const GroupDescriptor& g) {
    if (!g.is_zero()) terms.push_back(json{{"term", label}, {"group", g.to_string()}});
  };
  for (int j = 0; j <= m; ++j) {
    std::string js = std::to_string(j);
    GroupDescriptor t = tensor(group(x, m - 1 - j, Ring::QZ), group(y, j, Ring::Z));
    GroupDescriptor s = tor(group(x, m - j, Ring::QZ), group(y, j, Ring::Z));
    note("H^" + std::to_string(m - 1 - j) + "(X;Q/Z) (x) H^" + js + "(Y)", t);
    note("Tor(H^" + std::to_string(m - j) + "(X;Q/Z), H^" + js + "(Y))", s);
    flat = direct_sum(direct_sum(flat, t), s);
  }
  for (int i = 0; i <= m + 1; ++i) {
    if (i <= m) integral = direct_sum(integral, tensor(group(x, i, Ring::Z), group(y, m - i, Ring::Z)));
    integral = direct_sum(integral, tor(group(x, i, Ring::Z), group(y, m + 1 - i, Ring::Z)));
  }
  report.add("flat", flat == direct.flat_part, flat.to_string(), direct.flat_part.to_string());
  report.add("integral", integral == direct.integral_image, integral.to_string(), direct.integral_image.to_string());
  report.notes["flat_terms"] = terms;
  report.notes["product"] = profile_to_json(direct);
  return report;
}

CheckReport bz2_kunneth_check(const ComplexPtr& x, int n, int truncation) {
  if (n < 0) throw DegreeError("n must be >= 0");
  if (truncation < 2 * n + 2)
    throw InputError("truncation rp(" + std::to_string(truncation) + ") too small: need N >= 2n+2 = " +
                     std::to_string(2 * n + 2));
  CheckReport report;
  report.name = "bz2-kunneth " + x->name() + " n=" + std::to_string(n) + " N=" + std::to_string(truncation);
  ComplexPtr rp = builtin("rp(" + std::to_string(truncation) + ")");
  ComplexPtr xr = product(x, rp, 2 * n);
  GroupDescriptor lhs = torsion_part(diff_profile(xr, 2 * n).flat_part);

  GroupDescriptor base = torsion_part(diff_profile(x, 2 * n).flat_part);
  GroupDescriptor rhs = base;
  GroupDescriptor literal = base;
  json summands = json::array({json{{"summand", "flat part of degree " + std::to_string(2 * n) + " of X"},
                                    {"group", base.to_string()}}});
  for (int j = 0; j < 2 * n; j += 2) {
    GroupDescriptor t = two_torsion(group(x, j, Ring::QZ));
    rhs = direct_sum(rhs, t);
    summands.push_back(json{{"summand", "2-torsion of H^" + std::to_string(j) + "(X;Q/Z)"}, {"group", t.to_string()}});
    literal = direct_sum(literal, two_torsion(group(x, j - 1, Ring::QZ)));
  }
  report.add("flat", lhs == rhs, rhs.to_string(), lhs.to_string());
  report.notes["summands"] = summands;
  // The same sum with T_2^j read as the 2-torsion of the flat part of degree j
  // (that is, of H^{j-1}(X;Q/Z)).
  report.notes["flat_part_indexing"] = json{{"group", literal.to_string()}, {"agrees", literal == lhs}};
  json tensor_terms = json::array();
  for (int j = 2; j < 2 * n; j += 2) {
    GroupDescriptor t = tensor(group(x, 2 * n - 1 - j, Ring::QZ), cyclic(2));
    if (!t.is_zero())
      tensor_terms.push_back(
          json{{"term", "H^" + std::to_string(2 * n - 1 - j) + "(X;Q/Z) (x) Z/2"}, {"group", t.to_string()}});
  }
  report.notes["nonvanishing_u1_tensor_z2_terms"] = tensor_terms;
  return report;
}

CheckReport exactness_check(const ComplexPtr& x, int m, std::uint64_t seed, int samples) {
  if (m < 1) throw DegreeError("exactness check needs degree >= 1");
  CheckReport report;
  report.name = "exactness " + x->name() + " degree " + std::to_string(m);
  CaseGenerator gen(seed * 1000003u + static_cast<std::uint64_t>(m));

  // (i) ker R = im j
  if (m - 1 <= x->dimension()) {
    const auto& flat = cohomology_group(x, m - 1, Ring::QZ);
    for (std::size_t i = 0; i < flat.generators.size(); ++i) {
      // divisible generators are sampled at 1/2
      auto expect = unit_vector(flat.generators.size(), i);
      if (flat.orders[i] == 0) expect[i] = Rational(1, 2);
      DiffCocycle f = j(class_from_coordinates(x, m - 1, Ring::QZ, expect));
      auto got = holonomy(f);
      report.add("kerR/gen/" + std::to_string(i), f.is_flat() && got == expect && !is_trivial(f),
                 coordinates_json(expect), coordinates_json(got));
    }
  }
  for (int s = 0; s < samples; ++s) {
    DiffCocycle f = gen.flat(x, m);
    bool ok = f.is_flat() && is_trivial(f - j(flat_cochain(f)));
    report.add("kerR/random/" + std::to_string(s), ok, true, ok);
  }

  // (ii) ker I = im a
  for (int s = 0; s < samples; ++s) {
    Cochain eta = gen.cochain(x, m - 1, Ring::Q);
    DiffCocycle y = a(eta) + gen.exact(x, m);
    bool image_ok = is_coboundary(y.c());
    bool ok = false;
    if (auto b = coboundary_primitive(y.c())) ok = is_trivial(y - a(y.h() + change_ring(*b, Ring::Q)));
    report.add("kerI/random/" + std::to_string(s), image_ok && ok, true, image_ok && ok);
  }

  // (iii) I onto, and the refinement identities on the preimages plus random classes
  std::vector<DiffCocycle> classes;
  if (m <= x->dimension()) {
    const auto& hz = cohomology_group(x, m, Ring::Z);
    for (std::size_t i = 0; i < hz.generators.size(); ++i) {
      DiffCocycle g = from_integral_cocycle(hz.generators[i]);
      auto expect = unit_vector(hz.generators.size(), i);
      auto got = integration(g).coordinates();
      report.add("onto/gen/" + std::to_string(i), got == expect, coordinates_json(expect), coordinates_json(got));
      classes.push_back(g);
    }
  }
  for (int s = 0; s < samples; ++s) classes.push_back(gen.diffcocycle(x, m));

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const DiffCocycle& c = classes[i];
    std::string tag = std::to_string(i);
    for (int power = 2; power <= 3; ++power) {
      DiffCocycle p = dd_power(c, power);
      Cochain ic = c.c();
      Cochain wc = c.omega();
      for (int k = 1; k < power; ++k) {
        ic = cup(ic, c.c());
        wc = cup(wc, c.omega());
      }
      bool i_ok = p.c().degree() > x->dimension() || is_cohomologous(p.c(), ic);
      report.add("power" + std::to_string(power) + "/I/" + tag, i_ok, class_json(ic), class_json(p.c()));
      report.add("power" + std::to_string(power) + "/R/" + tag, p.omega() == wc, true, p.omega() == wc);
    }
    for (int k = 1; k <= m + 1; k += 2) {
      DiffCocycle s = refined_sq(k, c);
      Cochain expect = sq_integral(k, integration(c)).representative();
      bool i_ok = expect.degree() > x->dimension() || is_cohomologous(s.c(), expect);
      report.add("sq" + std::to_string(k) + "/I/" + tag, i_ok, class_json(expect), class_json(s.c()));
      report.add("sq" + std::to_string(k) + "/R/" + tag, s.is_flat(), true, s.is_flat());
    }
  }
  return report;
}

CheckReport trapezoid_check(const DiffCocycle& x) {
  int p = x.degree();
  if (p % 2 == 0) throw DegreeError("trapezoid check needs an odd degree, got " + std::to_string(p));
  CheckReport report;
  report.name = "trapezoid degree " + std::to_string(p);
  const ComplexPtr& cx = x.complex();
  DiffCocycle square = dd_power(x, 2);
  DiffCocycle sq = refined_sq(p, x);
  DiffCocycle d = square - sq;
  bool top = 2 * p > cx->dimension();

  bool a_ok = top || is_coboundary(d.c());
  report.add("I(d)=0", a_ok, true, a_ok);

  Cochain eta = cup1_rational(x.omega(), x.omega()).scaled(Rational(-1, 2));
  bool primitive_ok = coboundary(eta) == cup(x.omega(), x.omega());
  report.add("delta(eta)=w.w", primitive_ok, true, primitive_ok);

  DiffCocycle r = d - a(eta);
  bool strict = is_trivial(r);
  bool b_ok = strict;
  json residual = json::array();
  if (r.is_flat() && 2 * p - 1 <= cx->dimension()) {
    auto coords = holonomy(r);
    const auto& g = cohomology_group(cx, 2 * p - 1, Ring::QZ);
    b_ok = true;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (g.orders[i] != 0 && coords[i] != 0) b_ok = false;
    residual = coordinates_json(coords);
  }
  report.add("d-a(eta) in a(cocycles)", b_ok, true, b_ok);
  if (x.is_flat()) report.add("flat input: d trivial", is_trivial(d), true, is_trivial(d));
  report.notes["strict"] = strict;
  report.notes["residual_coordinates"] = residual;
  report.notes["square_trivial"] = is_trivial(square);
  report.notes["refined_trivial"] = is_trivial(sq);
  return report;
}

json u1_tensor_z2(const ComplexPtr& x, int max_degree) {
  json out = json::object();
  for (int n = 0; n <= max_degree; ++n) {
    GroupDescriptor t = tensor(group(x, n, Ring::QZ), cyclic(2));
    out["H^" + std::to_string(n)] = t.to_string();
  }
  return out;
}

}  // namespace dcoh
