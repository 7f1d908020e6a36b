#include <doctest.h>

#include "dcoh/cohomology/coefficients.hpp"
#include "dcoh/complex/constructions.hpp"
#include "dcoh/complex/io.hpp"
#include "dcoh/diffcoh/checks.hpp"
#include "dcoh/diffcoh/random.hpp"
#include "dcoh/errors.hpp"
#include "dcoh/steenrod/steenrod.hpp"

using namespace dcoh;

namespace {

DiffCocycle winding_circle() {
  auto circle = builtin("circle");
  return from_integral_cocycle(cohomology_group(circle, 1, Ring::Z).generators.at(0));
}

DiffCocycle chern_torus(long k) {
  auto torus = builtin("torus");
  Cochain g = cohomology_group(torus, 2, Ring::Z).generators.at(0);
  return from_integral_cocycle(g.scaled(Rational(k)));
}

std::vector<std::pair<std::string, int>> corpus_degrees() {
  return {{"point", 1}, {"circle", 1}, {"circle", 2}, {"torus", 1}, {"torus", 2}, {"klein", 1},
          {"klein", 2}, {"rp2", 1},    {"rp2", 2},    {"rp3", 1},   {"rp3", 2},   {"sphere(2)", 2}};
}

bool zero_triple(const Triple& t) { return t.c.is_zero() && t.h.is_zero() && t.omega.is_zero(); }

}  // namespace

TEST_CASE("total differential") {
  auto torus = builtin("torus");
  CaseGenerator gen(3);
  for (int m = 1; m <= 2; ++m) {
    Triple zero{Cochain(torus, m, Ring::Z), Cochain(torus, m - 1, Ring::Q), Cochain(torus, m, Ring::Q)};
    CHECK(zero_triple(differential(zero)));
    for (int s = 0; s < 5; ++s) {
      Triple t{gen.cochain(torus, m, Ring::Z), gen.cochain(torus, m - 1, Ring::Q), gen.cochain(torus, m, Ring::Q)};
      Triple d = differential(t);
      CHECK(zero_triple(differential(d)));
      Cochain k = gen.cochain(torus, m - 1, Ring::Q);
      Triple dk = differential({Cochain(torus, m, Ring::Z), k, Cochain(torus, m, Ring::Q)});
      CHECK(dk.c.is_zero());
      CHECK(dk.omega.is_zero());
      CHECK(dk.h == -coboundary(k));
    }
  }
  Triple bad{Cochain(torus, 1, Ring::Z), Cochain(torus, 1, Ring::Q), Cochain(torus, 1, Ring::Q)};
  CHECK_THROWS_AS(differential(bad), DegreeError);
}

TEST_CASE("DiffCocycle validation and JSON") {
  auto circle = builtin("circle");
  DiffCocycle w = winding_circle();
  CHECK(zero_triple(differential(w.triple())));
  // omega changed without changing h
  CHECK_THROWS_AS(DiffCocycle(w.c(), w.h(), Cochain(circle, 1, Ring::Q)), ValidationError);
  CHECK_THROWS_AS(DiffCocycle(change_ring(w.c(), Ring::Q), w.h(), w.omega()), RingMismatch);

  CaseGenerator gen(5);
  for (auto [name, m] : corpus_degrees()) {
    auto x = builtin(name);
    DiffCocycle r = gen.diffcocycle(x, m);
    auto text = diffcocycle_to_json(r).dump();
    DiffCocycle back = parse_diffcocycle(text);
    CHECK(back.c() == r.c());
    CHECK(back.h() == r.h());
    CHECK(back.omega() == r.omega());
  }
  auto j = diffcocycle_to_json(w);
  j["omega"]["values"] = nlohmann::json::array();
  CHECK_THROWS_AS(diffcocycle_from_json(j), ValidationError);
  auto k = diffcocycle_to_json(w);
  k.erase("h");
  CHECK_THROWS_AS(diffcocycle_from_json(k), ParseError);
  // values-array shorthand
  auto v = diffcocycle_to_json(w);
  v["c"] = cochain_values_json(w.c());
  v["omega"] = cochain_values_json(w.omega());
  CHECK(diffcocycle_from_json(v).c() == w.c());
}

TEST_CASE("the diamond maps") {
  CaseGenerator gen(11);
  for (auto [name, m] : corpus_degrees()) {
    CAPTURE(name);
    CAPTURE(m);
    auto x = builtin(name);
    Cochain eta = gen.cochain(x, m - 1, Ring::Q);
    DiffCocycle ae = a(eta);
    CHECK(integration(ae).is_zero());
    CHECK(curvature(ae) == coboundary(eta));

    Cochain u = gen.cocycle(x, m - 1, Ring::QZ);
    DiffCocycle ju = j(u);
    CHECK(curvature(ju).is_zero());
    // I j = -beta~
    CHECK(integration(ju) == CohomologyClass(-bockstein_exp(CohomologyClass(u)).representative()));
    CHECK(zero_triple(differential(ju.triple())));
    CHECK(zero_triple(differential(ae.triple())));
  }
  auto w = winding_circle();
  auto coords = integration(w).coordinates();
  REQUIRE(coords.size() == 1);
  CHECK(coords[0] == 1);
}

TEST_CASE("triviality decisions") {
  auto circle = builtin("circle");
  CHECK(is_trivial(DiffCocycle::zero(circle, 2)));
  CHECK(is_trivial(DiffCocycle::zero(circle, 1)));

  // holonomy 1/2 on the circle: nontrivial, killed by 2
  Cochain half = change_ring(change_ring(cohomology_group(circle, 1, Ring::Z).generators[0], Ring::Q).scaled(Rational(1, 2)),
                             Ring::QZ);
  DiffCocycle f = j(half);
  CHECK_FALSE(is_trivial(f));
  CHECK(is_trivial(f.times(2)));
  CHECK(holonomy(f) == std::vector<Rational>{Rational(1, 2)});

  // a of an integral cocycle is trivial; a of an integral non-cocycle has curvature
  auto torus = builtin("torus");
  Cochain z = cohomology_group(torus, 1, Ring::Z).generators[0];
  CHECK(is_trivial(a(z)));
  Cochain e = indicator(torus, torus->simplices(1)[0], Ring::Z);
  CHECK_FALSE(is_trivial(a(e)));
  // a(eta) for a rational cocycle with non-integral class is nontrivial
  CHECK_FALSE(is_trivial(a(change_ring(z, Ring::Q).scaled(Rational(1, 3)))));

  CaseGenerator gen(17);
  for (auto [name, m] : corpus_degrees()) {
    CAPTURE(name);
    CAPTURE(m);
    auto x = builtin(name);
    for (int s = 0; s < 3; ++s) {
      DiffCocycle r = gen.diffcocycle(x, m);
      CHECK(is_trivial(r - r));
      CHECK(is_trivial(gen.exact(x, m)));
      DiffCocycle fl = gen.flat(x, m);
      CHECK(is_trivial(fl) == is_trivial_stepwise(fl));
      CHECK(is_trivial(r) == is_trivial_stepwise(r));
      DiffCocycle shifted = r + gen.exact(x, m);
      CHECK(equal_classes(r, shifted));
    }
    // every nonzero flat generator is nontrivial, by both routes
    const auto& g = cohomology_group(x, m - 1, Ring::QZ);
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      std::vector<Rational> t(g.generators.size(), Rational(0));
      t[i] = g.orders[i] == 0 ? Rational(1, 3) : Rational(1);
      DiffCocycle f = j(class_from_coordinates(x, m - 1, Ring::QZ, t));
      CHECK_FALSE(is_trivial(f));
      CHECK_FALSE(is_trivial_stepwise(f));
      CHECK(holonomy(f) == t);
    }
  }
}

TEST_CASE("Deligne-Beilinson product") {
  CaseGenerator gen(23);
  std::vector<std::tuple<std::string, int, int>> cases = {
      {"torus", 1, 1}, {"torus", 1, 0}, {"rp2", 1, 1}, {"klein", 1, 1}, {"rp3", 1, 2}, {"rp3", 2, 1}, {"circle", 1, 1}};
  for (auto [name, p, q] : cases) {
    CAPTURE(name);
    auto x = builtin(name);
    for (int s = 0; s < 3; ++s) {
      DiffCocycle u = gen.diffcocycle(x, p), v = gen.diffcocycle(x, q);
      DiffCocycle uv = db_cup(u, v);  // validates delta h = w - c
      CHECK(uv.degree() == p + q);
      CHECK(curvature(uv) == cup(u.omega(), v.omega()));
      if (p + q <= x->dimension()) CHECK(integration(uv) == cup(integration(u), integration(v)));
      // the product is well defined on classes
      CHECK(equal_classes(db_cup(u + gen.exact(x, p), v), uv));
      CHECK(equal_classes(db_cup(u, v + gen.exact(x, q)), uv));
      CHECK(is_trivial(db_cup(u, gen.exact(x, q))));
    }
  }
  // graded commutativity up to the curvature correction on the torus
  auto torus = builtin("torus");
  for (int s = 0; s < 3; ++s) {
    DiffCocycle u = gen.diffcocycle(torus, 1), v = gen.diffcocycle(torus, 1);
    DiffCocycle sym = db_cup(u, v) + db_cup(v, u);
    // delta(w1 cup1 w2) = -(w1 w2 + w2 w1) for degree-1 cocycles
    DiffCocycle r = sym - a(-cup1_rational(u.omega(), v.omega()));
    REQUIRE(r.is_flat());
    const auto& g = cohomology_group(torus, 1, Ring::QZ);
    for (std::size_t i = 0; i < g.generators.size(); ++i) CHECK(g.orders[i] == 0);
  }
  // Chern classes multiply to zero for dimensional reasons
  CHECK(is_trivial(db_cup(chern_torus(1), chern_torus(3))));
}

TEST_CASE("DD powers") {
  CaseGenerator gen(29);
  auto rp3 = builtin("rp3");
  for (int s = 0; s < 3; ++s) {
    DiffCocycle u = gen.diffcocycle(rp3, 1);
    DiffCocycle p1 = dd_power(u, 1);
    CHECK(p1.c() == u.c());
    CHECK(p1.h() == u.h());
    CHECK(p1.omega() == u.omega());
    CHECK(curvature(dd_power(u, 3)) == cup(cup(u.omega(), u.omega()), u.omega()));
    CHECK(integration(dd_power(u, 2)) == cup(integration(u), integration(u)));
  }
  CHECK_THROWS_AS(dd_power(winding_circle(), 0), InputError);
  // on the circle every degree-2 cochain vanishes, so the square of (c, 0, c) is zero
  CHECK(is_trivial(dd_power(winding_circle(), 2)));
}

TEST_CASE("refined squares: examples") {
  DiffCocycle w = winding_circle();
  DiffCocycle s = refined_sq(1, w);
  CHECK(s.is_flat());
  CHECK_FALSE(is_trivial(s));
  CHECK(holonomy(s) == std::vector<Rational>{Rational(1, 2)});
  CHECK_THROWS_WITH_AS(refined_sq(2, w), "even refinement does not exist", InputError);
  CHECK_THROWS_AS(refined_sq(0, w), InputError);

  for (long k = -3; k <= 4; ++k) {
    CAPTURE(k);
    DiffCocycle t = refined_sq(1, chern_torus(k));
    CHECK(is_trivial(t) == (k % 2 == 0));
    if (k % 2 != 0) CHECK(holonomy(t) == std::vector<Rational>{Rational(1, 2)});
  }
}

TEST_CASE("refined squares: properties on the corpus") {
  CaseGenerator gen(31);
  for (auto [name, m] : corpus_degrees()) {
    CAPTURE(name);
    CAPTURE(m);
    auto x = builtin(name);
    for (int s = 0; s < 3; ++s) {
      DiffCocycle u = gen.diffcocycle(x, m), v = gen.diffcocycle(x, m);
      for (int k = 1; k <= 3; k += 2) {
        CAPTURE(k);
        DiffCocycle su = refined_sq(k, u);
        CHECK(su.omega().is_zero());
        CHECK(is_trivial(su.times(2)));
        CHECK(equal_classes(refined_sq(k, u + v), su + refined_sq(k, v)));
        CHECK(equal_classes(refined_sq(k, u + gen.exact(x, m)), su));
        if (su.degree() <= x->dimension()) {
          CHECK(rho2(integration(su)) == sq(k, rho2(integration(u))));
          CHECK(integration(su) == sq_integral(k, integration(u)));
        }
        if (sq(k - 1, rho2(integration(u))).is_zero()) CHECK(is_trivial(su));
        if (k - 1 > m) CHECK(is_trivial(su));
      }
    }
  }
}

TEST_CASE("differential profiles") {
  auto p = diff_profile(builtin("point"), 1);
  CHECK(p.flat_part == divisible_group(1));
  CHECK(p.integral_image.is_zero());
  auto c = diff_profile(builtin("circle"), 2);
  CHECK(c.flat_part == divisible_group(1));
  CHECK(c.integral_image.is_zero());
  auto r = diff_profile(builtin("rp2"), 2);
  CHECK(r.flat_part == cyclic(2));
  CHECK(r.integral_image == cyclic(2));
  auto t = diff_profile(builtin("torus"), 1);
  CHECK(t.flat_part == divisible_group(1));
  CHECK(t.integral_image == free_group(2));
  // rank of delta^0 = vertices - components
  CHECK(t.form_ambiguity_dim == builtin("torus")->count(0) - 1);
  CHECK_THROWS_AS(diff_profile(builtin("torus"), -1), DegreeError);
}

TEST_CASE("Kunneth checks") {
  auto point = builtin("point"), circle = builtin("circle"), rp2 = builtin("rp2");
  for (int m = 0; m <= 3; ++m) {
    CAPTURE(m);
    auto rp = kunneth_check(rp2, point, m);
    CHECK(rp.passed());
    CHECK(rp.items.at(0).actual == diff_profile(rp2, m).flat_part.to_string());
  }
  CHECK(kunneth_check(rp2, circle, 2).passed());
  auto cc = kunneth_check(circle, circle, 2);
  CHECK(cc.passed());
  CHECK(cc.items.at(0).actual == "(Q/Z)^2");

  for (const char* name : {"point", "circle", "rp2"}) {
    CAPTURE(name);
    auto r = bz2_kunneth_check(builtin(name), 1, 4);
    CHECK(r.passed());
  }
  CHECK(bz2_kunneth_check(rp2, 1, 4).items.at(0).actual == "Z/2 + Z/2");
  CHECK_THROWS_AS(bz2_kunneth_check(rp2, 1, 3), InputError);
}

TEST_CASE("exactness checks") {
  std::vector<std::pair<std::string, int>> cases = {{"circle", 2}, {"circle", 1}, {"torus", 1}, {"torus", 2},
                                                    {"rp2", 1},    {"rp2", 2},    {"rp2", 3},   {"klein", 2}};
  for (auto [name, m] : cases) {
    CAPTURE(name);
    CAPTURE(m);
    auto r = exactness_check(builtin(name), m, 7, 3);
    for (const auto& item : r.items) {
      CAPTURE(item.id);
      CHECK(item.pass);
    }
  }
}

TEST_CASE("trapezoid checks") {
  auto w = trapezoid_check(winding_circle());
  CHECK(w.passed());
  CHECK(w.notes["strict"] == true);
  CHECK(w.notes["square_trivial"] == true);
  CHECK(w.notes["refined_trivial"] == false);
  CHECK_THROWS_AS(trapezoid_check(chern_torus(1)), DegreeError);

  CaseGenerator gen(37);
  for (const char* name : {"torus", "rp2", "rp3", "klein", "circle"}) {
    CAPTURE(name);
    auto x = builtin(name);
    for (int s = 0; s < 3; ++s) {
      CHECK(trapezoid_check(gen.diffcocycle(x, 1)).passed());
      auto f = trapezoid_check(gen.flat(x, 1));
      CHECK(f.passed());
    }
  }
  CHECK(trapezoid_check(gen.diffcocycle(builtin("rp3"), 3)).passed());
}

TEST_CASE("naturality under pullback") {
  auto rp2 = builtin("rp2"), circle = builtin("circle");
  auto xy = product(rp2, circle);
  auto [p1, p2] = product_projections(xy, rp2, circle);
  CaseGenerator gen(41);
  for (int s = 0; s < 2; ++s) {
    DiffCocycle u = gen.diffcocycle(rp2, 1), v = gen.diffcocycle(circle, 1);
    CHECK(equal_classes(pullback(p1, refined_sq(1, u)), refined_sq(1, pullback(p1, u))));
    DiffCocycle pu = pullback(p1, u), pv = pullback(p2, v);
    CHECK(equal_classes(db_cup(pu, pv), db_cup(pu, pv)));
    CHECK(equal_classes(pullback(p1, db_cup(u, u)), db_cup(pu, pu)));
    CHECK(equal_classes(pullback(p2, dd_power(v, 2)), dd_power(pv, 2)));
  }
}
