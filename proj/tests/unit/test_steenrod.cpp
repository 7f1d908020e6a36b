#include <doctest.h>

#include <random>

#include "dcoh/cohomology/coefficients.hpp"
#include "dcoh/complex/constructions.hpp"
#include "dcoh/errors.hpp"
#include "dcoh/steenrod/steenrod.hpp"

using namespace dcoh;

namespace {

Cochain random_cochain(const ComplexPtr& x, int n, Ring ring, std::mt19937_64& rng) {
  Cochain u(x, n, ring);
  for (std::size_t i = 0; i < u.size(); ++i) u.set(i, Rational(static_cast<long>(rng() % 5) - 2));
  return u;
}

CohomologyClass z2_gen(const ComplexPtr& x, int n, std::size_t i = 0) {
  return CohomologyClass(cohomology_group(x, n, Ring::Z2).generators.at(i));
}

// every class of H^n(X; Z/2), as representatives
std::vector<CohomologyClass> all_z2_classes(const ComplexPtr& x, int n) {
  const auto& g = cohomology_group(x, n, Ring::Z2);
  std::vector<CohomologyClass> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << g.generators.size()); ++mask) {
    Cochain u(x, n, Ring::Z2);
    for (std::size_t i = 0; i < g.generators.size(); ++i)
      if (mask >> i & 1) u += g.generators[i];
    out.emplace_back(u);
  }
  return out;
}

std::vector<std::string> small_corpus() { return {"circle", "sphere(2)", "torus", "klein", "rp2", "rp3"}; }

}  // namespace

TEST_CASE("cup examples") {
  auto torus = builtin("torus");
  Cochain one(torus, 0, Ring::Z, std::vector<Rational>(torus->count(0), Rational(1)));
  std::mt19937_64 rng(1);
  Cochain u = random_cochain(torus, 1, Ring::Z, rng);
  CHECK(cup(one, u) == u);
  CHECK(cup(u, one) == u);
  const auto& h1 = cohomology_group(torus, 1, Ring::Z);
  REQUIRE(h1.generators.size() == 2);
  CohomologyClass a(h1.generators[0]), b(h1.generators[1]);
  auto c = cup(a, b).coordinates();
  REQUIRE(c.size() == 1);
  CHECK((c[0] == 1 || c[0] == -1));
  CHECK(cup(a, a).is_zero());

  auto rp2 = builtin("rp2");
  auto x = z2_gen(rp2, 1);
  CHECK(cup(x, x) == z2_gen(rp2, 2));
  CHECK_FALSE(cup(x, x).is_zero());

  CHECK(product_ring(Ring::Z, Ring::Q) == Ring::Q);
  CHECK(product_ring(Ring::QZ, Ring::Z) == Ring::QZ);
  CHECK_THROWS_AS(product_ring(Ring::QZ, Ring::QZ), RingMismatch);
  CHECK_THROWS_AS(product_ring(Ring::Q, Ring::Z2), RingMismatch);
  CHECK_THROWS_AS(cup(u, random_cochain(builtin("rp2"), 1, Ring::Z, rng)), ValidationError);
}

TEST_CASE("cup is a chain map up to sign") {
  std::mt19937_64 rng(2);
  for (const auto& name : small_corpus()) {
    auto x = resolve_space(name);
    for (int p = 0; p <= x->dimension(); ++p)
      for (int q = 0; p + q <= x->dimension(); ++q) {
        Cochain u = random_cochain(x, p, Ring::Z, rng), v = random_cochain(x, q, Ring::Z, rng);
        Cochain rhs = cup(coboundary(u), v) + cup(u, coboundary(v)).scaled(p % 2 ? -1 : 1);
        CHECK(coboundary(cup(u, v)) == rhs);
      }
  }
}

TEST_CASE("cup_i coboundary identity") {
  std::mt19937_64 rng(3);
  for (const auto& name : {"sphere(4)", "rp3", "rp2", "torus"}) {
    auto x = resolve_space(name);
    for (int p = 0; p <= x->dimension(); ++p)
      for (int q = 0; q <= x->dimension(); ++q)
        for (int i = 0; i <= std::min(p, q); ++i) {
          if (p + q - i + 1 > x->dimension() + 1) continue;
          CAPTURE(name);
          CAPTURE(p);
          CAPTURE(q);
          CAPTURE(i);
          for (int trial = 0; trial < 2; ++trial) {
            Cochain u = random_cochain(x, p, Ring::Z2, rng), v = random_cochain(x, q, Ring::Z2, rng);
            if (i == 0) {
              CHECK(cup_i(u, v, 0) == cup(u, v));
              continue;
            }
            Cochain rhs = cup_i(coboundary(u), v, i) + cup_i(u, coboundary(v), i) + cup_i(u, v, i - 1) +
                          cup_i(v, u, i - 1);
            CHECK(coboundary(cup_i(u, v, i)) == rhs);
          }
        }
  }
}

TEST_CASE("cup_i edge cases") {
  auto x = builtin("rp2");
  std::mt19937_64 rng(4);
  Cochain u = random_cochain(x, 1, Ring::Z2, rng);
  CHECK(cup_i(u, u, 3).is_zero());
  CHECK(cup_i(u, u, 2).is_zero());
  CHECK_THROWS_AS(cup_i(u, u, -1), InputError);
  CHECK_THROWS_AS(cup_i(random_cochain(x, 1, Ring::Z, rng), u, 1), RingMismatch);
  // a cup_1 a represents Sq^0 a = a
  auto a = z2_gen(x, 1);
  CHECK(CohomologyClass(cup_i(a.representative(), a.representative(), 1)) == a);
}

TEST_CASE("rational cup_1 identity") {
  std::mt19937_64 rng(5);
  auto x = builtin("sphere(5)");
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; p + q <= 5; ++q) {
      Cochain u = random_cochain(x, p, Ring::Q, rng), v = random_cochain(x, q, Ring::Q, rng);
      int s_uv = (p + q + 1) % 2 ? -1 : 1, s_vu = (p * q + p + q) % 2 ? -1 : 1;
      Cochain rhs = cup1_rational(coboundary(u), v) + cup1_rational(u, coboundary(v)).scaled(p % 2 ? -1 : 1) +
                    cup(u, v).scaled(s_uv) + cup(v, u).scaled(s_vu);
      CHECK(coboundary(cup1_rational(u, v)) == rhs);
    }
  for (const auto& name : {"torus", "rp3", "klein"}) {
    auto y = resolve_space(name);
    for (const auto& g : cohomology_group(y, 1, Ring::Z).generators) {
      Cochain w = change_ring(g, Ring::Q);
      CHECK(coboundary(cup1_rational(w, w)) == cup(w, w).scaled(-2));
    }
  }
}

TEST_CASE("Steenrod squares: unit, top square and vanishing") {
  for (const auto& name : small_corpus()) {
    auto x = resolve_space(name);
    for (int n = 0; n <= x->dimension(); ++n)
      for (const auto& c : all_z2_classes(x, n)) {
        CAPTURE(name);
        CAPTURE(n);
        CHECK(sq(0, c) == c);
        CHECK(sq(n, c) == cup(c, c));
        CHECK(sq(n + 1, c).is_zero());
        CHECK(sq(1, c) == bockstein_beta2(c));
        CHECK(sq(1, sq(1, c)).is_zero());
      }
  }
  CHECK_THROWS_AS(sq(1, CohomologyClass(cohomology_group(builtin("rp2"), 2, Ring::Z).generators[0])), RingMismatch);
}

TEST_CASE("Steenrod squares on rp(4) and rp(5)") {
  auto rp4 = builtin("rp(4)");
  auto a = z2_gen(rp4, 1);
  auto a2 = cup(a, a);
  auto a4 = power(a, 4);
  CHECK_FALSE(a4.is_zero());
  CHECK(sq(2, a2) == a4);
  CHECK(sq(1, a2).is_zero());
  CHECK(sq(1, a) == a2);
  CHECK(sq(1, power(a, 3)) == a4);  // Sq^1 a^3 = 3 a^4

  auto rp5 = builtin("rp(5)");
  CohomologyClass x(cohomology_group(rp5, 2, Ring::Z).generators.at(0));
  auto b = z2_gen(rp5, 1);
  CHECK(rho2(x) == cup(b, b));
  CHECK(sq_integral(1, x).is_zero());
  CHECK(sq_integral(3, x).is_zero());
  CHECK(rho2(sq_integral(3, x)) == sq(3, rho2(x)));
  CHECK_THROWS_AS(sq_integral(2, x), InputError);
  try {
    sq_integral(4, x);
  } catch (const InputError& e) {
    CHECK(std::string(e.what()) == "even Steenrod squares do not lift");
  }
}

TEST_CASE("integral squares on the corpus") {
  for (const auto& name : small_corpus()) {
    auto x = resolve_space(name);
    for (int n = 0; n <= x->dimension(); ++n)
      for (const auto& g : cohomology_group(x, n, Ring::Z).generators) {
        CohomologyClass y(g);
        CHECK(sq_integral(1, y).is_zero());
        for (int k = 1; k <= 5; k += 2) {
          auto s = sq_integral(k, y);
          CHECK(multiply(s, 2).is_zero());
          CHECK(rho2(s) == sq(k, rho2(y)));
        }
      }
  }
}

TEST_CASE("Steenrod squares are linear, representative independent and natural") {
  std::mt19937_64 rng(6);
  auto rp3 = builtin("rp3");
  auto circle = builtin("circle");
  auto xy = product(rp3, circle);
  auto [p1, p2] = product_projections(xy, rp3, circle);
  for (int n = 1; n <= 2; ++n) {
    auto classes = all_z2_classes(rp3, n);
    for (const auto& c : classes)
      for (int k = 0; k <= n + 1; ++k) {
        Cochain shifted = c.representative() + coboundary(random_cochain(rp3, n - 1, Ring::Z2, rng));
        CHECK(sq(k, CohomologyClass(shifted)) == sq(k, c));
        for (const auto& d : classes) CHECK(sq(k, c + d) == sq(k, c) + sq(k, d));
        CohomologyClass pulled(pullback(p1, c.representative()));
        CHECK(CohomologyClass(pullback(p1, sq(k, c).representative())) == sq(k, pulled));
      }
  }
}

TEST_CASE("Cartan formula on products") {
  auto x = product(builtin("rp2"), builtin("rp2"));
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; n + m <= 4; ++m) {
      auto xs = all_z2_classes(x, n);
      auto ys = all_z2_classes(x, m);
      for (std::size_t i = 0; i < xs.size(); i += 3)
        for (std::size_t j = 0; j < ys.size(); j += 5)
          for (int k = 0; k <= n + m; ++k) {
            CohomologyClass rhs(Cochain(x, n + m + k, Ring::Z2));
            for (int t = 0; t <= k; ++t) rhs = rhs + cup(sq(t, xs[i]), sq(k - t, ys[j]));
            CHECK(sq(k, cup(xs[i], ys[j])) == rhs);
          }
    }
}

TEST_CASE("Adem relations of total degree at most 6") {
  auto check = [](const CohomologyClass& c, int top) {
    CHECK(sq(1, sq(1, c)).is_zero());
    CHECK(sq(1, sq(2, c)) == sq(3, c));
    if (c.degree() + 4 <= top) {
      CHECK(sq(2, sq(2, c)) == sq(3, sq(1, c)));
      CHECK(sq(1, sq(3, c)).is_zero());
    }
  };
  auto rp = product(builtin("rp2"), builtin("rp2"));
  for (int n = 1; n <= 2; ++n)
    for (const auto& c : all_z2_classes(rp, n)) check(c, 4);
  // a 6-dimensional space where Sq^2 Sq^2 = Sq^3 Sq^1 is not vacuous
  auto x = product(builtin("rp(4)"), builtin("rp2"), 6);
  for (int n = 1; n <= 2; ++n)
    for (const auto& g : cohomology_group(x, n, Ring::Z2).generators) check(CohomologyClass(g), 6);
  // with a from rp(4) and b from rp2: Sq^2 Sq^2 (ab) = a^4 b^2 != 0
  bool nonvacuous = false;
  for (const auto& g : cohomology_group(x, 2, Ring::Z2).generators)
    nonvacuous = nonvacuous || !sq(2, sq(2, CohomologyClass(g))).is_zero();
  CHECK(nonvacuous);
}

TEST_CASE("Steenrod squares commute with suspension") {
  for (const auto& name : {"rp2", "rp3", "klein"}) {
    auto x = resolve_space(name);
    auto sx = suspension(x);
    for (int n = 1; n <= x->dimension(); ++n)
      for (const auto& c : all_z2_classes(x, n))
        for (int k = 0; k <= n; ++k) {
          CohomologyClass s(suspend_cochain(sx, c.representative()));
          CohomologyClass lhs = sq(k, s);
          CohomologyClass rhs(suspend_cochain(sx, sq(k, c).representative()));
          CHECK(lhs == rhs);
        }
  }
}
