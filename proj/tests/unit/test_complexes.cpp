#include <doctest.h>

#include <map>
#include <random>

#include "dcoh/complex/constructions.hpp"
#include "dcoh/complex/io.hpp"
#include "dcoh/errors.hpp"
#include "dcoh/linalg/smith.hpp"

using namespace dcoh;

namespace {

std::vector<std::string> corpus_names() {
  return {"point", "circle", "sphere(0)", "sphere(1)", "sphere(2)", "sphere(3)", "torus", "klein", "rp2", "rp3", "rp(4)"};
}

// every codimension-1 face of a top simplex lies in exactly two top simplices
bool closed_pseudomanifold(const SimplicialComplex& x) {
  std::map<Simplex, int> uses;
  for (const auto& s : x.simplices(x.dimension()))
    for (const auto& f : boundary_faces(s)) ++uses[f];
  for (auto& [f, k] : uses)
    if (k != 2) return false;
  return uses.size() == x.count(x.dimension() - 1);
}

Cochain random_cochain(const ComplexPtr& x, int n, Ring ring, std::mt19937_64& rng) {
  Cochain u(x, n, ring);
  for (std::size_t i = 0; i < u.size(); ++i) {
    long v = static_cast<long>(rng() % 7) - 3;
    u.set(i, ring == Ring::QZ || ring == Ring::Q ? Rational(v, 4) : Rational(v));
  }
  return u;
}

}  // namespace

TEST_CASE("parse_complex examples") {
  auto p = parse_complex(R"({"vertex_count":1,"facets":[[0]]})");
  CHECK(p->vertex_count() == 1);
  CHECK(p->facets().size() == 1);
  auto c = parse_complex(R"({"vertex_count":3,"facets":[[0,1],[1,2],[0,2]]})");
  CHECK(c->euler_characteristic() == 0);
  CHECK(same_complex(*c, *builtin("circle")));
  try {
    parse_complex(R"({"vertex_count":3,"facets":[[2,1]]})");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("not strictly increasing") != std::string::npos);
    CHECK(std::string(e.what()).find("[2,1]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_complex(R"({"vertex_count":2,"facets":[[0,5]]})"), ValidationError);
  try {
    parse_complex("{\"vertex_count\":3,\n \"facets\": [[0,1],]}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_complex(R"({"vertex_count":3,"facets":[[0,"a"]]})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("facets[0][1]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_complex(R"({"facets":[]})"), ParseError);
}

TEST_CASE("complex round trip through json") {
  auto t = builtin("torus");
  auto back = parse_complex(complex_to_json(*t).dump());
  CHECK(same_complex(*t, *back));
  CHECK(back->content_hash() == t->content_hash());
}

TEST_CASE("builtin corpus shapes") {
  auto pt = builtin("point");
  CHECK(pt->vertex_count() == 1);
  CHECK(pt->facets().size() == 1);

  auto rp2 = builtin("rp2");
  CHECK(rp2->vertex_count() == 6);
  CHECK(rp2->count(2) == 10);
  CHECK(rp2->euler_characteristic() == 1);
  CHECK(closed_pseudomanifold(*rp2));

  CHECK(builtin("circle")->vertex_count() == 3);
  CHECK(builtin("torus")->vertex_count() == 7);
  CHECK(builtin("torus")->euler_characteristic() == 0);
  CHECK(closed_pseudomanifold(*builtin("torus")));
  CHECK(builtin("klein")->vertex_count() == 9);
  CHECK(builtin("klein")->euler_characteristic() == 0);
  CHECK(closed_pseudomanifold(*builtin("klein")));
  auto rp3 = builtin("rp3");
  CHECK(rp3->vertex_count() == 11);
  CHECK(rp3->euler_characteristic() == 0);
  CHECK(closed_pseudomanifold(*rp3));

  for (int n = 0; n <= 4; ++n) {
    auto s = builtin("sphere(" + std::to_string(n) + ")");
    CHECK(s->vertex_count() == static_cast<std::size_t>(n + 2));
    CHECK(s->euler_characteristic() == 1 + (n % 2 == 0 ? 1 : -1));
  }
  CHECK(builtin("sphere2") == builtin("sphere(2)"));

  auto rp4 = builtin("rp(4)");
  CHECK(rp4->vertex_count() == 31);  // (2^6 - 2) / 2
  CHECK(rp4->euler_characteristic() == 1);
  CHECK(closed_pseudomanifold(*rp4));
  CHECK(builtin("rp4") == rp4);
  CHECK(builtin("rp(2)") == rp2);

  CHECK_THROWS_AS(builtin("banana"), UnknownResourceError);
  CHECK_THROWS_AS(builtin("rp(0)"), UnknownResourceError);
}

TEST_CASE("rp(5) face counts") {
  auto rp5 = builtin("rp(5)");
  // barycentric subdivision of the boundary of the 6-simplex has f_k = (number of
  // flags of length k+1 of proper nonempty subsets of a 7-set); the antipodal
  // quotient halves each count
  std::vector<std::size_t> expected{63, 903, 4200, 8400, 7560, 2520};
  REQUIRE(rp5->dimension() == 5);
  for (int k = 0; k <= 5; ++k) CHECK(rp5->count(k) == expected[k]);
  CHECK(closed_pseudomanifold(*rp5));
}

TEST_CASE("coboundary matrices") {
  auto pt = builtin("point");
  auto d = coboundary_matrix(*pt, 0, Ring::Z);
  CHECK(d.rows() == 0);
  CHECK(d.cols() == 1);
  auto c = builtin("circle");
  auto d0 = coboundary_matrix(*c, 0, Ring::Z);
  CHECK(d0.rows() == 3);
  CHECK(d0.cols() == 3);
  CHECK(smith_normal_form(d0).rank() == 2);
  CHECK_THROWS_AS(coboundary_matrix(*c, 2, Ring::Z), DegreeError);
  CHECK_THROWS_AS(coboundary_matrix(*c, -1, Ring::Z), DegreeError);
  for (auto name : corpus_names()) {
    auto x = builtin(name);
    for (int n = 0; n + 1 <= x->dimension(); ++n) {
      for (Ring r : {Ring::Z, Ring::Z2}) {
        auto a = coboundary_matrix(*x, n, r);
        auto b = n + 1 <= x->dimension() ? coboundary_matrix(*x, n + 1, r) : SparseIntMatrix(0, a.rows());
        auto prod = b.multiply(a);
        bool zero = true;
        for (auto& e : prod.entries())
          if (r == Ring::Z ? e.value != 0 : mpz_odd_p(e.value.get_mpz_t())) zero = false;
        CHECK_MESSAGE(zero, name << " degree " << n);
      }
    }
  }
}

TEST_CASE("cochain coboundary squares to zero in every ring") {
  std::mt19937_64 rng(5);
  for (auto name : corpus_names()) {
    auto x = builtin(name);
    for (int n = 0; n <= x->dimension(); ++n)
      for (Ring r : {Ring::Z, Ring::Z2, Ring::Q, Ring::QZ}) {
        auto u = random_cochain(x, n, r, rng);
        CHECK(coboundary(coboundary(u)).is_zero());
      }
  }
}

TEST_CASE("products") {
  auto edge = SimplicialComplex::make("edge", 2, {{0, 1}});
  auto sq = product(edge, edge);
  CHECK(sq->count(2) == 2);
  CHECK(sq->vertex_count() == 4);
  auto c = builtin("circle");
  auto cc = product(c, c);
  CHECK(cc->euler_characteristic() == 0);
  auto x = builtin("rp2");
  auto xp = product(x, builtin("point"));
  CHECK(same_complex(*xp, *x));
  CHECK(product(x, c)->euler_characteristic() == 0);
  CHECK(product(x, x)->euler_characteristic() == 1);
  // associativity up to relabeling: same face counts
  auto a = product(product(edge, c), x), b = product(edge, product(c, x));
  for (int k = 0; k <= 5; ++k) CHECK(a->count(k) == b->count(k));
  // skeleton agrees with the full product below the cut
  auto full = product(x, c);
  auto cut = product(x, c, 2);
  for (int k = 0; k <= 2; ++k) CHECK(cut->simplices(k) == full->simplices(k));
  CHECK(cut->dimension() == 2);
  CHECK(same_complex(*resolve_space("rp2*circle"), *full));
  CHECK(same_complex(*resolve_space("rp2 x circle"), *full));
}

TEST_CASE("suspension") {
  auto s0 = builtin("sphere(0)");
  auto s = suspension(s0);
  CHECK(s->vertex_count() == 4);
  CHECK(s->count(1) == 4);
  CHECK(s->count(2) == 0);
  for (auto name : corpus_names()) {
    auto x = builtin(name);
    CHECK(suspension(x)->euler_characteristic() == 2 - x->euler_characteristic());
  }
  CHECK(same_complex(*resolve_space("susp(circle)"), *suspension(builtin("circle"))));
  std::mt19937_64 rng(8);
  auto x = builtin("rp2");
  auto sx = suspension(x);
  for (int n = 0; n <= 2; ++n) {
    auto u = random_cochain(x, n, Ring::Z, rng);
    CHECK(coboundary(suspend_cochain(sx, u)) == suspend_cochain(sx, coboundary(u)));
  }
}

TEST_CASE("pullback") {
  std::mt19937_64 rng(11);
  auto x = builtin("torus");
  auto id = SimplicialMap::identity(x);
  auto u = random_cochain(x, 1, Ring::Z, rng);
  CHECK(pullback(id, u) == u);

  auto pt = builtin("point");
  SimplicialMap constant(x, x, std::vector<Vertex>(7, 3));
  CHECK(pullback(constant, u).is_zero());

  auto c = builtin("circle");
  auto cc = product(c, c);
  auto [px, py] = product_projections(cc, c, c);
  for (int n = 0; n <= 1; ++n)
    for (Ring r : {Ring::Z, Ring::Z2, Ring::Q, Ring::QZ}) {
      auto v = random_cochain(c, n, r, rng);
      CHECK(coboundary(pullback(px, v)) == pullback(px, coboundary(v)));
      CHECK(coboundary(pullback(py, v)) == pullback(py, coboundary(v)));
    }
  // a non-order-preserving automorphism of the circle (reflection) is still a chain map
  SimplicialMap flip(c, c, {2, 1, 0});
  auto v = random_cochain(c, 0, Ring::Z, rng);
  CHECK(coboundary(pullback(flip, v)) == pullback(flip, coboundary(v)));
  // composition
  SimplicialMap rot(c, c, {1, 2, 0});
  auto w = random_cochain(c, 1, Ring::Z, rng);
  CHECK(pullback(compose(rot, flip), w) == pullback(flip, pullback(rot, w)));
  CHECK_THROWS_AS(pullback(px, random_cochain(x, 1, Ring::Z, rng)), ValidationError);
  CHECK_THROWS_AS(SimplicialMap(c, pt, {0, 0}), ValidationError);
  // a vertex map sending an edge onto a non-edge is rejected
  auto s0 = builtin("sphere(0)");
  CHECK_THROWS_AS(SimplicialMap(c, s0, {0, 1, 1}), ValidationError);
}

TEST_CASE("cochain json") {
  auto rp2 = builtin("rp2");
  auto u = parse_cochain(R"({"complex":"rp2","degree":1,"ring":"QZ","values":[[[0,1],"3/2"],[[1,2],"-1/4"]]})");
  CHECK(u.value_on({0, 1}) == Rational(1, 2));
  CHECK(u.value_on({1, 2}) == Rational(3, 4));
  auto back = parse_cochain(cochain_to_json(u).dump());
  CHECK(back == u);
  CHECK_THROWS_AS(parse_cochain(R"({"complex":"rp2","degree":1,"ring":"Z","values":[[[0,1],"1/2"]]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_cochain(R"({"complex":"rp2","degree":1,"ring":"Z","values":[[[0,6],"1"]]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_cochain(R"({"complex":"nowhere","degree":1,"ring":"Z","values":[]})"),
                  UnknownResourceError);
  CHECK_THROWS_AS(parse_cochain(R"({"complex":"rp2","degree":1,"ring":"R","values":[]})"), InputError);
  auto inline_c = parse_cochain(
      R"({"complex":{"vertex_count":2,"facets":[[0,1]]},"degree":0,"ring":"Z2","values":[[[1],"3"]]})");
  CHECK(inline_c.value_on({1}) == 1);
}
