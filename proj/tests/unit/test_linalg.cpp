#include <doctest.h>

#include <random>

#include "dcoh/linalg/errors.hpp"
#include "dcoh/linalg/gf2.hpp"
#include "dcoh/linalg/group_descriptor.hpp"
#include "dcoh/linalg/smith.hpp"
#include "dcoh/linalg/solve.hpp"
#include "oracles.hpp"

using namespace dcoh;

namespace {

SparseIntMatrix dense(std::vector<std::vector<long>> rows, std::size_t cols) {
  oracle::Dense d;
  for (auto& r : rows) {
    std::vector<Integer> out;
    for (long x : r) out.emplace_back(x);
    d.push_back(out);
  }
  return SparseIntMatrix::from_dense(d, cols);
}

void check_smith(const SparseIntMatrix& m, const SmithForm& s) {
  SparseIntMatrix u = s.u(), v = s.v();
  CHECK(u.multiply(m).multiply(v) == s.d());
  CHECK(abs_value(oracle::determinant(u.to_dense())) == 1);
  CHECK(abs_value(oracle::determinant(v.to_dense())) == 1);
  const auto& d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] > 0);
    if (i + 1 < d.size()) CHECK(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
  }
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(parse_rational("+2/2")) == "1");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK(fractional_part(parse_rational("-1/3")) == Rational(2, 3));
  CHECK(fractional_part(Rational(5, 2)) == Rational(1, 2));
}

TEST_CASE("sparse matrix validation") {
  CHECK_THROWS_AS(SparseIntMatrix::from_entries(2, 2, {{0, 0, Integer(1)}, {0, 0, Integer(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(SparseIntMatrix::from_entries(2, 2, {{2, 0, Integer(1)}}), std::invalid_argument);
  auto m = SparseIntMatrix::from_entries(2, 3, {{1, 2, Integer(5)}, {0, 1, Integer(0)}, {0, 0, Integer(-1)}});
  CHECK(m.nnz() == 2);
  CHECK(m.at(1, 2) == 5);
  CHECK(m.transpose().at(2, 1) == 5);
  CHECK(m.transpose().transpose() == m);
}

TEST_CASE("smith normal form examples") {
  SparseIntMatrix empty(0, 0);
  auto s0 = smith_normal_form(empty);
  CHECK(s0.rank() == 0);
  CHECK(s0.u().rows() == 0);
  CHECK(s0.v().rows() == 0);

  auto s1 = smith_normal_form(dense({{2}}, 1));
  CHECK(s1.diagonal() == std::vector<Integer>{2});

  auto m = dense({{2, 4}, {6, 8}}, 2);
  auto s2 = smith_normal_form(m);
  CHECK(s2.diagonal() == std::vector<Integer>{2, 4});
  check_smith(m, s2);
  // oracle: d1 = gcd of entries, d1*d2 = |det|
  CHECK(oracle::invariant_factors(m.to_dense(), 2) == std::vector<Integer>{2, 4});

  auto d = dense({{2, 0}, {0, 3}}, 2);
  CHECK(smith_normal_form(d).diagonal() == std::vector<Integer>{1, 6});
  check_smith(d, smith_normal_form(d));

  auto z = SparseIntMatrix(3, 2);
  CHECK(smith_normal_form(z).rank() == 0);
}

TEST_CASE("smith normal form against determinantal divisors and rational rank") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    auto dd = oracle::random_dense(rng, rows, cols, -9, 9);
    // sparsify some entries
    for (auto& r : dd)
      for (auto& x : r)
        if (rng() % 3 == 0) x = 0;
    auto m = SparseIntMatrix::from_dense(dd, cols);
    auto s = smith_normal_form(m);
    check_smith(m, s);
    CHECK(s.rank() == oracle::rational_rank(dd));
    if (rows <= 4 && cols <= 4) CHECK(s.diagonal() == oracle::invariant_factors(dd, cols));
  }
}

TEST_CASE("smith normal form is deterministic") {
  std::mt19937_64 rng(99);
  auto dd = oracle::random_dense(rng, 5, 6, -9, 9);
  auto m = SparseIntMatrix::from_dense(dd, 6);
  auto a = smith_normal_form(m), b = smith_normal_form(m);
  CHECK(a.u() == b.u());
  CHECK(a.v() == b.v());
  CHECK(a.diagonal() == b.diagonal());
}

TEST_CASE("smith bit bound guard") {
  auto m = dense({{1000003, 999999}, {7, 1000001}}, 2);
  SmithOptions opts;
  opts.max_bits = 4;
  CHECK_THROWS_AS(smith_normal_form(m, opts), ResourceLimitError);
  CHECK_NOTHROW(smith_normal_form(m));
}

TEST_CASE("solve_integer examples") {
  auto x = solve_integer(dense({{2}}, 1), {Integer(4)});
  REQUIRE(x);
  CHECK((*x)[0] == 2);
  CHECK_FALSE(solve_integer(dense({{2}}, 1), {Integer(3)}));
  CHECK_THROWS_AS(solve_integer(dense({{2}}, 1), {Integer(3), Integer(1)}), DimensionMismatch);

  // coboundary of the 3-vertex circle: edges 01, 02, 12; (delta f)(ab) = f(b) - f(a)
  auto d0 = dense({{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}}, 3);
  // a 1-cochain with zero total around the loop 01 + 12 - 02
  std::vector<Integer> b{Integer(3), Integer(5), Integer(2)};
  auto y = solve_integer(d0, b);
  REQUIRE(y);
  CHECK(d0.multiply(std::span<const Integer>(*y)) == b);
  auto brute = oracle::brute_force_solve(d0.to_dense(), 3, b, 6);
  CHECK(brute.has_value());
  CHECK_FALSE(solve_integer(d0, {Integer(1), Integer(0), Integer(0)}));
}

TEST_CASE("solve_integer against bounded brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    auto dd = oracle::random_dense(rng, rows, cols, -4, 4);
    auto m = SparseIntMatrix::from_dense(dd, cols);
    std::vector<Integer> b(rows);
    for (auto& v : b) v = static_cast<long>(rng() % 9) - 4;
    auto x = solve_integer(m, b);
    auto brute = oracle::brute_force_solve(dd, cols, b, 5);
    if (x) {
      CHECK(m.multiply(std::span<const Integer>(*x)) == b);
    }
    if (brute) CHECK(x.has_value());
    if (!x) {
      // no integer point: also none in the box
      CHECK_FALSE(brute.has_value());
    }
    auto set = solve_integer_set(m, b);
    CHECK(set.has_value() == x.has_value());
    if (set) {
      for (auto& k : set->kernel_basis) {
        auto mk = m.multiply(std::span<const Integer>(k));
        for (auto& e : mk) CHECK(e == 0);
      }
      CHECK(set->kernel_basis.size() == cols - oracle::rational_rank(dd));
    }
  }
}

TEST_CASE("solve_rational") {
  auto m = dense({{2, 4}, {1, 2}}, 2);
  auto x = solve_rational(m, {Rational(1), Rational(1, 2)});
  REQUIRE(x);
  CHECK(m.multiply(std::span<const Rational>(*x)) == std::vector<Rational>{Rational(1), Rational(1, 2)});
  CHECK_FALSE(solve_rational(m, {Rational(1), Rational(1)}));
}

TEST_CASE("quotient_structure examples") {
  auto g = quotient_structure(SparseIntMatrix::identity(1), dense({{2}}, 1));
  CHECK(g.free_rank == 0);
  CHECK(g.invariant_factors == std::vector<Integer>{2});
  auto g2 = quotient_structure(SparseIntMatrix::identity(2), SparseIntMatrix(2, 0));
  CHECK(g2.free_rank == 2);
  CHECK(g2.invariant_factors.empty());
  CHECK_THROWS_AS(quotient_structure(dense({{2}}, 1), dense({{1}}, 1)), NotSublatticeError);
  CHECK_THROWS_AS(quotient_structure(dense({{1}, {0}}, 1), dense({{0}, {1}}, 1)), NotSublatticeError);
}

TEST_CASE("quotient_structure invariant under unimodular change of basis") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    // Z = random 4x3, B = Z * random integer 3x3
    auto zd = oracle::random_dense(rng, 4, 3, -3, 3);
    auto cd = oracle::random_dense(rng, 3, 3, -3, 3);
    auto z = SparseIntMatrix::from_dense(zd, 3);
    auto b = z.multiply(SparseIntMatrix::from_dense(cd, 3));
    auto g = quotient_structure(z, b);
    // unimodular change: elementary ops on columns
    auto e = SparseIntMatrix::from_dense(oracle::Dense{{1, 2, 0}, {0, 1, 0}, {-3, 0, 1}}, 3);
    auto f = SparseIntMatrix::from_dense(oracle::Dense{{0, 1, 0}, {1, 0, 0}, {0, 5, 1}}, 3);
    auto g2 = quotient_structure(z.multiply(e), b.multiply(f));
    CHECK(g == g2);
  }
}

TEST_CASE("in_lattice_image examples") {
  auto one = dense({{1}}, 1);
  CHECK(in_lattice_image({Rational(0)}, one, SparseIntMatrix(1, 0)));
  CHECK_FALSE(in_lattice_image({Rational(1, 2)}, one, SparseIntMatrix(1, 0)));
  CHECK(in_lattice_image({Rational(1, 2)}, one, std::vector<std::vector<Rational>>{{Rational(1, 4)}}));
  CHECK_THROWS_AS(in_lattice_image({Rational(1), Rational(2)}, one, SparseIntMatrix(1, 0)), DimensionMismatch);
  // non-identity L: v in 2Z + Q(1,1)
  auto l = dense({{2}, {0}}, 1);
  auto w = dense({{1}, {1}}, 1);
  CHECK(in_lattice_image({Rational(3), Rational(1)}, l, w));      // (3,1) = (2,0) + (1,1)
  CHECK_FALSE(in_lattice_image({Rational(2), Rational(1)}, l, w));  // x - y must be even
  CHECK(in_lattice_image({Rational(5, 2), Rational(1, 2)}, l, w));
}

TEST_CASE("group descriptor algebra") {
  auto z2 = cyclic(Integer(2)), z3 = cyclic(Integer(3)), z4 = cyclic(Integer(4));
  CHECK(direct_sum(z2, z3).invariant_factors == std::vector<Integer>{6});
  CHECK(direct_sum(z2, z4).invariant_factors == (std::vector<Integer>{2, 4}));
  CHECK(tensor(z4, z2) == z2);
  CHECK(tensor(z2, z3).is_zero());
  CHECK(tensor(free_group(2), z2) == make_group(0, {Integer(2), Integer(2)}));
  CHECK(tensor(free_group(1), divisible_group(1)) == divisible_group(1));
  CHECK(tensor(z2, divisible_group(1)).is_zero());
  CHECK(tor(z2, z4) == z2);
  CHECK(tor(z4, divisible_group(1)) == z4);
  CHECK(tor(free_group(3), z2).is_zero());
  CHECK(two_torsion(direct_sum(z4, divisible_group(1))) == make_group(0, {Integer(2), Integer(2)}));
  CHECK(direct_sum(free_group(1), z2).to_string() == "Z + Z/2");
}

TEST_CASE("gf2 echelon and kernel") {
  // columns of the mod 2 circle coboundary: vertex v -> edges containing v
  std::vector<Gf2Vector> cols{{0, 1}, {0, 2}, {1, 2}};
  CHECK(gf2_rank(3, cols) == 2);
  auto k = gf2_kernel(3, cols);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Gf2Vector{0, 1, 2});
  Gf2Echelon e(3);
  CHECK(e.insert({0, 1}, {0}));
  CHECK(e.insert({1, 2}, {1}));
  auto r = e.reduce({0, 2});
  CHECK(r.residual.empty());
  CHECK(r.tag == Gf2Vector{0, 1});
}
