#include "dcoh/verify/reports.hpp"

#include "dcoh/cohomology/coefficients.hpp"
#include "dcoh/complex/constructions.hpp"
#include "dcoh/diffcoh/checks.hpp"
#include "dcoh/errors.hpp"
#include "dcoh/linalg/gf2.hpp"
#include "dcoh/linalg/smith.hpp"

namespace dcoh::verify {

using nlohmann::json;

namespace {

bool in_range(const ComplexPtr& x, int n) { return n >= 0 && n <= x->dimension(); }

std::vector<Rational> coords_or_empty(const Cochain& u) {
  if (!in_range(u.complex(), u.degree())) return {};
  return class_coordinates(u);
}

Gf2Vector z2_bits(const std::vector<Rational>& coords) {
  Gf2Vector out;
  for (std::uint32_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) out.push_back(i);
  return out;
}

// Bits of a 2-torsion element of a Z-group (coordinate o/2 in an even-order
// summand); nullopt if the element is not 2-torsion.
std::optional<Gf2Vector> two_torsion_bits(const std::vector<Rational>& coords, const std::vector<Integer>& orders) {
  Gf2Vector out;
  for (std::uint32_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    const Integer& o = orders[i];
    if (o == 0 || o % 2 != 0 || coords[i] != Rational(o / 2)) return std::nullopt;
    out.push_back(i);
  }
  return out;
}

std::size_t even_orders(const std::vector<Integer>& orders) {
  std::size_t k = 0;
  for (const auto& o : orders)
    if (o != 0 && o % 2 == 0) ++k;
  return k;
}

std::vector<Integer> orders_of(const ComplexPtr& x, int n, Ring ring) {
  if (!in_range(x, n)) return {};
  return cohomology_group(x, n, ring).orders;
}

// Order of the subgroup of the torsion part of H^n(Z) generated by the given
// coordinate vectors (free coordinates must vanish); 0 if some vector has a
// free component.
Integer generated_order(const std::vector<std::vector<Rational>>& images, const std::vector<Integer>& orders) {
  std::vector<std::size_t> torsion;
  Integer full = 1;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) {
      torsion.push_back(i);
      full *= orders[i];
    }
  std::vector<std::vector<Integer>> cols;
  for (const auto& v : images) {
    std::vector<Integer> col;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (orders[i] == 0 && v[i] != 0) return 0;
      if (orders[i] != 0) col.push_back(v[i].get_num());
    }
    cols.push_back(col);
  }
  for (std::size_t t = 0; t < torsion.size(); ++t) {
    std::vector<Integer> col(torsion.size(), Integer(0));
    col[t] = orders[torsion[t]];
    cols.push_back(col);
  }
  if (torsion.empty()) return 1;
  SmithForm s = smith_normal_form(matrix_from_columns(torsion.size(), cols));
  Integer cokernel = 1;
  for (const auto& d : s.diagonal()) cokernel *= d;
  return full / cokernel;
}

}  // namespace

namespace {

json sequence_positions(const ComplexPtr& x, int n) {
  json out = json::object();
  const std::string tag = "H^" + std::to_string(n);
  const auto& hz = cohomology_group(x, n, Ring::Z);
  const auto& h2 = cohomology_group(x, n, Ring::Z2);
  const auto next_orders = orders_of(x, n + 1, Ring::Z);

  // ker(beta) = im(rho2) at H^n(Z2)
  {
    std::vector<Gf2Vector> rho;
    bool composite_zero = true;
    for (const auto& g : hz.generators) {
      Cochain r = rho2(CohomologyClass(g)).representative();
      rho.push_back(z2_bits(class_coordinates(r)));
      if (in_range(x, n + 1)) composite_zero = composite_zero && is_coboundary(beta_cochain(r));
    }
    std::vector<Gf2Vector> beta;
    bool torsion_ok = true;
    for (const auto& e : h2.generators) {
      auto bits = two_torsion_bits(coords_or_empty(beta_cochain(e)), next_orders);
      torsion_ok = torsion_ok && bits.has_value();
      beta.push_back(bits.value_or(Gf2Vector{}));
    }
    std::size_t im_rho = gf2_rank(h2.generators.size(), rho);
    std::size_t ker_beta = h2.generators.size() - gf2_rank(next_orders.size(), beta);
    out["Z2-sequence at " + tag + "(Z2)"] = composite_zero && torsion_ok && im_rho == ker_beta;

    // ker(rho2) = 2 H^n(Z): rho2 embeds H/2H
    out["Z2-sequence at " + tag + "(Z) after x2"] =
        im_rho == hz.descriptor.free_rank + even_orders(hz.orders);
  }
  // ker(x2) = im(beta) at H^n(Z), beta from H^{n-1}(Z2)
  {
    std::vector<Gf2Vector> beta;
    bool torsion_ok = true;
    if (n >= 1) {
      for (const auto& e : cohomology_group(x, n - 1, Ring::Z2).generators) {
        auto bits = two_torsion_bits(class_coordinates(beta_cochain(e)), hz.orders);
        torsion_ok = torsion_ok && bits.has_value();
        beta.push_back(bits.value_or(Gf2Vector{}));
      }
    }
    out["Z2-sequence at " + tag + "(Z) after beta"] =
        torsion_ok && gf2_rank(hz.orders.size(), beta) == even_orders(hz.orders);
  }
  // torsion of H^n(Z) = im(beta~) from H^{n-1}(Q/Z)
  {
    std::vector<std::vector<Rational>> images;
    if (n >= 1) {
      const auto& qz = cohomology_group(x, n - 1, Ring::QZ);
      for (std::size_t i = 0; i < qz.generators.size(); ++i) {
        std::vector<Rational> t(qz.generators.size(), Rational(0));
        t[i] = qz.orders[i] == 0 ? Rational(1, 2) : Rational(1);
        images.push_back(class_coordinates(beta_exp_cochain(class_from_coordinates(x, n - 1, Ring::QZ, t))));
      }
    }
    Integer torsion = 1;
    for (const auto& o : hz.orders)
      if (o != 0) torsion *= o;
    out["QZ-sequence at " + tag + "(Z)"] = generated_order(images, hz.orders) == torsion;
  }
  // ker(Q -> Q/Z) = im(Z -> Q) at H^n(Q)
  {
    const auto& hq = cohomology_group(x, n, Ring::Q);
    bool ok = hq.generators.size() == hz.descriptor.free_rank;
    for (std::size_t i = 0; ok && i < hz.descriptor.free_rank; ++i) {
      std::vector<Rational> unit(hq.generators.size(), Rational(0));
      unit[i] = 1;
      ok = class_coordinates(change_ring(hz.generators[i], Ring::Q)) == unit &&
           is_coboundary(change_ring(hq.generators[i], Ring::QZ)) &&
           !is_coboundary(change_ring(hq.generators[i].scaled(Rational(1, 2)), Ring::QZ));
    }
    out["QZ-sequence at " + tag + "(Q)"] = ok;
  }
  // ker(beta~) = im(Q -> Q/Z) at H^n(Q/Z): beta~ kills the divisible part and
  // is injective on the torsion part
  {
    const auto& qz = cohomology_group(x, n, Ring::QZ);
    bool ok = true;
    std::vector<std::vector<Rational>> images;
    Integer torsion = 1;
    for (std::size_t i = 0; i < qz.generators.size(); ++i) {
      std::vector<Rational> t(qz.generators.size(), Rational(0));
      if (qz.orders[i] == 0) {
        t[i] = Rational(1, 3);
        if (in_range(x, n + 1))
          ok = ok && is_coboundary(beta_exp_cochain(class_from_coordinates(x, n, Ring::QZ, t)));
        continue;
      }
      t[i] = 1;
      torsion *= qz.orders[i];
      images.push_back(coords_or_empty(beta_exp_cochain(class_from_coordinates(x, n, Ring::QZ, t))));
    }
    if (!images.empty()) ok = ok && in_range(x, n + 1) && generated_order(images, next_orders) == torsion;
    out["QZ-sequence at " + tag + "(Q/Z)"] = ok;
  }
  return out;
}

}  // namespace

json sequence_exactness(const ComplexPtr& x, int n) {
  try {
    return sequence_positions(x, n);
  } catch (const InputError& e) {
    // a map that does not even produce cocycles cannot be exact anywhere
    return json{{"evaluation", false}, {"error", e.what()}};
  }
}

namespace {

// Fraction-free elimination; independent of the Smith code.
struct Bareiss {
  std::size_t rank = 0;
  Integer det = 0;  // only for square input
};

Bareiss bareiss(std::vector<std::vector<Integer>> a) {
  Bareiss out;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) a[i][k] = (a[r][c] * a[i][k] - a[i][c] * a[r][k]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  out.rank = r;
  if (rows == cols) out.det = r == rows ? Integer(sign * prev) : Integer(0);
  return out;
}

}  // namespace

json smith_check(const SparseIntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  SparseIntMatrix u = s.u(), v = s.v();
  bool identity = u.multiply(m).multiply(v) == s.d();
  Integer du = bareiss(u.to_dense()).det, dv = bareiss(v.to_dense()).det;
  bool unimodular = (du == 1 || du == -1) && (dv == 1 || dv == -1);
  bool chain = true;
  const auto& d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    chain = chain && d[i] > 0;
    if (i + 1 < d.size()) chain = chain && d[i + 1] % d[i] == 0;
  }
  bool rank_ok = bareiss(m.to_dense()).rank == s.rank();
  return json{{"UMV=D", identity}, {"unimodular", unimodular}, {"divisibility", chain}, {"rank", rank_ok}};
}

std::optional<json> run_report(const std::string& op, const json& params) {
  auto str = [&](const char* key) { return params.at(key).get<std::string>(); };
  auto num = [&](const char* key) { return params.at(key).get<int>(); };
  if (op == "les") return sequence_exactness(resolve_space(str("space")), num("n"));
  if (op == "snf") {
    std::size_t rows = params.at("rows").get<std::size_t>(), cols = params.at("cols").get<std::size_t>();
    std::vector<std::vector<Integer>> dense;
    for (const auto& row : params.at("entries")) {
      std::vector<Integer> r;
      for (const auto& e : row) r.emplace_back(e.get<std::string>());
      dense.push_back(r);
    }
    if (dense.size() != rows) throw InputError("snf: row count mismatch");
    return smith_check(SparseIntMatrix::from_dense(dense, cols));
  }
  if (op == "coh") {
    auto x = resolve_space(str("space"));
    int n = num("n");
    if (!in_range(x, n)) return json("0");
    return json(cohomology_descriptor(x, n, parse_ring(str("ring"))).to_string());
  }
  if (op == "exactness")
    return exactness_check(resolve_space(str("space")), num("m"), params.at("seed").get<std::uint64_t>(), num("samples"))
        .to_json();
  if (op == "kunneth") return kunneth_check(resolve_space(str("x")), resolve_space(str("y")), num("m")).to_json();
  if (op == "bz2") return bz2_kunneth_check(resolve_space(str("space")), num("n"), num("N")).to_json();
  return std::nullopt;
}

}  // namespace dcoh::verify
