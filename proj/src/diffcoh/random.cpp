#include "dcoh/diffcoh/random.hpp"

namespace dcoh {

Rational CaseGenerator::small_rational() {
  static const long kDen[] = {1, 2, 3, 4, 6};
  long num = static_cast<long>(below(9)) - 4;
  long den = kDen[below(5)];
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Cochain CaseGenerator::cochain(const ComplexPtr& x, int n, Ring ring) {
  Cochain u(x, n, ring);
  for (std::size_t i = 0; i < u.size(); ++i) {
    switch (ring) {
      case Ring::Z: u.set(i, Rational(small_integer())); break;
      case Ring::Z2: u.set(i, Rational(static_cast<long>(below(2)))); break;
      case Ring::Q:
      case Ring::QZ: u.set(i, small_rational()); break;
    }
  }
  return u;
}

Cochain CaseGenerator::cocycle(const ComplexPtr& x, int n, Ring ring) {
  Cochain u(x, n, ring);
  if (n > x->dimension()) return u;
  const auto& g = cohomology_group(x, n, ring);
  std::vector<Rational> t(g.generators.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (g.orders[i] != 0)
      t[i] = Rational(Integer(static_cast<long>(below(g.orders[i].get_ui()))));
    else if (ring == Ring::QZ || ring == Ring::Q)
      t[i] = small_rational();
    else
      t[i] = Rational(small_integer());
  }
  u = class_from_coordinates(x, n, ring, t);
  if (n >= 1) u += coboundary(cochain(x, n - 1, ring));
  return u;
}

DiffCocycle CaseGenerator::diffcocycle(const ComplexPtr& x, int m) {
  Cochain c = cocycle(x, m, Ring::Z);
  Cochain k = cochain(x, m - 1, Ring::Q);
  Cochain h = k;
  if (m >= 1) h += cocycle(x, m - 1, Ring::Q);
  Cochain w = change_ring(c, Ring::Q) + coboundary(k);
  return DiffCocycle(std::move(c), std::move(h), std::move(w));
}

DiffCocycle CaseGenerator::exact(const ComplexPtr& x, int m) {
  Cochain b = cochain(x, m - 1, Ring::Z);
  Cochain k = cochain(x, m - 2, Ring::Q);
  Triple t = differential({b, k, Cochain(x, m - 1, Ring::Q)});
  return DiffCocycle(t.c, t.h, t.omega);
}

DiffCocycle CaseGenerator::flat(const ComplexPtr& x, int m) {
  return j(cocycle(x, m - 1, Ring::QZ)) + exact(x, m);
}

}  // namespace dcoh
