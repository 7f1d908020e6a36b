#include "dcoh/steenrod/steenrod.hpp"

#include "dcoh/cohomology/coefficients.hpp"
#include "dcoh/errors.hpp"
#include "dcoh/fault.hpp"

namespace dcoh {

namespace {

void require_same_complex(const Cochain& u, const Cochain& v) {
  if (u.complex() != v.complex() && !same_complex(*u.complex(), *v.complex()))
    throw ValidationError("cochains live on different complexes");
}

Simplex face(const Simplex& s, std::size_t from, std::size_t to) {
  return Simplex(s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(to) + 1);
}

}  // namespace

Ring product_ring(Ring a, Ring b) {
  if (a == b && a != Ring::QZ) return a;
  if (a > b) std::swap(a, b);
  // enum order: Z, Z2, Q, QZ
  if (a == Ring::Z) return b;
  throw RingMismatch("no product of " + ring_name(a) + " and " + ring_name(b) + " cochains");
}

Cochain cup(const Cochain& u, const Cochain& v) {
  require_same_complex(u, v);
  const Ring ring = product_ring(u.ring(), v.ring());
  const int p = u.degree(), q = v.degree(), n = p + q;
  const auto& x = *u.complex();
  if (n > x.dimension()) return Cochain(u.complex(), n, ring);
  std::vector<Rational> values(x.count(n), Rational(0));
  const auto& simplices = x.simplices(n);
  for (std::size_t k = 0; k < simplices.size(); ++k) {
    const Simplex& s = simplices[k];
    Rational a = u.value_on(face(s, 0, p));
    if (a == 0) continue;
    values[k] = a * v.value_on(face(s, p, n));
  }
  Cochain out(u.complex(), n, ring, std::move(values));
  apply_fault("cup", out);
  return out;
}

Cochain cup_i(const Cochain& u, const Cochain& v, int i) {
  require_same_complex(u, v);
  if (u.ring() != Ring::Z2 || v.ring() != Ring::Z2) throw RingMismatch("cup_i expects Z2 cochains");
  if (i < 0) throw InputError("cup_i level must be nonnegative");
  const int p = u.degree(), q = v.degree(), n = p + q - i;
  const auto& x = *u.complex();
  if (i > p || i > q || n > x.dimension()) return Cochain(u.complex(), n, Ring::Z2);
  std::vector<Rational> values(x.count(n), Rational(0));
  const auto& simplices = x.simplices(n);
  const int m = n - i;  // |U|
  std::vector<int> chosen(m);
  for (std::size_t k = 0; k < simplices.size(); ++k) {
    const Simplex& s = simplices[k];
    bool parity = false;
    // enumerate increasing sequences chosen[0..m) in {0..n}
    for (int j = 0; j < m; ++j) chosen[j] = j;
    for (;;) {
      Simplex left, right;  // s minus U0, s minus U1
      std::vector<char> in0(n + 1, 0), in1(n + 1, 0);
      int size0 = 0;
      for (int j = 0; j < m; ++j) {
        // positions count from 1
        if ((chosen[j] - (j + 1)) % 2 == 0) {
          in0[chosen[j]] = 1;
          ++size0;
        } else {
          in1[chosen[j]] = 1;
        }
      }
      if (size0 == q - i) {
        for (int t = 0; t <= n; ++t) {
          if (!in0[t]) left.push_back(s[t]);
          if (!in1[t]) right.push_back(s[t]);
        }
        if (u.value_on(left) != 0 && v.value_on(right) != 0) parity = !parity;
      }
      int j = m - 1;
      while (j >= 0 && chosen[j] == n - (m - 1 - j)) --j;
      if (j < 0) break;
      ++chosen[j];
      for (int t = j + 1; t < m; ++t) chosen[t] = chosen[t - 1] + 1;
    }
    if (parity) values[k] = 1;
  }
  Cochain out(u.complex(), n, Ring::Z2, std::move(values));
  apply_fault("cup_i", out);
  return out;
}

Cochain cup1_rational(const Cochain& u, const Cochain& v) {
  require_same_complex(u, v);
  const Ring ring = product_ring(u.ring(), v.ring());
  const int p = u.degree(), q = v.degree(), n = p + q - 1;
  const auto& x = *u.complex();
  if (p < 1 || q < 1 || n > x.dimension()) return Cochain(u.complex(), n, ring);
  std::vector<Rational> values(x.count(n), Rational(0));
  const auto& simplices = x.simplices(n);
  for (std::size_t idx = 0; idx < simplices.size(); ++idx) {
    const Simplex& s = simplices[idx];
    Rational total = 0;
    for (int k = 0; k < p; ++k) {
      Rational b = v.value_on(face(s, k, k + q));
      if (b == 0) continue;
      Simplex left = face(s, 0, k);
      for (int t = k + q; t <= n; ++t) left.push_back(s[t]);
      Rational a = u.value_on(left);
      if (a == 0) continue;
      if (((p - k) * (q + 1)) % 2 == 0)
        total += a * b;
      else
        total -= a * b;
    }
    values[idx] = total;
  }
  return Cochain(u.complex(), n, ring, std::move(values));
}

CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) {
  return CohomologyClass(cup(a.representative(), b.representative()));
}

CohomologyClass power(const CohomologyClass& a, int m) {
  if (m < 1) throw InputError("power exponent must be positive");
  CohomologyClass out = a;
  for (int k = 1; k < m; ++k) out = cup(out, a);
  return out;
}

CohomologyClass sq(int k, const CohomologyClass& x) {
  if (x.ring() != Ring::Z2) throw RingMismatch("Steenrod squares act on Z2 classes, got " + ring_name(x.ring()));
  if (k < 0) throw InputError("Steenrod square index must be nonnegative");
  const int n = x.degree();
  if (k > n) return CohomologyClass(Cochain(x.complex(), n + k, Ring::Z2));
  return CohomologyClass(cup_i(x.representative(), x.representative(), n - k));
}

CohomologyClass sq_integral(int k, const CohomologyClass& x) {
  if (k % 2 == 0) throw InputError("even Steenrod squares do not lift");
  if (x.ring() != Ring::Z) throw RingMismatch("integral squares act on Z classes, got " + ring_name(x.ring()));
  return bockstein_beta(sq(k - 1, rho2(x)));
}

}  // namespace dcoh
