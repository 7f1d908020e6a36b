#pragma once

#include "dcoh/cohomology/cohomology.hpp"

namespace dcoh {

/// Result ring of a product: equal rings (not Q/Z), Z with Q gives Q,
/// Z with Q/Z gives Q/Z, Z with Z2 gives Z2. Throws RingMismatch otherwise.
Ring product_ring(Ring a, Ring b);

/// Alexander-Whitney cup product: (u v)(s) = u(front p-face) v(back q-face).
Cochain cup(const Cochain& u, const Cochain& v);

/// Mod 2 cup-i product (cup_0 = cup). For s = [0..n], n = p + q - i:
/// sum over U subset {0..n} with |U| = n - i, split by the parity of
/// position against value, of u(s minus U0) v(s minus U1).
Cochain cup_i(const Cochain& u, const Cochain& v, int i);

/// Signed cup-1 product over Q:
///   (u cup1 v)(0..n) = sum_{k<p} (-1)^{(p-k)(q+1)} u(0..k, k+q..n) v(k..k+q).
/// delta(u cup1 v) = du cup1 v + (-1)^p u cup1 dv + (-1)^{p+q+1} u v + (-1)^{pq+p+q} v u,
/// so delta(w cup1 w) = -2 w w for an odd-degree cocycle w.
Cochain cup1_rational(const Cochain& u, const Cochain& v);

CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b);
/// a^m (m >= 1).
CohomologyClass power(const CohomologyClass& a, int m);

/// Sq^k(x) = x cup_{n-k} x for x of degree n; 0 when k > n.
CohomologyClass sq(int k, const CohomologyClass& x);
/// Sq_Z^k = beta Sq^{k-1} rho2 for odd k. Throws InputError for even k.
CohomologyClass sq_integral(int k, const CohomologyClass& x);

}  // namespace dcoh
