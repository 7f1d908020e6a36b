#pragma once

#include <random>

#include "dcoh/diffcoh/diffcoh.hpp"

namespace dcoh {

/// Seeded case generation. Every draw is rng() % bound on a std::mt19937_64,
/// so a seed gives the same cases on every platform.
///   integers:  uniform in [-2, 2]
///   rationals: numerator in [-4, 4], denominator in {1, 2, 3, 4, 6}
///   Z2:        uniform bit
///   Q/Z:       a rational reduced mod 1
class CaseGenerator {
 public:
  explicit CaseGenerator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }
  Integer small_integer() { return Integer(static_cast<long>(below(5)) - 2); }
  Rational small_rational();

  Cochain cochain(const ComplexPtr& x, int n, Ring ring);
  /// Random combination of the generators of H^n(X; ring) plus a random coboundary.
  Cochain cocycle(const ComplexPtr& x, int n, Ring ring);
  /// Random class representative: (c, k + r, c + delta k) with c a random
  /// integral cocycle, k a random rational cochain and r a random rational cocycle.
  DiffCocycle diffcocycle(const ComplexPtr& x, int m);
  /// j(u) for a random Q/Z cocycle u, plus a random D-exact term.
  DiffCocycle flat(const ComplexPtr& x, int m);
  /// D(b, k, 0) for random integral b and rational k.
  DiffCocycle exact(const ComplexPtr& x, int m);

 private:
  std::mt19937_64 rng_;
};

}  // namespace dcoh
