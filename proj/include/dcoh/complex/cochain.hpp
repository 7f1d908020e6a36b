#pragma once

#include <string>
#include <vector>

#include "dcoh/complex/simplicial_complex.hpp"
#include "dcoh/linalg/integer.hpp"

namespace dcoh {

enum class Ring { Z, Z2, Q, QZ };

std::string ring_name(Ring r);
/// Accepts "Z", "Z2", "Q", "QZ". Throws InputError.
Ring parse_ring(const std::string& text);

/// Function on the n-simplices of a complex with coefficients in a ring.
/// All rings share one representation: Z and Z2 values are integers (Z2 in
/// {0,1}), Q values arbitrary fractions, Q/Z values fractions in [0,1).
class Cochain {
 public:
  Cochain() = default;
  Cochain(ComplexPtr complex, int degree, Ring ring);
  /// Throws ValidationError on wrong length or non-integral Z/Z2 values.
  Cochain(ComplexPtr complex, int degree, Ring ring, std::vector<Rational> values);

  const ComplexPtr& complex() const { return complex_; }
  int degree() const { return degree_; }
  Ring ring() const { return ring_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  void set(std::size_t i, const Rational& v);
  /// Value on a simplex given by vertices; 0 if the simplex is absent.
  Rational value_on(const Simplex& s) const;
  bool is_zero() const;
  /// Integer values (requires ring Z or Z2).
  std::vector<Integer> integer_values() const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  Cochain operator-() const;
  Cochain scaled(const Rational& k) const;

  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  void check_compatible(const Cochain& other) const;
  void normalize(Rational& v) const;

  ComplexPtr complex_;
  int degree_ = 0;
  Ring ring_ = Ring::Z;
  std::vector<Rational> values_;
};

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b);

Cochain coboundary(const Cochain& u);
bool is_cocycle(const Cochain& u);

/// Coefficient change along Z -> Q, Z -> Z2, Z -> Q/Z, Q -> Q/Z (and identity).
Cochain change_ring(const Cochain& u, Ring target);
/// Cochain over Z with the given values reduced to integers: Z2 values as 0/1.
Cochain integer_lift(const Cochain& u);
/// Q/Z cochain lifted to Q with values in [0,1).
Cochain rational_lift(const Cochain& u);

Cochain indicator(const ComplexPtr& complex, const Simplex& s, Ring ring, const Rational& value = 1);

/// Matrix of delta^n in the simplex bases, 0 <= n <= dim X. Over Z2 the entries
/// are 1; Q and Q/Z use the integer matrix. Throws DegreeError.
SparseIntMatrix coboundary_matrix(const SimplicialComplex& x, int n, Ring ring);

}  // namespace dcoh
