#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dcoh/cohomology/cohomology.hpp"
#include "dcoh/complex/simplicial_map.hpp"

namespace dcoh {

/// Unconstrained triple (c, h, w) of degrees (m, m-1, m).
struct Triple {
  Cochain c;
  Cochain h;
  Cochain omega;
};

/// D(c, h, w) = (delta c, w - c - delta h, delta w). Throws DegreeError when
/// the degrees do not line up.
Triple differential(const Triple& t);

/// A differential cocycle of degree m >= 0: c over Z, h over Q of degree
/// m-1, w over Q, with delta h = w - c and delta w = 0 exactly.
class DiffCocycle {
 public:
  /// Validates; Z cochains are accepted for h and w. Throws ValidationError,
  /// RingMismatch or DegreeError.
  DiffCocycle(Cochain c, Cochain h, Cochain omega);
  static DiffCocycle zero(const ComplexPtr& x, int m);

  const ComplexPtr& complex() const { return c_.complex(); }
  int degree() const { return c_.degree(); }
  const Cochain& c() const { return c_; }
  const Cochain& h() const { return h_; }
  const Cochain& omega() const { return omega_; }
  Triple triple() const { return {c_, h_, omega_}; }

  /// omega == 0 (a class is flat iff its representatives are).
  bool is_flat() const { return omega_.is_zero(); }

  friend DiffCocycle operator+(const DiffCocycle& a, const DiffCocycle& b);
  friend DiffCocycle operator-(const DiffCocycle& a, const DiffCocycle& b);
  DiffCocycle operator-() const;
  DiffCocycle times(const Integer& k) const;

 private:
  struct Unchecked {};
  DiffCocycle(Cochain c, Cochain h, Cochain omega, Unchecked);
  Cochain c_;
  Cochain h_;
  Cochain omega_;
};

/// Class of c in H^m(X; Z).
CohomologyClass integration(const DiffCocycle& x);
inline CohomologyClass I(const DiffCocycle& x) { return integration(x); }
/// Curvature, at cochain level.
const Cochain& curvature(const DiffCocycle& x);
inline const Cochain& R(const DiffCocycle& x) { return curvature(x); }

/// j(u) = (-delta h, h, 0) with h the [0,1)-valued lift of the Q/Z cocycle u,
/// so I(j(u)) = -beta~(u). This is the only place the sign is fixed.
DiffCocycle flat_inclusion(const Cochain& u);
inline DiffCocycle j(const Cochain& u) { return flat_inclusion(u); }
inline DiffCocycle j(const CohomologyClass& u) { return flat_inclusion(u.representative()); }
/// a(eta) = (0, eta, delta eta) for a rational (or integral) cochain eta.
DiffCocycle form_inclusion(const Cochain& eta);
inline DiffCocycle a(const Cochain& eta) { return form_inclusion(eta); }

/// For a flat x = (c, h, 0): h mod 1, a Q/Z cocycle of degree m-1 with
/// x equal to j(h mod 1). Throws ValidationError when x is not flat.
Cochain flat_cochain(const DiffCocycle& x);
/// Coordinates of flat_cochain(x) in the generators of H^{m-1}(X; Q/Z).
std::vector<Rational> holonomy(const DiffCocycle& x);

/// x is zero in the differential cohomology group: w = 0 and the flat class
/// h mod 1 vanishes in H^{m-1}(X; Q/Z).
bool is_trivial(const DiffCocycle& x);
/// Same decision by explicit primitives: w = 0, solve c = delta b over Z,
/// then test h + b in (integral cocycles) + delta C^{m-2}(Q).
bool is_trivial_stepwise(const DiffCocycle& x);
bool equal_classes(const DiffCocycle& x, const DiffCocycle& y);

/// Deligne-Beilinson product
///   (c1 c2, (-1)^p c1 h2 + h1 w2, w1 w2).
DiffCocycle db_cup(const DiffCocycle& x, const DiffCocycle& y);
/// Left-nested m-fold product (m >= 1).
DiffCocycle dd_power(const DiffCocycle& x, int m);
/// j Gamma_2 Sq^{k-1} rho_2 I for odd k >= 1. Throws InputError
/// "even refinement does not exist" for even k.
DiffCocycle refined_sq(int k, const DiffCocycle& x);

DiffCocycle pullback(const SimplicialMap& f, const DiffCocycle& x);

/// (c, 0, c) for an integral cocycle c.
DiffCocycle from_integral_cocycle(const Cochain& c);

/// {"complex": ref, "degree": m, "c": cochain, "h": cochain, "omega": cochain};
/// each cochain is an object {"degree", "ring", "values"} (the complex is the
/// top-level one) or a bare values array.
DiffCocycle diffcocycle_from_json(const nlohmann::json& j, const std::string& where = "");
DiffCocycle parse_diffcocycle(const std::string& document);
nlohmann::json diffcocycle_to_json(const DiffCocycle& x);

}  // namespace dcoh
