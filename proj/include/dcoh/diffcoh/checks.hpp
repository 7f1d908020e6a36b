#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "dcoh/diffcoh/diffcoh.hpp"
#include "dcoh/linalg/group_descriptor.hpp"

namespace dcoh {

struct DiffProfile {
  /// H^{m-1}(X; Q/Z), the kernel of R.
  GroupDescriptor flat_part;
  /// H^m(X; Z); I is onto.
  GroupDescriptor integral_image;
  /// rank over Q of delta^{m-1}: the forms eta with a(eta) not flat, modulo cocycles.
  std::size_t form_ambiguity_dim = 0;
};

DiffProfile diff_profile(const ComplexPtr& x, int m);
nlohmann::json profile_to_json(const DiffProfile& p);

/// One named comparison inside a check.
struct CheckItem {
  std::string id;
  bool pass = false;
  nlohmann::json expected;
  nlohmann::json actual;
};

struct CheckReport {
  std::string name;
  std::vector<CheckItem> items;
  /// Facts reported without affecting pass/fail.
  nlohmann::json notes = nlohmann::json::object();

  void add(std::string id, bool pass, nlohmann::json expected = nullptr, nlohmann::json actual = nullptr) {
    items.push_back({std::move(id), pass, std::move(expected), std::move(actual)});
  }
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Compares the flat part and the integral image of the degree-m differential
/// cohomology of X x Y with the prediction of the Kunneth sequence:
///   flat:     sum_j H^{m-1-j}(X;Q/Z) (x) H^j(Y) + Tor(H^{m-j}(X;Q/Z), H^j(Y))
///   integral: sum_i H^i(X) (x) H^{m-i}(Y) + Tor(H^i(X), H^{m+1-i}(Y))
CheckReport kunneth_check(const ComplexPtr& x, const ComplexPtr& y, int m);

/// Flat part of degree 2n of X x rp(N) against
///   flat part of degree 2n of X  +  sum_{j < 2n even} 2-torsion of H^j(X; Q/Z).
/// Needs N >= 2n + 2 (InputError otherwise).
CheckReport bz2_kunneth_check(const ComplexPtr& x, int n, int truncation);

/// ker R = im j, ker I = im a, I onto, and the refinement identities for
/// refined_sq and dd_power, on generators and `samples` random classes.
CheckReport exactness_check(const ComplexPtr& x, int m, std::uint64_t seed, int samples = 4);

/// d = x^2 - Sq^{2n+1}(x) for x of odd degree: (a) I(d) = 0; (b) d - a(eta)
/// is trivial modulo a(rational cocycles), eta = -1/2 w cup_1 w, so delta eta = w w.
/// Throws DegreeError for even degree.
CheckReport trapezoid_check(const DiffCocycle& x);

/// Orders of generators of H^n(X; Q/Z) tensored with Z/2, listed per degree.
nlohmann::json u1_tensor_z2(const ComplexPtr& x, int max_degree);

}  // namespace dcoh
