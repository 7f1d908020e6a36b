#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

#include "dcoh/complex/cochain.hpp"
#include "dcoh/linalg/group_descriptor.hpp"
#include "dcoh/linalg/smith.hpp"

namespace dcoh {

/// H^n(X; ring) with explicit generating cocycles.
///  Z:   free generators, then torsion generators by increasing invariant factor
///  Z2:  a basis (all orders 2)
///  Q:   a basis
///  Q/Z: torsion generators by increasing order, then divisible generators
///       (integral cocycles read mod 1; coordinate t means t * generator)
struct CohomologyGroup {
  GroupDescriptor descriptor;
  std::vector<Cochain> generators;
  /// Order of each generator: 0 for free or divisible summands.
  std::vector<Integer> orders;
};

/// Descriptor only; consults the disk cache when one is configured.
GroupDescriptor cohomology_descriptor(const ComplexPtr& x, int n, Ring ring);
const CohomologyGroup& cohomology_group(const ComplexPtr& x, int n, Ring ring);

/// Coordinates of the class of cocycle u in the generators of cohomology_group:
/// torsion entries reduced into [0, order), divisible entries into [0, 1).
/// Throws ValidationError("not a cocycle").
std::vector<Rational> class_coordinates(const Cochain& u);
/// Cocycle representing the given coordinates.
Cochain class_from_coordinates(const ComplexPtr& x, int n, Ring ring, const std::vector<Rational>& coordinates);

/// u - v is a coboundary over the ring. Throws ValidationError("not a cocycle").
bool is_cohomologous(const Cochain& u, const Cochain& v);
bool is_coboundary(const Cochain& u);

/// Primitive b with delta b = u over Z or Q, if one exists.
std::optional<Cochain> coboundary_primitive(const Cochain& u);

/// SNF of delta^n over Z, memoized by (content hash, n).
std::shared_ptr<const SmithForm> coboundary_snf(const ComplexPtr& x, int n);
std::size_t coboundary_rank(const ComplexPtr& x, int n);

/// Integral cocycles spanning ker delta^n (saturated basis).
std::vector<Cochain> integral_cocycle_basis(const ComplexPtr& x, int n);

/// Disk persistence of computed descriptors; disabled until configured.
void set_disk_cache(std::optional<std::filesystem::path> directory);
std::optional<std::filesystem::path> disk_cache();
/// $DIFFCOH_CACHE, else $XDG_CACHE_HOME/dcoh, else $HOME/.cache/dcoh.
std::filesystem::path default_cache_directory();
void clear_memory_cache();

/// A cocycle together with its ambient complex, degree and ring.
class CohomologyClass {
 public:
  /// Throws ValidationError if the representative is not a cocycle.
  explicit CohomologyClass(Cochain representative);

  const Cochain& representative() const { return rep_; }
  const ComplexPtr& complex() const { return rep_.complex(); }
  int degree() const { return rep_.degree(); }
  Ring ring() const { return rep_.ring(); }
  std::vector<Rational> coordinates() const { return class_coordinates(rep_); }
  bool is_zero() const { return is_coboundary(rep_); }

  friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
    return CohomologyClass(a.rep_ + b.rep_);
  }
  friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
    return CohomologyClass(a.rep_ - b.rep_);
  }
  /// Class equality (decided through is_cohomologous).
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return is_cohomologous(a.rep_, b.rep_);
  }

 private:
  Cochain rep_;
};

}  // namespace dcoh
