#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dcoh/linalg/integer.hpp"

namespace dcoh {

/// Z^free_rank + Z/d_1 + ... + Z/d_k + (Q/Z)^divisible_rank, d_1 | d_2 | ..., d_i >= 2.
struct GroupDescriptor {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;
  std::size_t divisible_rank = 0;

  bool is_zero() const { return free_rank == 0 && invariant_factors.empty() && divisible_rank == 0; }
  /// e.g. "Z^2 + Z/2 + Z/6 + (Q/Z)" or "0"
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Canonical descriptor from an arbitrary list of cyclic torsion orders (entries 0 and 1 ignored).
GroupDescriptor make_group(std::size_t free_rank, const std::vector<Integer>& torsion_orders,
                           std::size_t divisible_rank = 0);

GroupDescriptor direct_sum(const GroupDescriptor& a, const GroupDescriptor& b);
GroupDescriptor tensor(const GroupDescriptor& a, const GroupDescriptor& b);
GroupDescriptor tor(const GroupDescriptor& a, const GroupDescriptor& b);
/// Elements of order dividing 2.
GroupDescriptor two_torsion(const GroupDescriptor& a);
/// Torsion plus divisible part (drops the free summands).
GroupDescriptor torsion_part(const GroupDescriptor& a);

GroupDescriptor cyclic(const Integer& order);
GroupDescriptor free_group(std::size_t rank);
GroupDescriptor divisible_group(std::size_t rank);

}  // namespace dcoh
