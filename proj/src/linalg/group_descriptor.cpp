#include "dcoh/linalg/group_descriptor.hpp"

#include <algorithm>
#include <map>

namespace dcoh {

std::string GroupDescriptor::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const auto& d : invariant_factors) append("Z/" + d.get_str());
  if (divisible_rank == 1) append("Q/Z");
  if (divisible_rank > 1) append("(Q/Z)^" + std::to_string(divisible_rank));
  return out;
}

// Invariant factors via primary decomposition: for each prime, sort the
// prime-power exponents and recombine largest with largest.
GroupDescriptor make_group(std::size_t free_rank, const std::vector<Integer>& torsion_orders,
                           std::size_t divisible_rank) {
  std::map<Integer, std::vector<unsigned long>> primary;
  for (Integer n : torsion_orders) {
    n = abs_value(n);
    if (n <= 1) continue;
    for (Integer p = 2; p * p <= n; ++p) {
      unsigned long e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++e;
      }
      if (e > 0) primary[p].push_back(e);
    }
    if (n > 1) primary[n].push_back(1);
  }
  std::size_t count = 0;
  for (auto& [p, exps] : primary) {
    std::sort(exps.rbegin(), exps.rend());
    count = std::max(count, exps.size());
  }
  std::vector<Integer> factors(count, Integer(1));
  for (auto& [p, exps] : primary) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Integer pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), exps[i]);
      factors[count - 1 - i] *= pe;
    }
  }
  GroupDescriptor g;
  g.free_rank = free_rank;
  g.invariant_factors = std::move(factors);
  g.divisible_rank = divisible_rank;
  return g;
}

GroupDescriptor direct_sum(const GroupDescriptor& a, const GroupDescriptor& b) {
  std::vector<Integer> t = a.invariant_factors;
  t.insert(t.end(), b.invariant_factors.begin(), b.invariant_factors.end());
  return make_group(a.free_rank + b.free_rank, t, a.divisible_rank + b.divisible_rank);
}

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

GroupDescriptor tensor(const GroupDescriptor& a, const GroupDescriptor& b) {
  std::size_t free = a.free_rank * b.free_rank;
  std::size_t divisible = a.free_rank * b.divisible_rank + a.divisible_rank * b.free_rank;
  std::vector<Integer> t;
  for (std::size_t k = 0; k < b.free_rank; ++k) t.insert(t.end(), a.invariant_factors.begin(), a.invariant_factors.end());
  for (std::size_t k = 0; k < a.free_rank; ++k) t.insert(t.end(), b.invariant_factors.begin(), b.invariant_factors.end());
  for (const auto& x : a.invariant_factors)
    for (const auto& y : b.invariant_factors) t.push_back(gcd(x, y));
  // torsion (x) divisible and divisible (x) divisible vanish
  return make_group(free, t, divisible);
}

GroupDescriptor tor(const GroupDescriptor& a, const GroupDescriptor& b) {
  std::vector<Integer> t;
  for (const auto& x : a.invariant_factors)
    for (const auto& y : b.invariant_factors) t.push_back(gcd(x, y));
  // Tor(Z/n, Q/Z) = Z/n, Tor(Q/Z, Q/Z) = Q/Z
  for (std::size_t k = 0; k < b.divisible_rank; ++k)
    t.insert(t.end(), a.invariant_factors.begin(), a.invariant_factors.end());
  for (std::size_t k = 0; k < a.divisible_rank; ++k)
    t.insert(t.end(), b.invariant_factors.begin(), b.invariant_factors.end());
  return make_group(0, t, a.divisible_rank * b.divisible_rank);
}

GroupDescriptor two_torsion(const GroupDescriptor& a) {
  std::vector<Integer> t;
  for (const auto& d : a.invariant_factors)
    if (mpz_even_p(d.get_mpz_t())) t.emplace_back(2);
  for (std::size_t k = 0; k < a.divisible_rank; ++k) t.emplace_back(2);
  return make_group(0, t, 0);
}

GroupDescriptor torsion_part(const GroupDescriptor& a) {
  GroupDescriptor g = a;
  g.free_rank = 0;
  return g;
}

GroupDescriptor cyclic(const Integer& order) {
  if (order == 0) return free_group(1);
  return make_group(0, {order}, 0);
}

GroupDescriptor free_group(std::size_t rank) {
  GroupDescriptor g;
  g.free_rank = rank;
  return g;
}

GroupDescriptor divisible_group(std::size_t rank) {
  GroupDescriptor g;
  g.divisible_rank = rank;
  return g;
}

}  // namespace dcoh
