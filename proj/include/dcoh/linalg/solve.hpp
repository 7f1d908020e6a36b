#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dcoh/linalg/group_descriptor.hpp"
#include "dcoh/linalg/integer.hpp"
#include "dcoh/linalg/smith.hpp"
#include "dcoh/linalg/sparse_int_matrix.hpp"

namespace dcoh {

struct IntegerSolutionSet {
  std::vector<Integer> particular;
  std::vector<std::vector<Integer>> kernel_basis;
};

/// Some integer x with M x = b, or nullopt. Throws DimensionMismatch.
std::optional<std::vector<Integer>> solve_integer(const SparseIntMatrix& m, const std::vector<Integer>& b);
std::optional<std::vector<Integer>> solve_integer(const SmithForm& snf, const std::vector<Integer>& b);
/// Full solution set: particular + Z-span(kernel_basis).
std::optional<IntegerSolutionSet> solve_integer_set(const SparseIntMatrix& m, const std::vector<Integer>& b);

std::optional<std::vector<Rational>> solve_rational(const SparseIntMatrix& m, const std::vector<Rational>& b);
std::optional<std::vector<Rational>> solve_rational(const SmithForm& snf, const std::vector<Rational>& b);

/// Basis of the integer kernel (saturated: extends to a basis of Z^cols).
std::vector<std::vector<Integer>> integer_kernel_basis(const SmithForm& snf);

std::size_t rank(const SparseIntMatrix& m);

/// span(Z) / span(B). Throws NotSublatticeError when span(B) is not inside span(Z).
GroupDescriptor quotient_structure(const SparseIntMatrix& z, const SparseIntMatrix& b);

/// Decides v in L Z^a + W Q^b for fixed L, W. With U W V = D, the rows of U
/// past rank(W) span the integer left null lattice P of W, and the question
/// becomes P v in span_Z(P L).
class LatticeMembership {
 public:
  LatticeMembership(const SparseIntMatrix& l, const SparseIntMatrix& w);
  /// Reuses a Smith form of W.
  LatticeMembership(const SparseIntMatrix& l, std::shared_ptr<const SmithForm> w_snf);
  bool contains(const std::vector<Rational>& v) const;
  std::size_t dimension() const { return dim_; }

 private:
  void prepare(const SparseIntMatrix& l);
  std::size_t dim_ = 0;
  bool l_is_identity_ = false;
  std::shared_ptr<const SmithForm> w_snf_;
  std::optional<SmithForm> pl_snf_;
};

bool in_lattice_image(const std::vector<Rational>& v, const SparseIntMatrix& l, const SparseIntMatrix& w);
/// W given by rational columns.
bool in_lattice_image(const std::vector<Rational>& v, const SparseIntMatrix& l,
                      const std::vector<std::vector<Rational>>& w_columns);

}  // namespace dcoh
