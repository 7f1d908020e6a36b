#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dcoh {

/// Sparse vector over Z/2: sorted indices of the nonzero coordinates.
using Gf2Vector = std::vector<std::uint32_t>;

Gf2Vector gf2_add(const Gf2Vector& a, const Gf2Vector& b);

/// Incremental echelon basis over Z/2. Each stored row carries a tag vector
/// recording which inserted items it combines, so reductions also return
/// the combination used.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t dim) : pivot_row_(dim, -1) {}

  struct Reduction {
    Gf2Vector residual;
    Gf2Vector tag;
  };

  /// Fully reduces v; the residual has no entries at pivot positions.
  Reduction reduce(Gf2Vector v, Gf2Vector tag = {}) const;
  /// Returns true (and stores the row) iff v is independent of the rows so far.
  /// When dependent, the reduction tag is returned through dependent_tag.
  bool insert(Gf2Vector v, Gf2Vector tag = {}, Gf2Vector* dependent_tag = nullptr);

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return pivot_row_.size(); }

 private:
  std::vector<int> pivot_row_;
  std::vector<Gf2Vector> rows_;
  std::vector<Gf2Vector> tags_;
};

/// Kernel basis of the Z/2 matrix with the given columns (each of length rows).
std::vector<Gf2Vector> gf2_kernel(std::size_t rows, const std::vector<Gf2Vector>& columns);
std::size_t gf2_rank(std::size_t rows, const std::vector<Gf2Vector>& columns);

}  // namespace dcoh
