#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dcoh/linalg/sparse_int_matrix.hpp"

namespace dcoh {

using Vertex = std::uint32_t;
/// Strictly increasing vertex tuple.
using Simplex = std::vector<Vertex>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/// Finite ordered simplicial complex. Immutable after construction; the
/// simplices of each dimension are sorted lexicographically and indexed.
class SimplicialComplex {
 public:
  /// Validates every facet (nonempty, strictly increasing, in range) and
  /// builds the face closure. Throws ValidationError.
  SimplicialComplex(std::string name, std::size_t vertex_count, std::vector<Simplex> facets);

  static ComplexPtr make(std::string name, std::size_t vertex_count, std::vector<Simplex> facets);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertex_count_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(tables_.size()) - 1; }
  /// Maximal simplices, sorted by dimension then lexicographically.
  const std::vector<Simplex>& facets() const { return facets_; }

  /// Number of n-simplices; 0 outside 0..dimension().
  std::size_t count(int n) const;
  const std::vector<Simplex>& simplices(int n) const;
  std::optional<std::uint32_t> index_of(const Simplex& s) const;
  long euler_characteristic() const;
  /// Content hash over (vertex_count, facets); independent of the name.
  std::uint64_t content_hash() const { return hash_; }
  /// Hex string of content_hash.
  std::string hash_hex() const;

  /// delta^n: C^n -> C^{n+1} with signs (-1)^i for the face deleting position i.
  /// Defined for every n >= -1 (empty matrices outside the range); cached.
  const SparseIntMatrix& coboundary(int n) const;

 private:
  std::string name_;
  std::size_t vertex_count_ = 0;
  std::vector<Simplex> facets_;
  std::vector<std::vector<Simplex>> tables_;
  std::vector<std::unordered_map<Simplex, std::uint32_t, SimplexHash>> index_;
  std::uint64_t hash_ = 0;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<int, std::unique_ptr<SparseIntMatrix>> coboundary_cache_;
};

/// Faces obtained by deleting one vertex, in deletion-position order.
std::vector<Simplex> boundary_faces(const Simplex& s);
std::string simplex_to_string(const Simplex& s);

}  // namespace dcoh
