#pragma once

#include <optional>
#include <vector>

#include "dcoh/complex/cochain.hpp"
#include "dcoh/complex/simplicial_complex.hpp"

namespace dcoh {

class SimplicialMap {
 public:
  /// Throws ValidationError if some source simplex does not map onto a target simplex.
  SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<Vertex> vertex_images);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  const std::vector<Vertex>& vertex_images() const { return images_; }

  struct Image {
    Simplex simplex;   // sorted image
    int sign = 1;      // sign of the sorting permutation
    bool degenerate = false;
  };
  Image image(const Simplex& s) const;

  static SimplicialMap identity(const ComplexPtr& x);
  /// g after f.
  friend SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<Vertex> images_;
};

/// (f^* u)(s) = sign * u(f(s)) for nondegenerate images, else 0.
Cochain pullback(const SimplicialMap& f, const Cochain& u);

}  // namespace dcoh
