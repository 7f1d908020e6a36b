#include "dcoh/complex/simplicial_map.hpp"

#include <algorithm>

#include "dcoh/errors.hpp"

namespace dcoh {

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target, std::vector<Vertex> vertex_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(vertex_images)) {
  if (images_.size() != source_->vertex_count())
    throw ValidationError("simplicial map needs " + std::to_string(source_->vertex_count()) + " vertex images");
  for (Vertex v : images_)
    if (v >= target_->vertex_count()) throw ValidationError("vertex image " + std::to_string(v) + " out of range");
  for (const auto& f : source_->facets()) {
    Simplex img;
    for (Vertex v : f) img.push_back(images_[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (!target_->index_of(img))
      throw ValidationError("facet " + simplex_to_string(f) + " maps to " + simplex_to_string(img) +
                            ", which is not a simplex of " + target_->name());
  }
}

SimplicialMap::Image SimplicialMap::image(const Simplex& s) const {
  Image out;
  out.simplex.reserve(s.size());
  for (Vertex v : s) out.simplex.push_back(images_[v]);
  // insertion sort, counting transpositions; a repeat means degenerate
  for (std::size_t i = 1; i < out.simplex.size(); ++i) {
    for (std::size_t k = i; k > 0 && out.simplex[k - 1] >= out.simplex[k]; --k) {
      if (out.simplex[k - 1] == out.simplex[k]) {
        out.degenerate = true;
        return out;
      }
      std::swap(out.simplex[k - 1], out.simplex[k]);
      out.sign = -out.sign;
    }
  }
  return out;
}

SimplicialMap SimplicialMap::identity(const ComplexPtr& x) {
  std::vector<Vertex> images(x->vertex_count());
  for (Vertex v = 0; v < images.size(); ++v) images[v] = v;
  return SimplicialMap(x, x, std::move(images));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!same_complex(*f.target(), *g.source())) throw ValidationError("maps are not composable");
  std::vector<Vertex> images(f.images_.size());
  for (std::size_t v = 0; v < images.size(); ++v) images[v] = g.images_[f.images_[v]];
  return SimplicialMap(f.source(), g.target(), std::move(images));
}

Cochain pullback(const SimplicialMap& f, const Cochain& u) {
  if (!same_complex(*u.complex(), *f.target())) throw ValidationError("complex mismatch: cochain is not on the map's target");
  Cochain out(f.source(), u.degree(), u.ring());
  const auto& simplices = f.source()->simplices(u.degree());
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    auto img = f.image(simplices[i]);
    if (img.degenerate) continue;
    Rational v = u.value_on(img.simplex);
    if (v != 0) out.set(i, img.sign > 0 ? v : Rational(-v));
  }
  return out;
}

}  // namespace dcoh
