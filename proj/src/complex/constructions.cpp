#include "dcoh/complex/constructions.hpp"

#include <cctype>
#include <functional>

#include "dcoh/errors.hpp"

namespace dcoh {

namespace {

// All staircase simplices over sigma x tau: monotone lattice paths from
// (0,0) to (p,q). With allow_diagonal false only the maximal ones.
void staircase(const Simplex& sigma, const Simplex& tau, std::size_t ny, bool allow_diagonal, std::size_t max_vertices,
               std::vector<Simplex>& out) {
  const std::size_t p = sigma.size() - 1, q = tau.size() - 1;
  Simplex path;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
    path.push_back(static_cast<Vertex>(sigma[i] * ny + tau[j]));
    if (path.size() <= max_vertices) {
      if (i == p && j == q) {
        out.push_back(path);
      } else {
        if (i < p) walk(i + 1, j);
        if (j < q) walk(i, j + 1);
        if (allow_diagonal && i < p && j < q) walk(i + 1, j + 1);
      }
    }
    path.pop_back();
  };
  walk(0, 0);
}

}  // namespace

ComplexPtr product(const ComplexPtr& x, const ComplexPtr& y, std::optional<int> max_dim) {
  const std::size_t ny = y->vertex_count();
  std::vector<Simplex> facets;
  std::string name = x->name() + "*" + y->name();
  if (!max_dim) {
    for (const auto& s : x->facets())
      for (const auto& t : y->facets()) staircase(s, t, ny, false, s.size() + t.size(), facets);
  } else {
    name += "[" + std::to_string(*max_dim) + "]";
    std::size_t cap = static_cast<std::size_t>(std::max(*max_dim, 0)) + 1;
    for (int dx = 0; dx <= x->dimension(); ++dx)
      for (int dy = 0; dy <= y->dimension(); ++dy) {
        if (static_cast<std::size_t>(std::max(dx, dy)) + 1 > cap) continue;
        for (const auto& s : x->simplices(dx))
          for (const auto& t : y->simplices(dy)) staircase(s, t, ny, true, cap, facets);
      }
  }
  return SimplicialComplex::make(name, x->vertex_count() * ny, std::move(facets));
}

std::pair<SimplicialMap, SimplicialMap> product_projections(const ComplexPtr& xy, const ComplexPtr& x,
                                                            const ComplexPtr& y) {
  const std::size_t ny = y->vertex_count();
  if (xy->vertex_count() != x->vertex_count() * ny) throw ValidationError("not a product of the given factors");
  std::vector<Vertex> px(xy->vertex_count()), py(xy->vertex_count());
  for (std::size_t v = 0; v < xy->vertex_count(); ++v) {
    px[v] = static_cast<Vertex>(v / ny);
    py[v] = static_cast<Vertex>(v % ny);
  }
  return {SimplicialMap(xy, x, std::move(px)), SimplicialMap(xy, y, std::move(py))};
}

ComplexPtr suspension(const ComplexPtr& x) {
  const Vertex a = static_cast<Vertex>(x->vertex_count()), b = a + 1;
  std::vector<Simplex> facets;
  for (const auto& f : x->facets()) {
    Simplex fa = f, fb = f;
    fa.push_back(a);
    fb.push_back(b);
    facets.push_back(std::move(fa));
    facets.push_back(std::move(fb));
  }
  return SimplicialComplex::make("susp(" + x->name() + ")", x->vertex_count() + 2, std::move(facets));
}

Cochain suspend_cochain(const ComplexPtr& sx, const Cochain& u) {
  const auto& x = u.complex();
  if (sx->vertex_count() != x->vertex_count() + 2) throw ValidationError("not the suspension of the cochain's complex");
  const Vertex a = static_cast<Vertex>(x->vertex_count());
  Cochain out(sx, u.degree() + 1, u.ring());
  const auto& simplices = x->simplices(u.degree());
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    if (u[i] == 0) continue;
    Simplex s = simplices[i];
    s.push_back(a);
    auto idx = sx->index_of(s);
    if (!idx) throw ValidationError("not the suspension of the cochain's complex");
    out.set(*idx, u[i]);
  }
  return out;
}

namespace {

class SpaceParser {
 public:
  explicit SpaceParser(const std::string& text) : text_(text) {}

  ComplexPtr parse() {
    ComplexPtr out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  ComplexPtr expression() {
    ComplexPtr left = term();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == 'x')) {
        ++pos_;
        left = product(left, term());
      } else {
        return left;
      }
    }
  }

  ComplexPtr term() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      ComplexPtr inner = expression();
      expect(')');
      return inner;
    }
    std::string word;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      // a lone 'x' between terms is the product sign
      if (text_[pos_] == 'x' && word.empty()) break;
      word += text_[pos_++];
    }
    if (word.empty()) fail("expected a space name");
    if (word == "susp") {
      expect('(');
      ComplexPtr inner = expression();
      expect(')');
      return suspension(inner);
    }
    // indexed spellings: sphere(2), rp(5)
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      std::size_t close = text_.find(')', pos_);
      if (close == std::string::npos) fail("missing ')'");
      word += text_.substr(pos_, close - pos_ + 1);
      pos_ = close + 1;
    }
    return builtin(word);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw UnknownResourceError("cannot resolve space '" + text_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ComplexPtr resolve_space(const std::string& expression) { return SpaceParser(expression).parse(); }

}  // namespace dcoh
