#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "dcoh/complex/constructions.hpp"
#include "dcoh/errors.hpp"

namespace dcoh {

namespace {

std::vector<Simplex> table(std::initializer_list<std::initializer_list<Vertex>> rows) {
  std::vector<Simplex> out;
  for (auto r : rows) out.emplace_back(r);
  return out;
}

ComplexPtr make_sphere(int n) {
  // boundary of the (n+1)-simplex
  std::vector<Simplex> facets;
  for (Vertex skip = 0; skip < static_cast<Vertex>(n + 2); ++skip) {
    Simplex s;
    for (Vertex v = 0; v < static_cast<Vertex>(n + 2); ++v)
      if (v != skip) s.push_back(v);
    facets.push_back(s);
  }
  return SimplicialComplex::make("sphere(" + std::to_string(n) + ")", n + 2, std::move(facets));
}

ComplexPtr make_torus() {
  std::vector<Simplex> facets;
  for (Vertex i = 0; i < 7; ++i) {
    for (auto tri : {Simplex{i, (i + 1) % 7, (i + 3) % 7}, Simplex{i, (i + 2) % 7, (i + 3) % 7}}) {
      std::sort(tri.begin(), tri.end());
      facets.push_back(tri);
    }
  }
  return SimplicialComplex::make("torus", 7, std::move(facets));
}

ComplexPtr make_klein() {
  return SimplicialComplex::make(
      "klein", 9,
      table({{0, 1, 4}, {0, 1, 6}, {0, 2, 6}, {0, 2, 8}, {0, 3, 4}, {0, 3, 8}, {1, 2, 5}, {1, 2, 7}, {1, 4, 5},
             {1, 6, 7}, {2, 5, 6}, {2, 7, 8}, {3, 4, 7}, {3, 5, 6}, {3, 5, 8}, {3, 6, 7}, {4, 5, 8}, {4, 7, 8}}));
}

ComplexPtr make_rp2() {
  // minimal 6-vertex triangulation (hemi-icosahedron)
  return SimplicialComplex::make("rp2", 6,
                                 table({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5},
                                        {1, 3, 4}, {2, 4, 5}, {1, 3, 5}}));
}

ComplexPtr make_rp3() {
  return SimplicialComplex::make(
      "rp3", 11,
      table({{0, 1, 4, 6},  {0, 1, 4, 7},  {0, 1, 6, 8},  {0, 1, 7, 9},  {0, 1, 8, 9},  {0, 2, 5, 7},
             {0, 2, 5, 10}, {0, 2, 7, 9},  {0, 2, 9, 10}, {0, 3, 5, 6},  {0, 3, 5, 10}, {0, 3, 6, 8},
             {0, 3, 8, 10}, {0, 4, 5, 6},  {0, 4, 5, 7},  {0, 8, 9, 10}, {1, 2, 4, 6},  {1, 2, 4, 10},
             {1, 2, 5, 8},  {1, 2, 5, 10}, {1, 2, 6, 8},  {1, 3, 5, 9},  {1, 3, 5, 10}, {1, 3, 7, 9},
             {1, 3, 7, 10}, {1, 4, 7, 10}, {1, 5, 8, 9},  {2, 3, 6, 7},  {2, 3, 6, 8},  {2, 3, 7, 8},
             {2, 4, 6, 9},  {2, 4, 9, 10}, {2, 5, 7, 8},  {2, 6, 7, 9},  {3, 5, 6, 9},  {3, 6, 7, 9},
             {3, 7, 8, 10}, {4, 5, 6, 9},  {4, 5, 7, 8},  {4, 5, 8, 9},  {4, 7, 8, 10}, {4, 8, 9, 10}}));
}

// Antipodal quotient of the barycentric subdivision of the boundary of the
// (n+1)-simplex. A vertex is a pair {S, complement of S} of nonempty proper
// subsets of {0..n+1}, represented by the member avoiding n+1; facets are the
// flags S_1 < ... < S_{n+1} given by permutations.
ComplexPtr make_rp(int n) {
  const int m = n + 2;
  const std::uint32_t full = (1u << m) - 1;
  const std::uint32_t top_bit = 1u << (m - 1);
  auto canonical = [&](std::uint32_t s) { return (s & top_bit) ? (full ^ s) : s; };
  // canonical masks are 1..2^{m-1}-1; label = mask - 1
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Simplex> facets;
  do {
    if (perm.front() > perm.back()) continue;  // a permutation and its reverse give the same facet
    Simplex f;
    std::uint32_t s = 0;
    for (int k = 0; k + 1 < m; ++k) {
      s |= 1u << perm[k];
      f.push_back(canonical(s) - 1);
    }
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return SimplicialComplex::make("rp(" + std::to_string(n) + ")", top_bit - 1, std::move(facets));
}

bool parse_indexed(const std::string& tag, const std::string& stem, int& n) {
  if (tag.rfind(stem, 0) != 0) return false;
  std::string rest = tag.substr(stem.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
  if (rest.empty() || rest.size() > 2) return false;
  for (char c : rest)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  n = std::stoi(rest);
  return true;
}

ComplexPtr build(const std::string& tag) {
  int n = 0;
  if (tag == "point") return SimplicialComplex::make("point", 1, {{0}});
  if (tag == "circle") return SimplicialComplex::make("circle", 3, {{0, 1}, {1, 2}, {0, 2}});
  if (tag == "torus") return make_torus();
  if (tag == "klein") return make_klein();
  if (tag == "rp2") return make_rp2();
  if (tag == "rp3") return make_rp3();
  if (parse_indexed(tag, "sphere", n)) {
    if (n > 12) throw UnknownResourceError("sphere dimension too large: " + tag);
    return make_sphere(n);
  }
  if (parse_indexed(tag, "rp", n)) {
    if (n == 2) return make_rp2();
    if (n == 3) return make_rp3();
    if (n < 1 || n > 7) throw UnknownResourceError("rp(n) is available for 1 <= n <= 7, got " + tag);
    return make_rp(n);
  }
  throw UnknownResourceError("unknown builtin space '" + tag + "'");
}

std::string canonical_tag(const std::string& tag) {
  int n = 0;
  if (parse_indexed(tag, "sphere", n)) return "sphere(" + std::to_string(n) + ")";
  if (parse_indexed(tag, "rp", n)) {
    if (n == 2 || n == 3) return "rp" + std::to_string(n);
    return "rp(" + std::to_string(n) + ")";
  }
  return tag;
}

}  // namespace

ComplexPtr builtin(const std::string& tag) {
  static std::mutex mutex;
  static std::map<std::string, ComplexPtr> cache;
  std::string key = canonical_tag(tag);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ComplexPtr built = build(key);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, built).first->second;
}

}  // namespace dcoh
