#include "dcoh/complex/simplicial_complex.hpp"

#include <algorithm>
#include <cstdio>

#include "dcoh/errors.hpp"

namespace dcoh {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_mix(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
}

}  // namespace

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::uint64_t h = kFnvOffset;
  for (Vertex v : s) fnv_mix(h, v);
  return static_cast<std::size_t>(h);
}

std::string simplex_to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

std::vector<Simplex> boundary_faces(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.size() <= 1) return out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t k = 0; k < s.size(); ++k)
      if (k != i) f.push_back(s[k]);
    out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex::SimplicialComplex(std::string name, std::size_t vertex_count, std::vector<Simplex> facets)
    : name_(std::move(name)), vertex_count_(vertex_count) {
  std::size_t top = 0;
  for (const auto& f : facets) {
    if (f.empty()) throw ValidationError("empty facet");
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= vertex_count)
        throw ValidationError("facet " + simplex_to_string(f) + ": vertex " + std::to_string(f[i]) +
                              " out of range 0.." + std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
      if (i > 0 && f[i] <= f[i - 1]) throw ValidationError("facet " + simplex_to_string(f) + ": not strictly increasing");
    }
    top = std::max(top, f.size());
  }
  if (vertex_count > 0) top = std::max<std::size_t>(top, 1);
  tables_.assign(top, {});
  for (auto& f : facets) tables_[f.size() - 1].push_back(std::move(f));
  for (Vertex v = 0; v < vertex_count; ++v) tables_[0].push_back({v});

  // top-down closure; anything generated as a face is not maximal
  std::vector<std::vector<char>> is_face(top);
  for (std::size_t d = top; d-- > 0;) {
    auto& t = tables_[d];
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    if (d == 0) break;
    auto& below = tables_[d - 1];
    for (const auto& s : t)
      for (auto& f : boundary_faces(s)) below.push_back(std::move(f));
  }
  index_.resize(top);
  for (std::size_t d = 0; d < top; ++d) {
    index_[d].reserve(tables_[d].size() * 2);
    for (std::uint32_t i = 0; i < tables_[d].size(); ++i) index_[d].emplace(tables_[d][i], i);
    is_face[d].assign(tables_[d].size(), 0);
  }
  for (std::size_t d = 1; d < top; ++d)
    for (const auto& s : tables_[d])
      for (const auto& f : boundary_faces(s)) is_face[d - 1][index_[d - 1].at(f)] = 1;
  for (std::size_t d = 0; d < top; ++d)
    for (std::size_t i = 0; i < tables_[d].size(); ++i)
      if (!is_face[d][i]) facets_.push_back(tables_[d][i]);

  std::uint64_t h = kFnvOffset;
  fnv_mix(h, vertex_count_);
  for (const auto& f : facets_) {
    fnv_mix(h, f.size());
    for (Vertex v : f) fnv_mix(h, v);
  }
  hash_ = h;
}

ComplexPtr SimplicialComplex::make(std::string name, std::size_t vertex_count, std::vector<Simplex> facets) {
  return std::make_shared<const SimplicialComplex>(std::move(name), vertex_count, std::move(facets));
}

std::size_t SimplicialComplex::count(int n) const {
  if (n < 0 || n > dimension()) return 0;
  return tables_[n].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int n) const {
  static const std::vector<Simplex> kEmpty;
  if (n < 0 || n > dimension()) return kEmpty;
  return tables_[n];
}

std::optional<std::uint32_t> SimplicialComplex::index_of(const Simplex& s) const {
  int n = static_cast<int>(s.size()) - 1;
  if (n < 0 || n > dimension()) return std::nullopt;
  auto it = index_[n].find(s);
  if (it == index_[n].end()) return std::nullopt;
  return it->second;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(count(d));
  return chi;
}

std::string SimplicialComplex::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
  return buf;
}

const SparseIntMatrix& SimplicialComplex::coboundary(int n) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto& slot = coboundary_cache_[n];
  if (!slot) {
    std::vector<MatrixEntry> entries;
    const auto& upper = simplices(n + 1);
    if (n >= 0) {
      for (std::size_t r = 0; r < upper.size(); ++r) {
        auto faces = boundary_faces(upper[r]);
        for (std::size_t i = 0; i < faces.size(); ++i)
          entries.push_back({r, index_[n].at(faces[i]), Integer(i % 2 == 0 ? 1 : -1)});
      }
    }
    slot = std::make_unique<SparseIntMatrix>(
        SparseIntMatrix::from_entries(count(n + 1), count(n), std::move(entries)));
  }
  return *slot;
}

}  // namespace dcoh
