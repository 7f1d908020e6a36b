#include "dcoh/linalg/gf2.hpp"

#include <algorithm>
#include <iterator>

namespace dcoh {

Gf2Vector gf2_add(const Gf2Vector& a, const Gf2Vector& b) {
  Gf2Vector out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Gf2Echelon::Reduction Gf2Echelon::reduce(Gf2Vector v, Gf2Vector tag) const {
  // stored rows have all entries >= their pivot, so a left-to-right sweep
  // never revisits an index
  std::size_t k = 0;
  while (k < v.size()) {
    std::uint32_t c = v[k];
    int row = c < pivot_row_.size() ? pivot_row_[c] : -1;
    if (row < 0) {
      ++k;
      continue;
    }
    v = gf2_add(v, rows_[row]);
    tag = gf2_add(tag, tags_[row]);
  }
  return {std::move(v), std::move(tag)};
}

bool Gf2Echelon::insert(Gf2Vector v, Gf2Vector tag, Gf2Vector* dependent_tag) {
  Reduction r = reduce(std::move(v), std::move(tag));
  if (r.residual.empty()) {
    if (dependent_tag) *dependent_tag = std::move(r.tag);
    return false;
  }
  pivot_row_[r.residual.front()] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r.residual));
  tags_.push_back(std::move(r.tag));
  return true;
}

std::vector<Gf2Vector> gf2_kernel(std::size_t rows, const std::vector<Gf2Vector>& columns) {
  Gf2Echelon e(rows);
  std::vector<Gf2Vector> kernel;
  for (std::uint32_t j = 0; j < columns.size(); ++j) {
    Gf2Vector dep;
    if (!e.insert(columns[j], {j}, &dep)) kernel.push_back(std::move(dep));
  }
  return kernel;
}

std::size_t gf2_rank(std::size_t rows, const std::vector<Gf2Vector>& columns) {
  Gf2Echelon e(rows);
  for (const auto& c : columns) e.insert(c);
  return e.rank();
}

}  // namespace dcoh
