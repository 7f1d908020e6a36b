#include "dcoh/linalg/smith.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "dcoh/linalg/errors.hpp"

namespace dcoh {

namespace {

void row_merge_add(std::vector<std::pair<std::uint32_t, Integer>>& target,
                   const std::vector<std::pair<std::uint32_t, Integer>>& source, const Integer& factor, bool mod2) {
  std::vector<std::pair<std::uint32_t, Integer>> out;
  out.reserve(target.size() + source.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < source.size()) {
    if (b == source.size() || (a < target.size() && target[a].first < source[b].first)) {
      out.push_back(std::move(target[a++]));
    } else if (a == target.size() || source[b].first < target[a].first) {
      Integer v = factor * source[b].second;
      if (mod2) v = mpz_odd_p(v.get_mpz_t()) ? 1 : 0;
      if (v != 0) out.emplace_back(source[b].first, std::move(v));
      ++b;
    } else {
      Integer v = target[a].second + factor * source[b].second;
      if (mod2) v = mpz_odd_p(v.get_mpz_t()) ? 1 : 0;
      if (v != 0) out.emplace_back(target[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

// Entry arithmetic for the elimination: machine words first, GMP on overflow.
struct Overflow {};

struct Small {
  using T = std::int64_t;
  static T make(const Integer& v) {
    if (!v.fits_slong_p()) throw Overflow{};
    return v.get_si();
  }
  static Integer big(T v) { return Integer(static_cast<long>(v)); }
  static bool is_unit(T v) { return v == 1 || v == -1; }
  static T abs(T v) { return v < 0 ? -v : v; }
  static int cmpabs(T a, T b) { return abs(a) < abs(b) ? -1 : (abs(a) > abs(b) ? 1 : 0); }
  static T quotient(T a, T b) { return a / b; }
  // a + f * b
  static T muladd(T a, T f, T b) {
    T prod, sum;
    if (__builtin_mul_overflow(f, b, &prod) || __builtin_add_overflow(a, prod, &sum)) throw Overflow{};
    if (sum == INT64_MIN) throw Overflow{};
    return sum;
  }
  static std::size_t bits(T v) { return v == 0 ? 1 : 64 - static_cast<std::size_t>(__builtin_clzll(static_cast<unsigned long long>(abs(v)))); }
};

struct Mod2 {
  using T = int;
  static T make(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) ? 1 : 0; }
  static Integer big(T v) { return Integer(v); }
  static bool is_unit(T v) { return v != 0; }
  static T abs(T v) { return v; }
  static int cmpabs(T a, T b) { return a < b ? -1 : (a > b ? 1 : 0); }
  static T quotient(T a, T) { return a; }
  static T muladd(T a, T f, T b) { return (a + f * b) & 1; }
  static std::size_t bits(T) { return 1; }
};

struct Big {
  using T = Integer;
  static T make(const Integer& v) { return v; }
  static Integer big(const T& v) { return v; }
  static bool is_unit(const T& v) { return v == 1 || v == -1; }
  static T abs(const T& v) { return abs_value(v); }
  static int cmpabs(const T& a, const T& b) { return dcoh::cmpabs(a, b); }
  static T quotient(const T& a, const T& b) { return truncated_quotient(a, b); }
  static T muladd(const T& a, const T& f, const T& b) { return a + f * b; }
  static std::size_t bits(const T& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }
};

struct Pivot {
  std::uint32_t row, col;
  Integer value;
};

// Working state of the elimination. Rows are sorted sparse vectors; col_rows
// is a superset index (entries may be stale) of which rows touch each column.
template <class N>
class Eliminator {
  using V = typename N::T;
  struct Cell {
    std::uint32_t col;
    V val;
  };
  using Row = std::vector<Cell>;

 public:
  Eliminator(const SparseIntMatrix& m, const SmithOptions& options, UnimodularTransform& u, UnimodularTransform& w)
      : rows_(m.rows()), col_rows_(m.cols()), active_(m.rows(), 1), options_(options), u_(u), w_(w) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      auto cols = m.row_cols(r);
      auto vals = m.row_values(r);
      rows_[r].reserve(cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) {
        V v = N::make(vals[k]);
        if (v == 0) continue;
        rows_[r].push_back({static_cast<std::uint32_t>(cols[k]), v});
        col_rows_[cols[k]].push_back(static_cast<std::uint32_t>(r));
      }
      if (rows_[r].empty()) active_[r] = 0;
    }
    seen_.assign(m.rows(), 0);
    unit_key_.assign(m.rows(), 0);
    for (std::uint32_t r = 0; r < rows_.size(); ++r) refresh(r);
  }


  std::vector<Pivot> run() {
    std::vector<Pivot> pivots;
    std::uint32_t i = 0, j = 0;
    while (find_pivot(i, j)) {
      eliminate(i, j);
      const Cell* c = find(i, j);
      pivots.push_back({i, j, N::big(c->val)});
      active_[i] = 0;
      refresh(i);
    }
    return pivots;
  }

 private:
  const Cell* find(std::uint32_t r, std::uint32_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Cell& x, std::uint32_t k) { return x.col < k; });
    if (it == row.end() || it->col != c) return nullptr;
    return &*it;
  }

  void check_bits(const V& v) const {
    if (options_.max_bits && N::bits(v) > *options_.max_bits)
      throw ResourceLimitError("Smith normal form entry exceeded " + std::to_string(*options_.max_bits) + " bits");
  }

  // Keeps the candidate set in sync: active rows holding a unit entry, keyed by length.
  void refresh(std::uint32_t r) {
    std::size_t key = 0;
    if (active_[r])
      for (const Cell& c : rows_[r])
        if (N::is_unit(c.val)) {
          key = rows_[r].size();
          break;
        }
    if (key == unit_key_[r]) return;
    if (unit_key_[r] != 0) units_.erase({unit_key_[r], r});
    unit_key_[r] = key;
    if (key != 0) units_.insert({key, r});
  }

  // Smallest magnitude among active entries. Unit pivots come from the
  // shortest row (then lowest index), in its least populated column, which
  // keeps fill-in low; otherwise the first smallest entry in row-major order.
  bool find_pivot(std::uint32_t& pi, std::uint32_t& pj) {
    if (!units_.empty()) {
      pi = units_.begin()->second;
      std::size_t best = 0;
      bool found = false;
      for (const Cell& c : rows_[pi]) {
        if (!N::is_unit(c.val)) continue;
        std::size_t load = col_rows_[c.col].size();
        if (!found || load < best) {
          found = true;
          best = load;
          pj = c.col;
        }
      }
      return true;
    }
    while (cursor_ < rows_.size() && !active_[cursor_]) ++cursor_;
    bool found = false;
    V best{};
    for (std::size_t r = cursor_; r < rows_.size(); ++r) {
      if (!active_[r]) continue;
      for (const Cell& c : rows_[r]) {
        int cmp = found ? N::cmpabs(c.val, best) : -1;
        if (cmp < 0) {
          found = true;
          best = N::abs(c.val);
          pi = static_cast<std::uint32_t>(r);
          pj = c.col;
        }
      }
    }
    return found;
  }

  // row t += f * row s
  void row_add(std::uint32_t t, std::uint32_t s, const V& f) {
    u_.add(t, s, N::big(f));
    Row& target = rows_[t];
    const Row& source = rows_[s];
    Row out;
    out.reserve(target.size() + source.size());
    std::size_t a = 0, b = 0;
    while (a < target.size() || b < source.size()) {
      if (b == source.size() || (a < target.size() && target[a].col < source[b].col)) {
        out.push_back(std::move(target[a++]));
      } else if (a == target.size() || source[b].col < target[a].col) {
        V v = N::muladd(V(0), f, source[b].val);
        check_bits(v);
        col_rows_[source[b].col].push_back(t);
        out.push_back({source[b].col, std::move(v)});
        ++b;
      } else {
        V v = N::muladd(target[a].val, f, source[b].val);
        check_bits(v);
        if (v != 0) out.push_back({target[a].col, std::move(v)});
        ++a;
        ++b;
      }
    }
    target = std::move(out);
    if (target.empty()) active_[t] = 0;
    refresh(t);
  }

  // col t += f * col s
  void col_add(std::uint32_t t, std::uint32_t s, const V& f) {
    w_.add(t, s, N::big(f));
    std::vector<std::uint32_t> rows = live_rows(s);
    for (std::uint32_t r : rows) {
      const Cell* src = find(r, s);
      V add = N::muladd(V(0), f, src->val);
      Row& row = rows_[r];
      auto it = std::lower_bound(row.begin(), row.end(), t, [](const Cell& x, std::uint32_t k) { return x.col < k; });
      if (it != row.end() && it->col == t) {
        it->val = N::muladd(it->val, V(1), add);
        check_bits(it->val);
        if (it->val == 0) row.erase(it);
      } else {
        check_bits(add);
        row.insert(it, {t, std::move(add)});
        col_rows_[t].push_back(r);
      }
      if (row.empty()) active_[r] = 0;
      refresh(r);
    }
  }

  // Rows currently holding a nonzero in column c; compacts the index.
  std::vector<std::uint32_t> live_rows(std::uint32_t c) {
    std::vector<std::uint32_t> out;
    auto& list = col_rows_[c];
    for (std::uint32_t r : list) {
      if (seen_[r]) continue;
      if (find(r, c) == nullptr) continue;
      seen_[r] = 1;
      out.push_back(r);
    }
    for (std::uint32_t r : out) seen_[r] = 0;
    std::sort(out.begin(), out.end());
    list = out;
    return out;
  }

  void eliminate(std::uint32_t& i, std::uint32_t& j) {
    for (;;) {
      V p = find(i, j)->val;
      // clear column j below/above the pivot among active rows
      bool remainder = false;
      for (std::uint32_t r : live_rows(j)) {
        if (r == i || !active_[r]) continue;
        V q = N::quotient(find(r, j)->val, p);
        if (q != 0) row_add(r, i, N::muladd(V(0), V(-1), q));
        if (find(r, j) != nullptr) remainder = true;
      }
      if (remainder) {
        std::uint32_t best_row = i;
        V best = N::abs(p);
        for (std::uint32_t r : live_rows(j)) {
          if (r == i || !active_[r]) continue;
          V m = N::abs(find(r, j)->val);
          if (m < best) {
            best = m;
            best_row = r;
          }
        }
        i = best_row;
        continue;
      }
      // clear the rest of row i; column j now only meets row i
      std::vector<std::pair<std::uint32_t, V>> others;
      for (const Cell& c : rows_[i])
        if (c.col != j) others.emplace_back(c.col, c.val);
      remainder = false;
      for (auto& [k, a] : others) {
        V q = N::quotient(a, p);
        if (q != 0) col_add(k, j, N::muladd(V(0), V(-1), q));
        if (find(i, k) != nullptr) remainder = true;
      }
      if (remainder) {
        std::uint32_t best_col = j;
        V best = N::abs(p);
        for (const Cell& c : rows_[i]) {
          if (c.col == j) continue;
          if (N::cmpabs(c.val, best) < 0) {
            best = N::abs(c.val);
            best_col = c.col;
          }
        }
        j = best_col;
        continue;
      }
      return;
    }
  }

  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<char> active_;
  std::vector<char> seen_;
  std::size_t cursor_ = 0;
  std::set<std::pair<std::size_t, std::uint32_t>> units_;
  std::vector<std::size_t> unit_key_;
  const SmithOptions& options_;
  UnimodularTransform& u_;
  UnimodularTransform& w_;
};


// Word-sized elimination, redone with GMP entries if any entry overflows.
std::vector<Pivot> eliminate_all(const SparseIntMatrix& m, const SmithOptions& options, UnimodularTransform& u,
                                 UnimodularTransform& w) {
  try {
    return Eliminator<Small>(m, options, u, w).run();
  } catch (const Overflow&) {
    u = UnimodularTransform(m.rows());
    w = UnimodularTransform(m.cols());
    return Eliminator<Big>(m, options, u, w).run();
  }
}

}  // namespace

SparseIntMatrix UnimodularTransform::materialize(bool mod2) const {
  using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;
  std::vector<SparseRow> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].emplace_back(static_cast<std::uint32_t>(i), Integer(1));
  for (const auto& op : ops_) {
    switch (op.kind) {
      case ElementaryOp::Kind::add:
        row_merge_add(rows[op.target], rows[op.source], op.factor, mod2);
        break;
      case ElementaryOp::Kind::swap:
        std::swap(rows[op.target], rows[op.source]);
        break;
      case ElementaryOp::Kind::negate:
        if (!mod2)
          for (auto& e : rows[op.target]) e.second = -e.second;
        break;
    }
  }
  std::vector<MatrixEntry> entries;
  for (std::size_t r = 0; r < n_; ++r)
    for (auto& [c, v] : rows[r]) entries.push_back({r, c, v});
  return SparseIntMatrix::from_entries(n_, n_, std::move(entries));
}

SparseIntMatrix UnimodularTransform::materialize_inverse(bool mod2) const {
  using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;
  std::vector<SparseRow> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].emplace_back(static_cast<std::uint32_t>(i), Integer(1));
  // E_1^{-1} ... E_N^{-1}: apply the inverse operations last-to-first
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    switch (it->kind) {
      case ElementaryOp::Kind::add:
        row_merge_add(rows[it->target], rows[it->source], Integer(-it->factor), mod2);
        break;
      case ElementaryOp::Kind::swap:
        std::swap(rows[it->target], rows[it->source]);
        break;
      case ElementaryOp::Kind::negate:
        if (!mod2)
          for (auto& e : rows[it->target]) e.second = -e.second;
        break;
    }
  }
  std::vector<MatrixEntry> entries;
  for (std::size_t r = 0; r < n_; ++r)
    for (auto& [c, v] : rows[r]) entries.push_back({r, c, v});
  return SparseIntMatrix::from_entries(n_, n_, std::move(entries));
}

std::size_t SmithForm::rank_mod2() const {
  if (modulus_ == 2) return rank();
  std::size_t r = 0;
  while (r < diagonal_.size() && mpz_odd_p(diagonal_[r].get_mpz_t())) ++r;
  return r;
}

SparseIntMatrix SmithForm::d() const {
  std::vector<MatrixEntry> entries;
  for (std::size_t i = 0; i < diagonal_.size(); ++i) entries.push_back({i, i, diagonal_[i]});
  return SparseIntMatrix::from_entries(rows_, cols_, std::move(entries));
}

std::vector<Integer> SmithForm::v_column(std::size_t j) const {
  std::vector<Integer> e(cols_, Integer(0));
  e[j] = 1;
  apply_v(e);
  return e;
}

std::vector<Integer> SmithForm::u_inverse_column(std::size_t j) const {
  std::vector<Integer> e(rows_, Integer(0));
  e[j] = 1;
  apply_u_inverse(e);
  return e;
}

SmithForm smith_form(const SparseIntMatrix& m, const SmithOptions& options, bool mod2) {
  SmithForm out;
  out.modulus_ = mod2 ? 2 : 0;
  out.rows_ = m.rows();
  out.cols_ = m.cols();
  out.u_ = UnimodularTransform(m.rows());
  out.w_ = UnimodularTransform(m.cols());
  auto pivots = mod2 ? Eliminator<Mod2>(m, options, out.u_, out.w_).run() : eliminate_all(m, options, out.u_, out.w_);

  // move pivot (i_s, j_s) to (s, s)
  std::vector<std::uint32_t> row_at(m.rows()), pos_of_row(m.rows());
  std::vector<std::uint32_t> col_at(m.cols()), pos_of_col(m.cols());
  for (std::uint32_t k = 0; k < m.rows(); ++k) row_at[k] = pos_of_row[k] = k;
  for (std::uint32_t k = 0; k < m.cols(); ++k) col_at[k] = pos_of_col[k] = k;
  std::vector<Integer> d;
  d.reserve(pivots.size());
  for (std::uint32_t s = 0; s < pivots.size(); ++s) {
    std::uint32_t p = pos_of_row[pivots[s].row];
    if (p != s) {
      out.u_.swap(s, p);
      std::swap(row_at[s], row_at[p]);
      pos_of_row[row_at[s]] = s;
      pos_of_row[row_at[p]] = p;
    }
    std::uint32_t q = pos_of_col[pivots[s].col];
    if (q != s) {
      out.w_.swap(s, q);
      std::swap(col_at[s], col_at[q]);
      pos_of_col[col_at[s]] = s;
      pos_of_col[col_at[q]] = q;
    }
    if (pivots[s].value < 0) out.u_.negate(s);
    d.push_back(abs_value(pivots[s].value));
  }

  // enforce d_a | d_b with 2x2 reductions on the diagonal
  const std::size_t r = d.size();
  for (std::uint32_t a = 0; a < r; ++a) {
    for (std::uint32_t b = a + 1; b < r; ++b) {
      if (d[a] == 1) break;
      if (mpz_divisible_p(d[b].get_mpz_t(), d[a].get_mpz_t())) continue;
      // [[d_a, 0], [0, d_b]] -> row a += row b -> [[d_a, d_b], [0, d_b]]
      out.u_.add(a, b, Integer(1));
      Integer m00 = d[a], m01 = d[b], m10 = 0, m11 = d[b];
      while (m01 != 0) {
        if (m00 != 0 && cmpabs(m00, m01) >= 0) {
          Integer q = truncated_quotient(m00, m01);
          out.w_.add(a, b, -q);
          m00 -= q * m01;
          m10 -= q * m11;
        } else if (m00 != 0) {
          Integer q = truncated_quotient(m01, m00);
          out.w_.add(b, a, -q);
          m01 -= q * m00;
          m11 -= q * m10;
        } else {
          out.w_.swap(a, b);
          std::swap(m00, m01);
          std::swap(m10, m11);
        }
      }
      // now [[g, 0], [m10, m11]] with g | m10
      Integer f = m10 / m00;
      if (f != 0) out.u_.add(b, a, -f);
      if (m00 < 0) out.u_.negate(a);
      if (m11 < 0) out.u_.negate(b);
      d[a] = abs_value(m00);
      d[b] = abs_value(m11);
    }
  }
  out.diagonal_ = std::move(d);
  return out;
}

SmithForm smith_normal_form(const SparseIntMatrix& m, const SmithOptions& options) {
  return smith_form(m, options, false);
}

SmithForm smith_normal_form_mod2(const SparseIntMatrix& m) { return smith_form(m, {}, true); }

}  // namespace dcoh
