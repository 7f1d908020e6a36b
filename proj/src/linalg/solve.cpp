#include "dcoh/linalg/solve.hpp"

#include "dcoh/linalg/errors.hpp"

namespace dcoh {

namespace {

template <class T>
bool divisible(const T& c, const Integer& d);

template <>
bool divisible<Integer>(const Integer& c, const Integer& d) {
  return mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) != 0;
}

template <>
bool divisible<Rational>(const Rational& c, const Integer& d) {
  return is_integral(c / Rational(d));
}

}  // namespace

std::optional<std::vector<Integer>> solve_integer(const SmithForm& snf, const std::vector<Integer>& b) {
  if (b.size() != snf.rows()) throw DimensionMismatch("solve_integer: right-hand side has wrong length");
  std::vector<Integer> c = b;
  snf.apply_u(c);
  const auto& d = snf.diagonal();
  for (std::size_t i = d.size(); i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  std::vector<Integer> y(snf.cols(), Integer(0));
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!divisible(c[i], d[i])) return std::nullopt;
    y[i] = c[i] / d[i];
  }
  snf.apply_v(y);
  return y;
}

std::optional<std::vector<Integer>> solve_integer(const SparseIntMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve_integer: right-hand side has wrong length");
  return solve_integer(smith_normal_form(m), b);
}

std::optional<IntegerSolutionSet> solve_integer_set(const SparseIntMatrix& m, const std::vector<Integer>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve_integer: right-hand side has wrong length");
  SmithForm snf = smith_normal_form(m);
  auto x = solve_integer(snf, b);
  if (!x) return std::nullopt;
  return IntegerSolutionSet{std::move(*x), integer_kernel_basis(snf)};
}

std::optional<std::vector<Rational>> solve_rational(const SmithForm& snf, const std::vector<Rational>& b) {
  if (b.size() != snf.rows()) throw DimensionMismatch("solve_rational: right-hand side has wrong length");
  std::vector<Rational> c = b;
  snf.apply_u(c);
  const auto& d = snf.diagonal();
  for (std::size_t i = d.size(); i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  std::vector<Rational> y(snf.cols(), Rational(0));
  for (std::size_t i = 0; i < d.size(); ++i) y[i] = c[i] / Rational(d[i]);
  snf.apply_v(y);
  return y;
}

std::optional<std::vector<Rational>> solve_rational(const SparseIntMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve_rational: right-hand side has wrong length");
  return solve_rational(smith_normal_form(m), b);
}

std::vector<std::vector<Integer>> integer_kernel_basis(const SmithForm& snf) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t j = snf.rank(); j < snf.cols(); ++j) out.push_back(snf.v_column(j));
  return out;
}

std::size_t rank(const SparseIntMatrix& m) { return smith_normal_form(m).rank(); }

GroupDescriptor quotient_structure(const SparseIntMatrix& z, const SparseIntMatrix& b) {
  if (z.rows() != b.rows()) throw DimensionMismatch("quotient_structure: ambient dimensions differ");
  SmithForm zs = smith_normal_form(z);
  const auto& d = zs.diagonal();
  const std::size_t r = d.size();
  std::vector<MatrixEntry> y_entries;
  SparseIntMatrix bt = b.transpose();
  for (std::size_t col = 0; col < b.cols(); ++col) {
    std::vector<Integer> c(b.rows(), Integer(0));
    auto rows = bt.row_cols(col);
    auto vals = bt.row_values(col);
    for (std::size_t k = 0; k < rows.size(); ++k) c[rows[k]] = vals[k];
    zs.apply_u(c);
    for (std::size_t i = r; i < c.size(); ++i)
      if (c[i] != 0) throw NotSublatticeError("not a sublattice: column " + std::to_string(col) + " of B");
    for (std::size_t i = 0; i < r; ++i) {
      if (!divisible(c[i], d[i])) throw NotSublatticeError("not a sublattice: column " + std::to_string(col) + " of B");
      if (c[i] != 0) y_entries.push_back({i, col, c[i] / d[i]});
    }
  }
  SparseIntMatrix y = SparseIntMatrix::from_entries(r, b.cols(), std::move(y_entries));
  SmithForm ys = smith_normal_form(y);
  std::vector<Integer> torsion;
  for (const auto& di : ys.diagonal())
    if (di > 1) torsion.push_back(di);
  GroupDescriptor g;
  g.free_rank = r - ys.rank();
  g.invariant_factors = std::move(torsion);
  return g;
}

LatticeMembership::LatticeMembership(const SparseIntMatrix& l, const SparseIntMatrix& w) : dim_(l.rows()) {
  if (l.rows() != w.rows()) throw DimensionMismatch("in_lattice_image: L and W have different row counts");
  w_snf_ = std::make_shared<const SmithForm>(smith_normal_form(w));
  prepare(l);
}

LatticeMembership::LatticeMembership(const SparseIntMatrix& l, std::shared_ptr<const SmithForm> w_snf)
    : dim_(l.rows()), w_snf_(std::move(w_snf)) {
  if (w_snf_->rows() != l.rows()) throw DimensionMismatch("in_lattice_image: L and W have different row counts");
  prepare(l);
}

void LatticeMembership::prepare(const SparseIntMatrix& l) {
  l_is_identity_ = l.is_identity();
  if (l_is_identity_) return;
  const std::size_t r = w_snf_->rank();
  SparseIntMatrix lt = l.transpose();
  std::vector<MatrixEntry> entries;
  for (std::size_t c = 0; c < l.cols(); ++c) {
    std::vector<Integer> col(dim_, Integer(0));
    auto rows = lt.row_cols(c);
    auto vals = lt.row_values(c);
    for (std::size_t k = 0; k < rows.size(); ++k) col[rows[k]] = vals[k];
    w_snf_->apply_u(col);
    for (std::size_t i = r; i < dim_; ++i)
      if (col[i] != 0) entries.push_back({i - r, c, col[i]});
  }
  pl_snf_ = smith_normal_form(SparseIntMatrix::from_entries(dim_ - r, l.cols(), std::move(entries)));
}

bool LatticeMembership::contains(const std::vector<Rational>& v) const {
  if (v.size() != dim_) throw DimensionMismatch("in_lattice_image: vector has wrong length");
  std::vector<Rational> c = v;
  w_snf_->apply_u(c);
  const std::size_t r = w_snf_->rank();
  std::vector<Rational> pv(c.begin() + static_cast<std::ptrdiff_t>(r), c.end());
  if (l_is_identity_) {
    for (const auto& x : pv)
      if (!is_integral(x)) return false;
    return true;
  }
  pl_snf_->apply_u(pv);
  const auto& d = pl_snf_->diagonal();
  for (std::size_t i = d.size(); i < pv.size(); ++i)
    if (pv[i] != 0) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!divisible(pv[i], d[i])) return false;
  return true;
}

bool in_lattice_image(const std::vector<Rational>& v, const SparseIntMatrix& l, const SparseIntMatrix& w) {
  return LatticeMembership(l, w).contains(v);
}

bool in_lattice_image(const std::vector<Rational>& v, const SparseIntMatrix& l,
                      const std::vector<std::vector<Rational>>& w_columns) {
  // scaling a column by a positive integer leaves its rational span unchanged
  std::vector<MatrixEntry> entries;
  for (std::size_t c = 0; c < w_columns.size(); ++c) {
    if (w_columns[c].size() != l.rows()) throw DimensionMismatch("in_lattice_image: W column has wrong length");
    Integer den = 1;
    for (const auto& x : w_columns[c]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t r = 0; r < w_columns[c].size(); ++r) {
      Rational scaled = w_columns[c][r] * Rational(den);
      if (scaled != 0) entries.push_back({r, c, scaled.get_num()});
    }
  }
  return in_lattice_image(v, l, SparseIntMatrix::from_entries(l.rows(), w_columns.size(), std::move(entries)));
}

}  // namespace dcoh
