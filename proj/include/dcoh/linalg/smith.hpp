#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dcoh/linalg/integer.hpp"
#include "dcoh/linalg/sparse_int_matrix.hpp"

namespace dcoh {

/// Element of Z/2 usable with UnimodularTransform::apply and friends.
struct Bit {
  bool value = false;
  Bit() = default;
  explicit Bit(bool v) : value(v) {}
  Bit& operator+=(Bit o) {
    value ^= o.value;
    return *this;
  }
  Bit& operator-=(Bit o) { return *this += o; }
  Bit operator-() const { return *this; }
  friend Bit operator*(const Integer& f, Bit b) { return Bit(b.value && mpz_odd_p(f.get_mpz_t())); }
  friend bool operator==(Bit a, int b) { return a.value == ((b & 1) != 0); }
  friend bool operator==(Bit a, Bit b) { return a.value == b.value; }
};

struct ElementaryOp {
  enum class Kind : std::uint8_t { add, swap, negate };
  Kind kind = Kind::add;
  std::uint32_t target = 0;
  std::uint32_t source = 0;
  Integer factor;  // used by add: row[target] += factor * row[source]
};

/// Product E_N ... E_1 of logged elementary row operations on Z^n. Never
/// materialized unless asked; vectors are transformed by replaying the log.
class UnimodularTransform {
 public:
  UnimodularTransform() = default;
  explicit UnimodularTransform(std::size_t n) : n_(n) {}

  std::size_t dimension() const { return n_; }
  std::size_t op_count() const { return ops_.size(); }

  void add(std::uint32_t target, std::uint32_t source, Integer factor) {
    ops_.push_back({ElementaryOp::Kind::add, target, source, std::move(factor)});
  }
  void swap(std::uint32_t a, std::uint32_t b) { ops_.push_back({ElementaryOp::Kind::swap, a, b, Integer(0)}); }
  void negate(std::uint32_t a) { ops_.push_back({ElementaryOp::Kind::negate, a, a, Integer(0)}); }

  // T x
  template <class T>
  void apply(std::vector<T>& x) const {
    for (const auto& op : ops_) step(x, op, false);
  }
  // T^{-1} x
  template <class T>
  void apply_inverse(std::vector<T>& x) const {
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) step(x, *it, true);
  }
  // T^t x
  template <class T>
  void apply_transpose(std::vector<T>& x) const {
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) step_transpose(x, *it, false);
  }
  // (T^t)^{-1} x
  template <class T>
  void apply_inverse_transpose(std::vector<T>& x) const {
    for (const auto& op : ops_) step_transpose(x, op, true);
  }

  /// With mod2 the entries are reduced mod 2 throughout.
  SparseIntMatrix materialize(bool mod2 = false) const;
  SparseIntMatrix materialize_inverse(bool mod2 = false) const;

 private:
  template <class T>
  static void step(std::vector<T>& x, const ElementaryOp& op, bool inverse) {
    switch (op.kind) {
      case ElementaryOp::Kind::add:
        if (x[op.source] != 0) {
          if (inverse)
            x[op.target] -= op.factor * x[op.source];
          else
            x[op.target] += op.factor * x[op.source];
        }
        break;
      case ElementaryOp::Kind::swap:
        std::swap(x[op.target], x[op.source]);
        break;
      case ElementaryOp::Kind::negate:
        x[op.target] = -x[op.target];
        break;
    }
  }
  // Transpose of "target += f*source" is "source += f*target".
  template <class T>
  static void step_transpose(std::vector<T>& x, const ElementaryOp& op, bool inverse) {
    switch (op.kind) {
      case ElementaryOp::Kind::add:
        if (x[op.target] != 0) {
          if (inverse)
            x[op.source] -= op.factor * x[op.target];
          else
            x[op.source] += op.factor * x[op.target];
        }
        break;
      case ElementaryOp::Kind::swap:
        std::swap(x[op.target], x[op.source]);
        break;
      case ElementaryOp::Kind::negate:
        x[op.target] = -x[op.target];
        break;
    }
  }

  std::size_t n_ = 0;
  std::vector<ElementaryOp> ops_;
};

struct SmithOptions {
  /// Abort with ResourceLimitError when an intermediate entry exceeds this many bits.
  std::optional<std::size_t> max_bits;
};

/// U M V = D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...),
/// d_i > 0 and d_i | d_{i+1}.
class SmithForm {
 public:
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return diagonal_.size(); }
  /// Nonzero diagonal entries in order.
  const std::vector<Integer>& diagonal() const { return diagonal_; }

  /// 0 for an integral form; 2 when U M V = D holds only mod 2.
  int modulus() const { return modulus_; }

  SparseIntMatrix u() const { return u_.materialize(modulus_ == 2); }
  SparseIntMatrix u_inverse() const { return u_.materialize_inverse(modulus_ == 2); }
  /// U^{-1} reduced mod 2 (U stays invertible mod 2).
  SparseIntMatrix u_inverse_mod2() const { return u_.materialize_inverse(true); }
  /// Number of odd d_i: the rank of M mod 2, since the odd d_i come first.
  std::size_t rank_mod2() const;
  SparseIntMatrix v() const { return w_.materialize(modulus_ == 2).transpose(); }
  SparseIntMatrix d() const;

  template <class T>
  void apply_u(std::vector<T>& x) const { u_.apply(x); }
  template <class T>
  void apply_u_inverse(std::vector<T>& x) const { u_.apply_inverse(x); }
  template <class T>
  void apply_u_transpose(std::vector<T>& x) const { u_.apply_transpose(x); }
  template <class T>
  void apply_v(std::vector<T>& x) const { w_.apply_transpose(x); }
  template <class T>
  void apply_v_inverse(std::vector<T>& x) const { w_.apply_inverse_transpose(x); }

  /// Column j of V.
  std::vector<Integer> v_column(std::size_t j) const;
  /// Column j of U^{-1}.
  std::vector<Integer> u_inverse_column(std::size_t j) const;

 private:
  friend SmithForm smith_form(const SparseIntMatrix&, const SmithOptions&, bool);
  int modulus_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> diagonal_;
  UnimodularTransform u_;
  UnimodularTransform w_;  // V = W^t; column operations are logged as row operations of W
};

SmithForm smith_normal_form(const SparseIntMatrix& m, const SmithOptions& options = {});
/// Normal form over Z/2: every d_i = 1 and U M V = D mod 2. The transforms
/// should be applied to Bit vectors (or materialized, which reduces mod 2).
SmithForm smith_normal_form_mod2(const SparseIntMatrix& m);

}  // namespace dcoh
