#include "dcoh/complex/cochain.hpp"

#include "dcoh/errors.hpp"

namespace dcoh {

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::Z: return "Z";
    case Ring::Z2: return "Z2";
    case Ring::Q: return "Q";
    case Ring::QZ: return "QZ";
  }
  return "?";
}

Ring parse_ring(const std::string& text) {
  if (text == "Z") return Ring::Z;
  if (text == "Z2") return Ring::Z2;
  if (text == "Q") return Ring::Q;
  if (text == "QZ") return Ring::QZ;
  throw InputError("unknown ring '" + text + "' (expected Z, Z2, Q or QZ)");
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  return &a == &b || (a.content_hash() == b.content_hash() && a.vertex_count() == b.vertex_count() &&
                      a.facets() == b.facets());
}

Cochain::Cochain(ComplexPtr complex, int degree, Ring ring)
    : complex_(std::move(complex)), degree_(degree), ring_(ring), values_(complex_->count(degree), Rational(0)) {}

Cochain::Cochain(ComplexPtr complex, int degree, Ring ring, std::vector<Rational> values)
    : complex_(std::move(complex)), degree_(degree), ring_(ring), values_(std::move(values)) {
  if (values_.size() != complex_->count(degree))
    throw ValidationError("cochain of degree " + std::to_string(degree) + " needs " +
                          std::to_string(complex_->count(degree)) + " values, got " + std::to_string(values_.size()));
  for (auto& v : values_) normalize(v);
}

void Cochain::normalize(Rational& v) const {
  v.canonicalize();
  switch (ring_) {
    case Ring::Z:
      if (!is_integral(v)) throw ValidationError("non-integral value " + to_string(v) + " in a Z cochain");
      break;
    case Ring::Z2:
      if (!is_integral(v)) throw ValidationError("non-integral value " + to_string(v) + " in a Z2 cochain");
      {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_num_mpz_t(), 2);
        v = Rational(r);
      }
      break;
    case Ring::Q:
      break;
    case Ring::QZ:
      v = fractional_part(v);
      break;
  }
}

void Cochain::set(std::size_t i, const Rational& v) {
  Rational x = v;
  normalize(x);
  values_.at(i) = std::move(x);
}

Rational Cochain::value_on(const Simplex& s) const {
  if (static_cast<int>(s.size()) != degree_ + 1) return 0;
  auto idx = complex_->index_of(s);
  return idx ? values_[*idx] : Rational(0);
}

bool Cochain::is_zero() const {
  for (const auto& v : values_)
    if (v != 0) return false;
  return true;
}

std::vector<Integer> Cochain::integer_values() const {
  if (ring_ != Ring::Z && ring_ != Ring::Z2) throw RingMismatch("integer values requested from a " + ring_name(ring_) + " cochain");
  std::vector<Integer> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.get_num());
  return out;
}

void Cochain::check_compatible(const Cochain& other) const {
  if (!same_complex(*complex_, *other.complex_)) throw ValidationError("cochains live on different complexes");
  if (degree_ != other.degree_) throw DegreeError("cochain degrees differ");
  if (ring_ != other.ring_) throw RingMismatch("cochain rings differ: " + ring_name(ring_) + " vs " + ring_name(other.ring_));
}

Cochain& Cochain::operator+=(const Cochain& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (other.values_[i] == 0) continue;
    values_[i] += other.values_[i];
    normalize(values_[i]);
  }
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (other.values_[i] == 0) continue;
    values_[i] -= other.values_[i];
    normalize(values_[i]);
  }
  return *this;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& v : out.values_) {
    v = -v;
    out.normalize(v);
  }
  return out;
}

Cochain Cochain::scaled(const Rational& k) const {
  Cochain out = *this;
  for (auto& v : out.values_) {
    v *= k;
    out.normalize(v);
  }
  return out;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.degree_ == b.degree_ && a.ring_ == b.ring_ && same_complex(*a.complex_, *b.complex_) &&
         a.values_ == b.values_;
}

Cochain coboundary(const Cochain& u) {
  const auto& d = u.complex()->coboundary(u.degree());
  auto values = d.multiply(std::span<const Rational>(u.values()));
  return Cochain(u.complex(), u.degree() + 1, u.ring(), std::move(values));
}

bool is_cocycle(const Cochain& u) { return coboundary(u).is_zero(); }

Cochain change_ring(const Cochain& u, Ring target) {
  if (u.ring() == target) return u;
  bool ok = (u.ring() == Ring::Z && target != Ring::Z) || (u.ring() == Ring::Q && target == Ring::QZ);
  if (!ok) throw RingMismatch("no coefficient map from " + ring_name(u.ring()) + " to " + ring_name(target));
  return Cochain(u.complex(), u.degree(), target, u.values());
}

Cochain integer_lift(const Cochain& u) {
  if (u.ring() != Ring::Z && u.ring() != Ring::Z2) throw RingMismatch("integer lift needs a Z or Z2 cochain");
  return Cochain(u.complex(), u.degree(), Ring::Z, u.values());
}

Cochain rational_lift(const Cochain& u) {
  if (u.ring() == Ring::Z2) throw RingMismatch("rational lift of a Z2 cochain is not defined; use gamma2");
  return Cochain(u.complex(), u.degree(), Ring::Q, u.values());
}

Cochain indicator(const ComplexPtr& complex, const Simplex& s, Ring ring, const Rational& value) {
  int n = static_cast<int>(s.size()) - 1;
  auto idx = complex->index_of(s);
  if (!idx) throw ValidationError("simplex " + simplex_to_string(s) + " is not in " + complex->name());
  Cochain out(complex, n, ring);
  out.set(*idx, value);
  return out;
}

SparseIntMatrix coboundary_matrix(const SimplicialComplex& x, int n, Ring ring) {
  if (n < 0 || n > x.dimension())
    throw DegreeError("coboundary degree " + std::to_string(n) + " outside 0.." + std::to_string(x.dimension()));
  const auto& d = x.coboundary(n);
  if (ring != Ring::Z2) return d;
  auto entries = d.entries();
  for (auto& e : entries) e.value = 1;
  return SparseIntMatrix::from_entries(d.rows(), d.cols(), std::move(entries));
}

}  // namespace dcoh
