#include "dcoh/cohomology/coefficients.hpp"

#include "dcoh/errors.hpp"
#include "dcoh/fault.hpp"

namespace dcoh {

namespace {

void require_ring(const Cochain& u, Ring r, const char* op) {
  if (u.ring() != r) throw RingMismatch(std::string(op) + " expects a " + ring_name(r) + " cochain, got " + ring_name(u.ring()));
}

// delta of an integral lift, divided by 2
Cochain half_coboundary(const Cochain& lift) {
  Cochain d = coboundary(lift);
  std::vector<Rational> values = d.values();
  for (auto& v : values) {
    if (mpz_odd_p(v.get_num_mpz_t())) throw ValidationError("not a mod 2 cocycle");
    v /= 2;
  }
  return Cochain(d.complex(), d.degree(), Ring::Z, std::move(values));
}

}  // namespace

Cochain gamma2_cochain(const Cochain& u) {
  require_ring(u, Ring::Z2, "gamma2");
  std::vector<Rational> values = u.values();
  for (auto& v : values) v /= 2;
  return Cochain(u.complex(), u.degree(), Ring::QZ, std::move(values));
}

Cochain beta_cochain(const Cochain& u) {
  require_ring(u, Ring::Z2, "beta");
  Cochain out = half_coboundary(integer_lift(u));
  apply_fault("beta", out);
  return out;
}

Cochain beta_exp_cochain(const Cochain& u) {
  require_ring(u, Ring::QZ, "beta_exp");
  Cochain d = coboundary(rational_lift(u));
  for (const auto& v : d.values())
    if (!is_integral(v)) throw ValidationError("not a Q/Z cocycle");
  return Cochain(d.complex(), d.degree(), Ring::Z, d.values());
}

CohomologyClass rho2(const CohomologyClass& x) {
  require_ring(x.representative(), Ring::Z, "rho2");
  return CohomologyClass(change_ring(x.representative(), Ring::Z2));
}

CohomologyClass gamma2(const CohomologyClass& x) { return CohomologyClass(gamma2_cochain(x.representative())); }

CohomologyClass bockstein_beta(const CohomologyClass& x) { return CohomologyClass(beta_cochain(x.representative())); }

CohomologyClass bockstein_beta2(const CohomologyClass& x) {
  require_ring(x.representative(), Ring::Z2, "beta2");
  return CohomologyClass(change_ring(beta_cochain(x.representative()), Ring::Z2));
}

CohomologyClass bockstein_exp(const CohomologyClass& u) { return CohomologyClass(beta_exp_cochain(u.representative())); }

CohomologyClass change_coefficients(const CohomologyClass& x, Ring target) {
  return CohomologyClass(change_ring(x.representative(), target));
}

CohomologyClass multiply(const CohomologyClass& x, const Integer& k) {
  return CohomologyClass(x.representative().scaled(Rational(k)));
}

}  // namespace dcoh
