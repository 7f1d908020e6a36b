#pragma once

#include "dcoh/cohomology/cohomology.hpp"

namespace dcoh {

/// Mod 2 reduction Z -> Z2.
CohomologyClass rho2(const CohomologyClass& x);
/// Z2 -> Q/Z, 1 -> 1/2.
CohomologyClass gamma2(const CohomologyClass& x);
/// Bockstein of 0 -> Z -> Z -> Z2 -> 0: lift to 0/1 values, delta, divide by 2.
CohomologyClass bockstein_beta(const CohomologyClass& x);
/// Bockstein of 0 -> Z2 -> Z4 -> Z2 -> 0.
CohomologyClass bockstein_beta2(const CohomologyClass& x);
/// Bockstein of 0 -> Z -> Q -> Q/Z -> 0: lift to [0,1), delta.
CohomologyClass bockstein_exp(const CohomologyClass& u);

/// Coefficient change along Z -> Q or Q -> Q/Z (or Z -> Q/Z).
CohomologyClass change_coefficients(const CohomologyClass& x, Ring target);
CohomologyClass multiply(const CohomologyClass& x, const Integer& k);

/// Cochain-level versions used by the diffcoh layer.
Cochain gamma2_cochain(const Cochain& u);
Cochain beta_cochain(const Cochain& u);
Cochain beta_exp_cochain(const Cochain& u);

}  // namespace dcoh
