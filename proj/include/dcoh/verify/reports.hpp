#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dcoh/complex/simplicial_complex.hpp"
#include "dcoh/linalg/sparse_int_matrix.hpp"

namespace dcoh::verify {

/// Exactness of the two coefficient long exact sequences in degree n:
///   H^{n-1}(Z2) -b-> H^n(Z) -2-> H^n(Z) -rho2-> H^n(Z2) -b-> H^{n+1}(Z)
///   H^{n-1}(Q/Z) -b~-> H^n(Z) -> H^n(Q) -> H^n(Q/Z) -b~-> H^{n+1}(Z)
/// One boolean per position; {"evaluation": false, "error": ...} when some
/// map fails to produce cocycles.
nlohmann::json sequence_exactness(const ComplexPtr& x, int n);

/// Smith form sanity for an integer matrix: U M V = D, U and V unimodular,
/// divisibility chain, rank equal to the rational rank.
nlohmann::json smith_check(const SparseIntMatrix& m);

/// Report ops usable from probes (params as in the probe JSON); nullopt if
/// op is not a report op.
std::optional<nlohmann::json> run_report(const std::string& op, const nlohmann::json& params);

}  // namespace dcoh::verify
