#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dcoh/complex/cochain.hpp"
#include "dcoh/complex/simplicial_complex.hpp"
#include "dcoh/complex/simplicial_map.hpp"

namespace dcoh {

/// Shipped triangulations: point, circle, sphere(n), torus, klein, rp2, rp3,
/// rp(n). Accepts "sphere2"/"rp5" spellings too. Throws UnknownResourceError.
ComplexPtr builtin(const std::string& tag);

/// Staircase triangulation of X x Y; vertex (x, y) gets label x*|V(Y)| + y.
/// With max_dim only the simplices of dimension <= max_dim are built.
ComplexPtr product(const ComplexPtr& x, const ComplexPtr& y, std::optional<int> max_dim = std::nullopt);
std::pair<SimplicialMap, SimplicialMap> product_projections(const ComplexPtr& xy, const ComplexPtr& x,
                                                            const ComplexPtr& y);

/// Two apexes a = |V|, b = |V|+1 coned over every facet.
ComplexPtr suspension(const ComplexPtr& x);
/// Cochain suspension s: C^n(X) -> C^{n+1}(SX), (s u)(sigma + a) = u(sigma).
Cochain suspend_cochain(const ComplexPtr& sx, const Cochain& u);

/// Space expressions: builtin tags, "A*B" products, "susp(A)", parentheses.
ComplexPtr resolve_space(const std::string& expression);

}  // namespace dcoh
