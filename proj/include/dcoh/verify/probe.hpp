#pragma once

#include <json.hpp>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dcoh/diffcoh/diffcoh.hpp"

namespace dcoh::verify {

/// A serializable computation: leaves hold cochains or differential
/// cocycles, inner nodes name an operation. Failing verification cases store
/// their probe as the witness, so replaying it reruns the exact computation.
struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  std::string op;  // "cochain", "diff", or an operation name
  nlohmann::json params = nlohmann::json::object();
  std::vector<Expr> args;
  std::optional<Cochain> cochain;
  std::optional<DiffCocycle> diff;
};

Expr leaf(const Cochain& u);
Expr leaf(const DiffCocycle& x);
Expr make(std::string op, std::vector<Expr> args, nlohmann::json params = nlohmann::json::object());

using Value = std::variant<Cochain, DiffCocycle, nlohmann::json>;
/// Throws InputError (and subclasses) from the underlying operations;
/// UnknownResourceError for an unknown op.
Value evaluate(const Expr& e);

/// Observations of the value of e:
///   coords      class coordinates of a cocycle
///   zero-class  the cocycle is a coboundary
///   zero        every entry vanishes
///   trivial     the differential class is zero
///   holonomy    coordinates of a flat differential class
///   flat        the curvature vanishes
///   value       the JSON produced by a report op
///   cochain     the values array of a cochain
/// Input errors are caught and observed as {"error": message}.
nlohmann::json observe(const std::string& what, const Expr& e);

nlohmann::json expr_to_json(const Expr& e);
Expr expr_from_json(const nlohmann::json& j);

}  // namespace dcoh::verify
