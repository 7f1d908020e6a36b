#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dcoh/complex/cochain.hpp"

namespace dcoh {

/// A deliberately wrong entry in one of the engine's output tables, for
/// exercising failure reporting. Tables: cup, cup_i, beta, refined.
struct Fault {
  std::string table;
  std::size_t index = 0;
  std::string to_string() const { return table + ":" + std::to_string(index); }
};

/// Parses "TABLE:INDEX". Throws InputError.
Fault parse_fault(const std::string& text);

/// Process-wide; set it before starting work, not during.
void set_fault(std::optional<Fault> fault);
std::optional<Fault> active_fault();

/// Adds 1 to entry `index` of u when the active fault names `table`.
void apply_fault(const char* table, Cochain& u);

class FaultScope {
 public:
  explicit FaultScope(std::optional<Fault> fault) : saved_(active_fault()) { set_fault(std::move(fault)); }
  ~FaultScope() { set_fault(saved_); }
  FaultScope(const FaultScope&) = delete;
  FaultScope& operator=(const FaultScope&) = delete;

 private:
  std::optional<Fault> saved_;
};

}  // namespace dcoh
