#include "dcoh/fault.hpp"

#include <mutex>

#include "dcoh/errors.hpp"

namespace dcoh {

namespace {

std::mutex g_mutex;
std::optional<Fault> g_fault;
const char* const kTables[] = {"cup", "cup_i", "beta", "refined"};

}  // namespace

Fault parse_fault(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("fault must look like TABLE:INDEX, got '" + text + "'");
  Fault f;
  f.table = text.substr(0, colon);
  bool known = false;
  for (const char* t : kTables) known = known || f.table == t;
  if (!known) throw InputError("unknown fault table '" + f.table + "' (expected cup, cup_i, beta or refined)");
  std::string digits = text.substr(colon + 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("fault index must be a non-negative integer, got '" + digits + "'");
  f.index = std::stoul(digits);
  return f;
}

void set_fault(std::optional<Fault> fault) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_fault = std::move(fault);
}

std::optional<Fault> active_fault() {
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_fault;
}

void apply_fault(const char* table, Cochain& u) {
  auto f = active_fault();
  if (!f || f->table != table || f->index >= u.size()) return;
  // +1 would vanish in Q/Z
  u.set(f->index, u[f->index] + (u.ring() == Ring::QZ ? Rational(1, 2) : Rational(1)));
}

}  // namespace dcoh
