#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "dcoh/verify/probe.hpp"

namespace dcoh::verify {

enum class Scale { tiny, full };
Scale parse_scale(const std::string& text);
std::string scale_name(Scale s);

/// One verification case: observe(expr) must equal expected. With
/// select = "failing" the observed report is reduced to the list of its
/// failing entries first.
struct Case {
  std::string id;
  std::string observe;
  Expr expr;
  nlohmann::json expected;
  std::string select;
};

std::vector<std::string> suite_names();
/// Throws UnknownResourceError for an unknown suite.
std::vector<Case> build_suite(const std::string& name, std::uint64_t seed, Scale scale);

struct SuiteResult {
  nlohmann::json report;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

/// Runs every case (on `threads` workers, 0 = hardware concurrency) and
/// assembles a report sorted by case id. Failing cases carry a witness.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, Scale scale, unsigned threads = 0);

nlohmann::json run_case(const Case& c);

/// Re-evaluates a witness under its recorded fault. Returns
/// {"id", "expected", "actual", "recorded", "reproduced"}; reproduced means
/// the fresh value equals the recorded one and still differs from expected.
nlohmann::json replay_witness(const nlohmann::json& witness);

}  // namespace dcoh::verify
