// One PASS/FAIL line per acceptance criterion. Usage:
//   acceptance <path to dcoh binary> [--scale tiny|full] [--seed N]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "dcoh/cohomology/coefficients.hpp"
#include "dcoh/complex/constructions.hpp"
#include "dcoh/diffcoh/checks.hpp"
#include "dcoh/diffcoh/diffcoh.hpp"
#include "dcoh/steenrod/steenrod.hpp"
#include "dcoh/verify/suites.hpp"

using namespace dcoh;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string failing_ids(const json& report, std::size_t limit = 5) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& c : report["cases"])
    if (c["status"] == "fail" && shown++ < limit) out += " " + c["id"].get<std::string>();
  return out;
}

Outcome suite(const std::string& name, std::uint64_t seed, verify::Scale scale, double budget) {
  auto start = Clock::now();
  auto r = verify::run_suite(name, seed, scale);
  double t = seconds_since(start);
  std::ostringstream d;
  d << name << " " << r.passed << " passed, " << r.failed << " failed in " << t << " s (budget " << budget << " s)"
    << failing_ids(r.report);
  return {r.failed == 0 && r.passed > 0 && t < budget, d.str()};
}

// Runs only the cases whose id starts with prefix.
Outcome subset(const std::string& name, const std::string& prefix, std::uint64_t seed, double budget) {
  auto start = Clock::now();
  std::size_t passed = 0, failed = 0;
  std::string first;
  for (const auto& c : verify::build_suite(name, seed, verify::Scale::tiny)) {
    if (!c.id.starts_with(prefix)) continue;
    if (verify::run_case(c)["status"] == "pass") {
      ++passed;
    } else {
      ++failed;
      if (first.empty()) first = " first failure " + c.id;
    }
  }
  double t = seconds_since(start);
  std::ostringstream d;
  d << prefix << "* " << passed << " passed, " << failed << " failed in " << t << " s" << first;
  return {failed == 0 && passed > 0 && t < budget, d.str()};
}

Outcome criterion1() {
  auto start = Clock::now();
  auto x = builtin("rp(5)");
  GroupDescriptor z2 = cyclic(2);
  bool h2 = cohomology_descriptor(x, 2, Ring::Z) == z2;
  bool h4 = cohomology_descriptor(x, 4, Ring::Z) == z2;
  bool h5 = cohomology_descriptor(x, 5, Ring::Z) == free_group(1);
  CohomologyClass g(cohomology_group(x, 2, Ring::Z).generators.at(0));
  CohomologyClass sq = cup(g, g);
  bool square = !sq.is_zero();
  double t = seconds_since(start);
  std::ostringstream d;
  d << "rp(5): H2=Z/2 " << h2 << ", H4=Z/2 " << h4 << ", H5=Z " << h5 << ", x.x != 0 in H4 " << square << " (" << t
    << " s)";
  return {h2 && h4 && h5 && square && t < 300, d.str()};
}

DiffCocycle winding() { return from_integral_cocycle(cohomology_group(builtin("circle"), 1, Ring::Z).generators.at(0)); }

Outcome criterion5() {
  auto start = Clock::now();
  std::ostringstream d;
  // (a) winding-1 circle class: square and refined square are equal classes with holonomy 1/2
  DiffCocycle w = winding();
  DiffCocycle square = dd_power(w, 2), refined = refined_sq(1, w);
  bool equal = equal_classes(square, refined);
  std::vector<Rational> half{Rational(1, 2)};
  bool refined_half = holonomy(refined) == half;
  bool square_half = holonomy(square) == half;
  bool a = equal && refined_half && square_half;
  d << "winding: equal " << equal << ", holonomy(Sq^1)=1/2 " << refined_half << ", holonomy(x^2)=1/2 " << square_half;

  // (b) Chern-k torus bundles
  bool b = true;
  const Cochain& t2 = cohomology_group(builtin("torus"), 2, Ring::Z).generators.at(0);
  for (long k = -3; k <= 4; ++k) b = b && is_trivial(refined_sq(1, from_integral_cocycle(t2.scaled(Rational(k))))) == (k % 2 == 0);
  d << "; chern parity " << b;

  // (c) odd-degree corpus classes: integral square and trapezoid comparison
  bool c = true;
  std::size_t classes = 0;
  for (const auto& [name, m] : std::vector<std::pair<std::string, int>>{
           {"circle", 1}, {"torus", 1}, {"klein", 1}, {"rp2", 1}, {"rp3", 1}, {"rp3", 3}, {"sphere(3)", 3}, {"rp2*circle", 1}}) {
    auto x = resolve_space(name);
    std::vector<DiffCocycle> xs;
    for (const auto& g : cohomology_group(x, m, Ring::Z).generators) xs.push_back(from_integral_cocycle(g));
    const auto& qz = cohomology_group(x, m - 1, Ring::QZ);
    for (std::size_t i = 0; i < qz.generators.size(); ++i) {
      std::vector<Rational> t(qz.generators.size(), Rational(0));
      t[i] = qz.orders[i] == 0 ? Rational(1, 2) : Rational(1);
      xs.push_back(j(class_from_coordinates(x, m - 1, Ring::QZ, t)));
    }
    for (const auto& y : xs) {
      ++classes;
      if (2 * m <= x->dimension()) c = c && integration(dd_power(y, 2)) == sq_integral(m, integration(y));
      c = c && trapezoid_check(y).passed();
    }
  }
  d << "; trapezoid on " << classes << " odd classes " << c;
  double t = seconds_since(start);
  d << " (" << t << " s)";
  return {a && b && c && t < 120, d.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::string& command) {
  int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion9(const std::string& cli, std::uint64_t seed) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("dcoh-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::string base = "\"" + cli + "\" --no-cache verify --suite all --scale tiny --seed " + std::to_string(seed);
  auto start = Clock::now();
  int e1 = run(base + " --out \"" + (dir / "r1.json").string() + "\" 2>/dev/null");
  double t = seconds_since(start);
  int e2 = run(base + " --out \"" + (dir / "r2.json").string() + "\" 2>/dev/null");
  bool identical = read_file(dir / "r1.json") == read_file(dir / "r2.json") && !read_file(dir / "r1.json").empty();
  std::ostringstream d;
  d << "two runs exit " << e1 << "/" << e2 << ", identical " << identical << ", " << t << " s";

  bool faults = true;
  for (const char* fault : {"cup:0", "cup_i:0", "beta:0", "refined:0"}) {
    fs::path out = dir / (std::string(fault).replace(std::string(fault).find(':'), 1, "_") + ".json");
    fs::path replay = out;
    replay.replace_extension(".replay.json");
    int ef = run("\"" + cli + "\" --no-cache --inject-fault " + fault + " verify --suite all --scale tiny --seed " +
                 std::to_string(seed) + " --out \"" + out.string() + "\" 2>/dev/null");
    int er = run("\"" + cli + "\" verify --replay \"" + out.string() + "\" --out \"" + replay.string() + "\" 2>/dev/null");
    json r = json::parse(read_file(replay), nullptr, false);
    bool ok = ef == 1 && er == 1 && !r.is_discarded() && r["replayed"].get<int>() > 0 &&
              r["replayed"] == r["reproduced"];
    d << "; " << fault << " " << (ok ? "replayed " + r["reproduced"].dump() : std::string("NOT replayable"));
    faults = faults && ok;
  }
  fs::remove_all(dir);
  return {e1 == 0 && e2 == 0 && identical && t < 600 && faults, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <dcoh binary> [--scale tiny|full] [--seed N]\n";
    return 2;
  }
  std::string cli = argv[1];
  verify::Scale scale = verify::Scale::tiny;
  std::uint64_t seed = 7;
  for (int i = 2; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--scale") scale = verify::parse_scale(argv[i + 1]);
    if (flag == "--seed") seed = std::stoull(argv[i + 1]);
  }
  set_disk_cache(std::nullopt);
  // full scale adds rp(4) to the classical suite under the longer budget
  double classical_budget = scale == verify::Scale::full ? 1800 : 180;

  std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1},
      {2, [&] { return suite("classical-sq", seed, scale, classical_budget); }},
      {3, [&] { return suite("bockstein", seed, verify::Scale::tiny, 120); }},
      {4, [&] { return suite("refined", seed, verify::Scale::tiny, 300); }},
      {5, criterion5},
      {6, [&] { return suite("kunneth", seed, verify::Scale::tiny, 600); }},
      {7, [&] { return suite("exactness", seed, verify::Scale::tiny, 180); }},
      {8, [&] { return subset("classical-sq", "classical-sq/stability/", seed, 60); }},
      {9, [&] { return criterion9(cli, seed); }},
  };
  int failures = 0;
  for (auto& [id, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
  }
  std::cout << (9 - failures) << "/9 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
