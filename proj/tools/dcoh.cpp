#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dcoh/cohomology/coefficients.hpp"
#include "dcoh/complex/constructions.hpp"
#include "dcoh/complex/io.hpp"
#include "dcoh/diffcoh/checks.hpp"
#include "dcoh/diffcoh/diffcoh.hpp"
#include "dcoh/errors.hpp"
#include "dcoh/fault.hpp"
#include "dcoh/linalg/errors.hpp"
#include "dcoh/steenrod/steenrod.hpp"
#include "dcoh/verify/suites.hpp"

using namespace dcoh;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2, kUnknown = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

/// A space name/expression, or a path to a complex JSON file.
ComplexPtr load_space(const std::string& ref) {
  if (ref.size() > 5 && ref.ends_with(".json")) return parse_complex(read_file(ref));
  return resolve_space(ref);
}

json coords_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

bool beyond_top(const Cochain& u) { return u.degree() > u.complex()->dimension(); }

json class_json(const Cochain& u) {
  json out{{"degree", u.degree()}, {"ring", ring_name(u.ring())}};
  if (beyond_top(u)) {
    out["group"] = group_to_json(free_group(0));
    out["coordinates"] = json::array();
  } else {
    out["group"] = group_to_json(cohomology_descriptor(u.complex(), u.degree(), u.ring()));
    out["coordinates"] = coords_json(class_coordinates(u));
  }
  out["representative"] = cochain_to_json(u);
  return out;
}

// Generator selectors: letters name generators of H^deg in order (a, b, ...),
// joined with '+'; "0" is the zero class.
Cochain select_class(const ComplexPtr& x, int deg, Ring ring, const std::string& selector) {
  if (deg < 0 || deg > x->dimension()) throw DegreeError("degree " + std::to_string(deg) + " out of range");
  const auto& g = cohomology_group(x, deg, ring).generators;
  Cochain out(x, deg, ring);
  if (selector == "0") return out;
  std::stringstream parts(selector);
  std::string part;
  while (std::getline(parts, part, '+')) {
    if (part.size() != 1 || part[0] < 'a' || part[0] > 'z')
      throw InputError("bad class selector '" + selector + "' (use generator letters a, b, ... joined by '+')");
    std::size_t i = static_cast<std::size_t>(part[0] - 'a');
    if (i >= g.size())
      throw UnknownResourceError("no generator '" + part + "': H^" + std::to_string(deg) + "(" + x->name() + ";" +
                                 ring_name(ring) + ") has " + std::to_string(g.size()));
    out += g[i];
  }
  return out;
}

void configure_cache(bool no_cache) {
  if (no_cache)
    set_disk_cache(std::nullopt);
  else
    set_disk_cache(default_cache_directory());
}

// ---- subcommands ----

struct CohomologyArgs {
  std::string space, ring = "Z";
  int deg = 0;
};

int cmd_cohomology(const CohomologyArgs& a) {
  auto x = load_space(a.space);
  Ring ring = parse_ring(a.ring);
  json out{{"space", x->name()}, {"degree", a.deg}, {"ring", ring_name(ring)}};
  if (a.deg < 0) throw DegreeError("negative degree");
  if (a.deg > x->dimension()) {
    out["group"] = group_to_json(free_group(0));
    out["generators"] = json::array();
  } else {
    const auto& g = cohomology_group(x, a.deg, ring);
    out["group"] = group_to_json(g.descriptor);
    json gens = json::array();
    for (std::size_t i = 0; i < g.generators.size(); ++i)
      gens.push_back({{"order", integer_to_json(g.orders[i])}, {"cochain", cochain_to_json(g.generators[i], false)}});
    out["generators"] = gens;
  }
  write_output(out, "");
  std::cerr << "H^" << a.deg << "(" << x->name() << "; " << ring_name(ring) << ") = " << out["group"].dump() << "\n";
  return kPass;
}

struct OperationArgs {
  std::string op, space, ring;
  int k = -1;
  std::vector<int> deg;
  std::vector<std::string> classes, inputs;
};

int cmd_operation(const OperationArgs& a) {
  std::vector<Cochain> args;
  for (const auto& path : a.inputs) args.push_back(parse_cochain(read_file(path)));
  if (!a.classes.empty()) {
    if (a.space.empty()) throw InputError("--class needs --space");
    auto x = load_space(a.space);
    Ring ring = !a.ring.empty() ? parse_ring(a.ring) : (a.op == "sq-int" || a.op == "cup") ? Ring::Z : Ring::Z2;
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
      int deg = a.deg.empty() ? 1 : a.deg[std::min(i, a.deg.size() - 1)];
      args.push_back(select_class(x, deg, ring, a.classes[i]));
    }
  }
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw InputError(a.op + " takes " + std::to_string(n) + " class input(s), got " + std::to_string(args.size()));
  };
  auto need_k = [&] {
    if (a.k < 0) throw InputError(a.op + " needs --k");
  };
  Cochain result = [&]() -> Cochain {
    if (a.op == "sq") {
      need(1);
      need_k();
      return sq(a.k, CohomologyClass(args[0])).representative();
    }
    if (a.op == "sq-int") {
      need(1);
      need_k();
      return sq_integral(a.k, CohomologyClass(args[0])).representative();
    }
    if (a.op == "bockstein") {
      need(1);
      if (args[0].ring() == Ring::QZ) return bockstein_exp(CohomologyClass(args[0])).representative();
      return bockstein_beta(CohomologyClass(args[0])).representative();
    }
    if (a.op == "cup") {
      need(2);
      CohomologyClass u(args[0]), v(args[1]);
      return cup(u.representative(), v.representative());
    }
    throw UnknownResourceError("unknown operation '" + a.op + "'");
  }();
  json inputs = json::array();
  for (const auto& u : args) inputs.push_back(class_json(u));
  json out{{"operation", a.op}, {"inputs", inputs}, {"result", class_json(result)}};
  if (a.k >= 0) out["k"] = a.k;
  write_output(out, "");
  std::cerr << a.op << ": result coordinates " << out["result"]["coordinates"].dump() << "\n";
  return kPass;
}

json diff_json(const DiffCocycle& x) {
  json out{{"triple", diffcocycle_to_json(x)}};
  const Cochain& c = x.c();
  out["I"] = beyond_top(c) ? json::array() : coords_json(class_coordinates(c));
  out["R"] = cochain_to_json(x.omega(), false);
  out["flat"] = x.is_flat();
  out["trivial"] = is_trivial(x);
  out["two_torsion"] = is_trivial(x.times(2));
  if (x.is_flat() && x.degree() >= 1 && x.degree() - 1 <= x.complex()->dimension()) {
    json h = coords_json(holonomy(x));
    out["holonomy"] = h.size() == 1 ? h[0] : h;
  }
  return out;
}

struct DiffArgs {
  std::string sub, in, a, b, space;
  int k = -1, m = -1, deg = -1;
};

DiffCocycle load_diff(const std::string& path, const char* flag) {
  if (path.empty()) throw InputError(std::string("missing ") + flag);
  return parse_diffcocycle(read_file(path));
}

int cmd_diff(const DiffArgs& a) {
  json out;
  if (a.sub == "refined-sq") {
    if (a.k < 0) throw InputError("refined-sq needs --k");
    out = diff_json(refined_sq(a.k, load_diff(a.in, "--in")));
  } else if (a.sub == "dd-power") {
    if (a.m < 0) throw InputError("dd-power needs --m");
    out = diff_json(dd_power(load_diff(a.in, "--in"), a.m));
  } else if (a.sub == "db-cup") {
    out = diff_json(db_cup(load_diff(a.a, "--a"), load_diff(a.b, "--b")));
  } else if (a.sub == "equal") {
    DiffCocycle x = load_diff(a.a, "--a"), y = load_diff(a.b, "--b");
    if (!same_complex(*x.complex(), *y.complex())) throw InputError("classes live on different complexes");
    if (x.degree() != y.degree()) throw DegreeError("classes have different degrees");
    out = json{{"equal", equal_classes(x, y)}};
  } else if (a.sub == "profile") {
    if (a.space.empty() || a.deg < 0) throw InputError("profile needs --space and --deg");
    out = profile_to_json(diff_profile(load_space(a.space), a.deg));
  } else if (a.sub == "trapezoid") {
    out = trapezoid_check(load_diff(a.in, "--in")).to_json();
  } else {
    throw UnknownResourceError("unknown diff subcommand '" + a.sub + "'");
  }
  write_output(out, "");
  return kPass;
}

struct VerifyArgs {
  std::string suite = "all", scale = "tiny", out, replay;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

int cmd_replay(const VerifyArgs& a) {
  json doc = parse_json_document(read_file(a.replay));
  std::vector<json> witnesses;
  if (doc.contains("cases")) {
    for (const auto& c : doc["cases"])
      if (c.contains("witness")) witnesses.push_back(c["witness"]);
  } else {
    witnesses.push_back(doc);
  }
  json results = json::array();
  std::size_t reproduced = 0;
  for (const auto& w : witnesses) {
    json r = verify::replay_witness(w);
    if (r["reproduced"] == true) ++reproduced;
    results.push_back(r);
  }
  write_output(json{{"replayed", results.size()}, {"reproduced", reproduced}, {"results", results}}, a.out);
  std::cerr << "replayed " << results.size() << " witness(es), " << reproduced << " reproduced the failure\n";
  return reproduced > 0 ? kFail : kPass;
}

int cmd_verify(const VerifyArgs& a) {
  if (!a.replay.empty()) return cmd_replay(a);
  auto start = std::chrono::steady_clock::now();
  auto result = verify::run_suite(a.suite, a.seed, verify::parse_scale(a.scale), a.threads);
  write_output(result.report, a.out);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "suite " << a.suite << " (seed " << a.seed << ", " << a.scale << "): " << result.passed << " passed, "
            << result.failed << " failed in " << seconds << " s\n";
  for (const auto& c : result.report["cases"])
    if (c["status"] == "fail") std::cerr << "  FAIL " << c["id"].get<std::string>() << "\n";
  return result.failed == 0 ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ordinary and differential cohomology of finite simplicial complexes"};
  app.require_subcommand(1);
  bool no_cache = false;
  std::string fault;
  app.add_flag("--no-cache", no_cache, "Disable the on-disk Smith form cache");
  app.add_option("--inject-fault", fault, "Corrupt one output entry, TABLE:INDEX (tables: cup, cup_i, beta, refined)");

  CohomologyArgs coh;
  auto* c = app.add_subcommand("cohomology", "Cohomology group with generator cochains");
  c->add_option("--space", coh.space, "Space name, expression, or complex JSON file")->required();
  c->add_option("--deg", coh.deg, "Degree")->required();
  c->add_option("--ring", coh.ring, "Z, Z2, Q or QZ");

  OperationArgs op;
  auto* o = app.add_subcommand("operation", "Steenrod squares, Bocksteins and cup products on classes");
  o->add_option("op", op.op, "sq, sq-int, bockstein or cup")->required();
  o->add_option("--k", op.k, "Square index");
  o->add_option("--space", op.space, "Space for --class selectors");
  o->add_option("--ring", op.ring, "Coefficient ring for --class selectors");
  o->add_option("--deg", op.deg, "Degree of each --class (repeatable; default 1)");
  o->add_option("--class", op.classes, "Generator selector such as a or a+b (repeatable)");
  o->add_option("--in", op.inputs, "Cochain JSON file (repeatable)");

  DiffArgs df;
  auto* d = app.add_subcommand("diff", "Differential cohomology operations");
  d->add_option("sub", df.sub, "refined-sq, db-cup, dd-power, equal, profile or trapezoid")->required();
  d->add_option("--in", df.in, "DiffCocycle JSON file");
  d->add_option("--a", df.a, "First DiffCocycle file");
  d->add_option("--b", df.b, "Second DiffCocycle file");
  d->add_option("--k", df.k, "Refined square index");
  d->add_option("--m", df.m, "Power");
  d->add_option("--space", df.space, "Space for profile");
  d->add_option("--deg", df.deg, "Degree for profile");

  VerifyArgs vf;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  v->add_option("--suite", vf.suite, "linalg, classical-sq, bockstein, refined, kunneth, exactness or all");
  v->add_option("--seed", vf.seed, "Seed for random cases");
  v->add_option("--scale", vf.scale, "tiny or full");
  v->add_option("--out", vf.out, "Write the report here instead of stdout");
  v->add_option("--threads", vf.threads, "Worker threads (0 = all cores)");
  v->add_option("--replay", vf.replay, "Replay witnesses from a report or witness file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    configure_cache(no_cache);
    if (!fault.empty()) set_fault(parse_fault(fault));
    if (*c) return cmd_cohomology(coh);
    if (*o) return cmd_operation(op);
    if (*d) return cmd_diff(df);
    return cmd_verify(vf);
  } catch (const UnknownResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknown;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
