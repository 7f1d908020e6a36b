#include "dcoh/verify/suites.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "dcoh/cohomology/coefficients.hpp"
#include "dcoh/complex/constructions.hpp"
#include "dcoh/diffcoh/random.hpp"
#include "dcoh/errors.hpp"
#include "dcoh/fault.hpp"
#include "dcoh/steenrod/steenrod.hpp"

namespace dcoh::verify {

using nlohmann::json;

Scale parse_scale(const std::string& text) {
  if (text == "tiny") return Scale::tiny;
  if (text == "full") return Scale::full;
  throw InputError("unknown scale '" + text + "' (expected tiny or full)");
}

std::string scale_name(Scale s) { return s == Scale::tiny ? "tiny" : "full"; }

namespace {

// ---- expression shorthands ----

Expr op1(const char* name, Expr x, json params = json::object()) { return make(name, {std::move(x)}, std::move(params)); }
Expr op2(const char* name, Expr x, Expr y, json params = json::object()) {
  return make(name, {std::move(x), std::move(y)}, std::move(params));
}
Expr sub(Expr x, Expr y) { return op2("sub", std::move(x), std::move(y)); }
Expr sqk(int k, Expr x) { return op1("sq", std::move(x), {{"k", k}}); }
Expr rsq(int k, Expr x) { return op1("refined-sq", std::move(x), {{"k", k}}); }
Expr report(const char* name, json params) { return make(name, {}, std::move(params)); }

std::string pad(std::size_t i, int width = 3) {
  std::string s = std::to_string(i);
  return std::string(s.size() < static_cast<std::size_t>(width) ? width - s.size() : 0, '0') + s;
}

class Builder {
 public:
  void add(std::string id, std::string observe, Expr e, json expected, std::string select = "") {
    cases_.push_back({std::move(id), std::move(observe), std::move(e), std::move(expected), std::move(select)});
  }
  void zero_class(std::string id, Expr e) { add(std::move(id), "zero-class", std::move(e), true); }
  void trivial(std::string id, Expr e) { add(std::move(id), "trivial", std::move(e), true); }
  void clean(std::string id, Expr e) { add(std::move(id), "value", std::move(e), json::array(), "failing"); }
  std::vector<Case> take() { return std::move(cases_); }

 private:
  std::vector<Case> cases_;
};

std::vector<Cochain> z2_classes(const ComplexPtr& x, int n) {
  const auto& g = cohomology_group(x, n, Ring::Z2).generators;
  std::vector<Cochain> out(g.begin(), g.end());
  if (g.size() > 1) {
    Cochain sum(x, n, Ring::Z2);
    for (const auto& c : g) sum += c;
    out.push_back(sum);
  }
  return out;
}

// ---- linalg ----

struct KnownGroup {
  const char* space;
  int degree;
  Ring ring;
  GroupDescriptor group;
};

std::vector<KnownGroup> known_groups(Scale scale) {
  GroupDescriptor z = free_group(1), z2 = cyclic(2), zero = free_group(0);
  std::vector<KnownGroup> out{
      {"point", 0, Ring::Z, z},
      {"point", 1, Ring::Z, zero},
      {"circle", 1, Ring::Z, z},
      {"circle", 1, Ring::QZ, divisible_group(1)},
      {"sphere(2)", 1, Ring::Z, zero},
      {"sphere(2)", 2, Ring::Z, z},
      {"sphere(3)", 3, Ring::Z, z},
      {"torus", 1, Ring::Z, free_group(2)},
      {"torus", 2, Ring::Z, z},
      {"klein", 1, Ring::Z, z},
      {"klein", 2, Ring::Z, z2},
      {"klein", 1, Ring::Z2, direct_sum(z2, z2)},
      {"rp2", 1, Ring::Z, zero},
      {"rp2", 2, Ring::Z, z2},
      {"rp2", 1, Ring::Z2, z2},
      {"rp2", 2, Ring::Z2, z2},
      {"rp2", 1, Ring::QZ, z2},
      {"rp3", 1, Ring::Z, zero},
      {"rp3", 2, Ring::Z, z2},
      {"rp3", 3, Ring::Z, z},
      {"rp2*circle", 2, Ring::Z, direct_sum(z2, zero)},
      {"rp2*rp2", 2, Ring::Z, direct_sum(z2, z2)},
      {"rp2*rp2", 3, Ring::Z, z2},
  };
  if (scale == Scale::full) {
    out.push_back({"rp(4)", 4, Ring::Z, z2});
    out.push_back({"rp(5)", 2, Ring::Z, z2});
    out.push_back({"rp(5)", 4, Ring::Z, z2});
    out.push_back({"rp(5)", 5, Ring::Z, z});
  }
  return out;
}

void linalg_suite(Builder& b, std::uint64_t seed, Scale scale) {
  std::mt19937_64 rng(seed);
  std::size_t count = scale == Scale::tiny ? 40 : 300;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    // mostly small entries, some sparse, an occasional large one
    json entries = json::array();
    for (std::size_t r = 0; r < rows; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < cols; ++c) {
        long v = rng() % 3 == 0 ? 0 : static_cast<long>(rng() % 11) - 5;
        if (rng() % 17 == 0) v *= 1000003;
        row.push_back(std::to_string(v));
      }
      entries.push_back(row);
    }
    b.clean("linalg/snf/" + pad(i), report("snf", {{"rows", rows}, {"cols", cols}, {"entries", entries}}));
  }
  for (const auto& k : known_groups(scale))
    b.add("linalg/groups/" + std::string(k.space) + "/H" + std::to_string(k.degree) + "(" + ring_name(k.ring) + ")",
          "value", report("coh", {{"space", k.space}, {"n", k.degree}, {"ring", ring_name(k.ring)}}),
          k.group.to_string());
}

// ---- classical squares ----

std::vector<std::string> steenrod_corpus(Scale scale) {
  std::vector<std::string> out{"point", "circle",    "sphere(2)", "sphere(3)", "torus",
                               "klein", "rp2",       "rp3",       "rp2*circle", "rp2*rp2"};
  if (scale == Scale::full) out.push_back("rp(4)");
  return out;
}

bool is_product(const std::string& name) { return name.find('*') != std::string::npos; }

void adem_cases(Builder& b, const std::string& prefix, const Expr& g) {
  b.zero_class(prefix + "/adem(1,1)", sqk(1, sqk(1, g)));
  b.zero_class(prefix + "/adem(1,2)", sub(sqk(1, sqk(2, g)), sqk(3, g)));
  b.zero_class(prefix + "/adem(2,2)", sub(sqk(2, sqk(2, g)), sqk(3, sqk(1, g))));
  b.zero_class(prefix + "/adem(1,3)", sqk(1, sqk(3, g)));
  b.zero_class(prefix + "/adem(2,3)", sub(sqk(2, sqk(3, g)), op2("add", sqk(5, g), sqk(4, sqk(1, g)))));
  b.zero_class(prefix + "/adem(3,2)", sqk(3, sqk(2, g)));
  b.zero_class(prefix + "/adem(3,3)", sub(sqk(3, sqk(3, g)), sqk(5, sqk(1, g))));
}

void classical_suite(Builder& b, std::uint64_t seed, Scale scale) {
  for (const auto& name : steenrod_corpus(scale)) {
    auto x = resolve_space(name);
    int dim = x->dimension();
    for (int n = 0; n <= dim; ++n) {
      auto classes = z2_classes(x, n);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        std::string prefix = "classical-sq/" + name + "/H" + std::to_string(n) + "/" + pad(i, 2);
        Expr g = leaf(classes[i]);
        b.zero_class(prefix + "/sq0", sub(sqk(0, g), g));
        b.zero_class(prefix + "/sqn", sub(sqk(n, g), op2("cup", g, g)));
        b.zero_class(prefix + "/sq>n", sqk(n + 1, g));
        if (n >= 1) adem_cases(b, prefix, g);
      }
    }
    if (!is_product(name)) continue;
    // Cartan on pairs of product classes
    for (int p = 1; p <= dim; ++p)
      for (int q = 1; p + q <= dim; ++q) {
        auto us = z2_classes(x, p), vs = z2_classes(x, q);
        for (std::size_t i = 0; i < us.size(); ++i)
          for (std::size_t j = 0; j < vs.size(); ++j) {
            Expr u = leaf(us[i]), v = leaf(vs[j]);
            for (int k = 0; k <= p + q; ++k) {
              std::vector<Expr> terms;
              for (int a = 0; a <= k; ++a) terms.push_back(op2("cup", sqk(a, u), sqk(k - a, v)));
              b.zero_class("classical-sq/" + name + "/cartan/H" + std::to_string(p) + "." + pad(i, 2) + "xH" +
                               std::to_string(q) + "." + pad(j, 2) + "/k" + std::to_string(k),
                           sub(sqk(k, op2("cup", u, v)), make("add", terms)));
            }
          }
      }
  }

  // cochain-level cup_i coboundary identity
  CaseGenerator gen(seed);
  const std::vector<std::string> spaces{"sphere(3)", "torus", "klein", "rp2", "rp3", "rp2*circle"};
  for (std::size_t t = 0; t < 200; ++t) {
    auto x = resolve_space(spaces[gen.below(spaces.size())]);
    int dim = x->dimension();
    int p = static_cast<int>(gen.below(dim + 1)), q = static_cast<int>(gen.below(dim + 1));
    int i = static_cast<int>(gen.below(std::min(p, q) + 1));
    Expr u = leaf(gen.cochain(x, p, Ring::Z2)), v = leaf(gen.cochain(x, q, Ring::Z2));
    json pi{{"i", i}};
    Expr lhs = op1("delta", op2("cup_i", u, v, pi));
    Expr rhs;
    if (i == 0) {
      rhs = op2("add", op2("cup", op1("delta", u), v), op2("cup", u, op1("delta", v)));
    } else {
      json pm{{"i", i - 1}};
      rhs = make("add", {op2("cup_i", op1("delta", u), v, pi), op2("cup_i", u, op1("delta", v), pi),
                         op2("cup_i", u, v, pm), op2("cup_i", v, u, pm)});
    }
    b.add("classical-sq/cup_i/" + pad(t), "zero", sub(lhs, rhs), true);
  }

  // suspension stability on reduced classes
  for (const char* name : {"circle", "rp2", "rp3", "klein", "torus"}) {
    auto x = resolve_space(name);
    for (int n = 1; n <= x->dimension(); ++n) {
      auto classes = z2_classes(x, n);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        Expr g = leaf(classes[i]);
        for (int k = 0; k <= n; ++k)
          b.zero_class("classical-sq/stability/" + std::string(name) + "/H" + std::to_string(n) + "." + pad(i, 2) +
                           "/k" + std::to_string(k),
                       sub(op1("suspend", sqk(k, g)), sqk(k, op1("suspend", g))));
      }
    }
  }
}

// ---- Bocksteins ----

std::vector<std::string> coefficient_corpus(Scale scale) {
  std::vector<std::string> out{"point", "circle", "sphere(2)", "torus", "klein", "rp2", "rp3", "rp2*circle"};
  if (scale == Scale::full) out.insert(out.end(), {"rp2*rp2", "rp(4)"});
  return out;
}

void bockstein_suite(Builder& b, Scale scale) {
  for (const auto& name : coefficient_corpus(scale)) {
    auto x = resolve_space(name);
    for (int n = 0; n <= x->dimension(); ++n) {
      std::string prefix = "bockstein/" + name + "/H" + std::to_string(n);
      b.clean(prefix + "/les", report("les", {{"space", name}, {"n", n}}));
      const auto& g2 = cohomology_group(x, n, Ring::Z2).generators;
      for (std::size_t i = 0; i < g2.size(); ++i) {
        Expr g = leaf(g2[i]);
        b.zero_class(prefix + "/" + pad(i, 2) + "/rho2.beta=sq1", sub(op1("rho2", op1("beta", g)), sqk(1, g)));
        b.zero_class(prefix + "/" + pad(i, 2) + "/beta~.gamma2=beta",
                     sub(op1("beta-exp", op1("gamma2", g)), op1("beta", g)));
      }
      const auto& gz = cohomology_group(x, n, Ring::Z).generators;
      for (std::size_t i = 0; i < gz.size(); ++i) {
        Expr g = leaf(gz[i]);
        for (int k : {1, 3})
          b.zero_class(prefix + "/" + pad(i, 2) + "/rho2.sqZ" + std::to_string(k),
                       sub(op1("rho2", op1("sq-int", g, {{"k", k}})), sqk(k, op1("rho2", g))));
        b.add(prefix + "/" + pad(i, 2) + "/sqZ2-rejected", "zero-class", op1("sq-int", g, {{"k", 2}}),
              json{{"error", "even Steenrod squares do not lift"}});
      }
    }
  }
}

// ---- refined squares ----

struct Sample {
  std::string label;
  DiffCocycle x;
};

std::vector<std::pair<std::string, int>> diff_corpus() {
  return {{"point", 1}, {"circle", 1}, {"circle", 2}, {"sphere(2)", 2}, {"torus", 1}, {"torus", 2},
          {"klein", 1}, {"klein", 2},  {"rp2", 1},    {"rp2", 2},       {"rp3", 1},   {"rp3", 2},
          {"rp3", 3},   {"rp2*circle", 2}};
}

std::vector<Sample> generator_samples() {
  std::vector<Sample> out;
  for (const auto& [name, m] : diff_corpus()) {
    auto x = resolve_space(name);
    std::string tag = name + "/H" + std::to_string(m);
    if (m <= x->dimension()) {
      const auto& gz = cohomology_group(x, m, Ring::Z).generators;
      for (std::size_t i = 0; i < gz.size(); ++i)
        out.push_back({tag + "/I-gen" + pad(i, 2), from_integral_cocycle(gz[i])});
    }
    const auto& qz = cohomology_group(x, m - 1, Ring::QZ);
    for (std::size_t i = 0; i < qz.generators.size(); ++i) {
      std::vector<Rational> t(qz.generators.size(), Rational(0));
      t[i] = qz.orders[i] == 0 ? Rational(1, 2) : Rational(1);
      out.push_back({tag + "/j-gen" + pad(i, 2), j(class_from_coordinates(x, m - 1, Ring::QZ, t))});
    }
  }
  return out;
}

void refined_class_cases(Builder& b, const std::string& prefix, const DiffCocycle& d) {
  Expr x = leaf(d);
  Expr ix = op1("I", x);
  int m = d.degree();
  int top = d.complex()->dimension();
  for (int k : {1, 3}) {
    std::string p = prefix + "/sq" + std::to_string(k);
    Expr s = rsq(k, x);
    b.add(p + "/R=0", "zero", op1("R", s), true);
    b.trivial(p + "/2-torsion", op1("times", s, {{"k", 2}}));
    b.zero_class(p + "/rho-hat", sub(op1("rho2", op1("I", s)), sqk(k, op1("rho2", ix))));
    b.zero_class(p + "/I=sqZ", sub(op1("I", s), op1("sq-int", ix, {{"k", k}})));
    bool lower_vanishes = m + k - 1 > top || sq(k - 1, rho2(integration(d))).is_zero();
    if (lower_vanishes) b.trivial(p + "/finite", s);
  }
  // Adem relations Sq^a Sq^b = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c with a < 2b odd
  b.trivial(prefix + "/adem(1,1)", rsq(1, rsq(1, x)));
  b.trivial(prefix + "/adem(1,3)", rsq(1, rsq(3, x)));
  b.trivial(prefix + "/adem(3,3)", sub(rsq(3, rsq(3, x)), rsq(5, rsq(1, x))));
}

void refined_suite(Builder& b, std::uint64_t seed, Scale) {
  for (const auto& s : generator_samples()) refined_class_cases(b, "refined/gen/" + s.label, s.x);

  CaseGenerator gen(seed);
  auto corpus = diff_corpus();
  std::vector<Sample> randoms;
  for (std::size_t t = 0; t < 100; ++t) {
    auto [name, m] = corpus[t % corpus.size()];
    randoms.push_back({name + "/H" + std::to_string(m) + "/" + pad(t), gen.diffcocycle(resolve_space(name), m)});
  }
  for (std::size_t t = 0; t < randoms.size(); ++t) {
    const auto& s = randoms[t];
    refined_class_cases(b, "refined/random/" + s.label, s.x);
    // a partner on the same space and degree for linearity
    DiffCocycle y = gen.diffcocycle(s.x.complex(), s.x.degree());
    Expr ex = leaf(s.x), ey = leaf(y);
    for (int k : {1, 3})
      b.trivial("refined/random/" + s.label + "/linear" + std::to_string(k),
                sub(rsq(k, op2("add", ex, ey)), op2("add", rsq(k, ex), rsq(k, ey))));
  }

  // odd-degree classes: trapezoid comparison
  for (const auto& s : generator_samples())
    if (s.x.degree() % 2 == 1) b.clean("refined/trapezoid/" + s.label, op1("trapezoid", leaf(s.x)));
  for (const auto& s : randoms)
    if (s.x.degree() % 2 == 1) b.clean("refined/trapezoid/" + s.label, op1("trapezoid", leaf(s.x)));

  // worked examples
  auto circle = builtin("circle");
  Expr w = leaf(from_integral_cocycle(cohomology_group(circle, 1, Ring::Z).generators.at(0)));
  b.add("refined/examples/winding/holonomy", "holonomy", rsq(1, w), json::array({"1/2"}));
  b.add("refined/examples/winding/square-trivial", "trivial", op1("dd-power", w, {{"m", 2}}), true);
  auto torus = builtin("torus");
  const Cochain& t2 = cohomology_group(torus, 2, Ring::Z).generators.at(0);
  for (long k = 1; k <= 4; ++k)
    b.add("refined/examples/chern" + std::to_string(k), "trivial",
          rsq(1, leaf(from_integral_cocycle(t2.scaled(Rational(k))))), k % 2 == 0);
}

// ---- Kunneth and exactness ----

void kunneth_suite(Builder& b) {
  const std::vector<std::pair<std::string, std::string>> pairs{{"circle", "circle"}, {"rp2", "circle"}, {"rp2", "rp2"}};
  for (const auto& [x, y] : pairs)
    for (int m = 0; m <= 4; ++m)
      b.clean("kunneth/" + x + "x" + y + "/m" + std::to_string(m), report("kunneth", {{"x", x}, {"y", y}, {"m", m}}));
  for (const char* x : {"point", "circle", "rp2"})
    b.clean("kunneth/bz2/" + std::string(x), report("bz2", {{"space", x}, {"n", 1}, {"N", 4}}));
}

void exactness_suite(Builder& b, std::uint64_t seed, Scale scale) {
  std::vector<std::string> spaces{"point", "circle", "sphere(2)", "torus", "klein", "rp2", "rp3"};
  if (scale == Scale::full) spaces.push_back("rp2*circle");
  int samples = scale == Scale::tiny ? 3 : 8;
  for (const auto& name : spaces)
    for (int m = 1; m <= 4; ++m)
      b.clean("exactness/" + name + "/m" + std::to_string(m),
              report("exactness", {{"space", name}, {"m", m}, {"seed", seed}, {"samples", samples}}));
}

json select_failing(const json& v) {
  json out = json::array();
  if (v.is_object() && v.contains("items")) {
    for (const auto& item : v["items"])
      if (!item.value("pass", false)) out.push_back(item["id"]);
  } else if (v.is_object() && !v.contains("error")) {
    for (auto it = v.begin(); it != v.end(); ++it)
      if (*it != true) out.push_back(it.key());
  } else {
    return v;
  }
  return out;
}

json observe_case(const std::string& observe, const std::string& select, const Expr& e) {
  json v = verify::observe(observe, e);
  return select == "failing" ? select_failing(v) : v;
}

json fault_json() {
  auto f = active_fault();
  return f ? json(f->to_string()) : json(nullptr);
}

}  // namespace

std::vector<std::string> suite_names() { return {"linalg", "classical-sq", "bockstein", "refined", "kunneth", "exactness", "all"}; }

std::vector<Case> build_suite(const std::string& name, std::uint64_t seed, Scale scale) {
  Builder b;
  bool all = name == "all";
  bool known = all;
  auto want = [&](const char* s) {
    bool hit = all || name == s;
    known = known || name == s;
    return hit;
  };
  if (want("linalg")) linalg_suite(b, seed, scale);
  if (want("classical-sq")) classical_suite(b, seed, scale);
  if (want("bockstein")) bockstein_suite(b, scale);
  if (want("refined")) refined_suite(b, seed, scale);
  if (want("kunneth")) kunneth_suite(b);
  if (want("exactness")) exactness_suite(b, seed, scale);
  if (!known) throw UnknownResourceError("unknown suite '" + name + "'");
  return b.take();
}

json run_case(const Case& c) {
  json actual;
  try {
    actual = observe_case(c.observe, c.select, c.expr);
  } catch (const std::exception& e) {
    actual = json{{"exception", e.what()}};
  }
  bool pass = actual == c.expected;
  json out{{"id", c.id}, {"status", pass ? "pass" : "fail"}, {"expected", c.expected}, {"actual", actual}};
  if (!pass) {
    json w{{"id", c.id}, {"observe", c.observe}, {"expr", expr_to_json(c.expr)},
           {"expected", c.expected}, {"actual", actual}, {"fault", fault_json()}};
    if (!c.select.empty()) w["select"] = c.select;
    out["witness"] = w;
  }
  return out;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, Scale scale, unsigned threads) {
  std::vector<Case> cases;
  {
    // inputs and gates are prepared by the healthy engine; a fault only affects evaluation
    FaultScope healthy(std::nullopt);
    cases = build_suite(name, seed, scale);
  }
  std::vector<json> results(cases.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) results[i] = run_case(cases[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(results.begin(), results.end(), [](const json& a, const json& b) { return a["id"] < b["id"]; });
  SuiteResult out;
  for (const auto& r : results) (r["status"] == "pass" ? out.passed : out.failed)++;
  out.report = json{{"suite", name},
                    {"seed", seed},
                    {"scale", scale_name(scale)},
                    {"fault", fault_json()},
                    {"passed", out.passed},
                    {"failed", out.failed},
                    {"cases", results}};
  return out;
}

json replay_witness(const json& w) {
  for (const char* key : {"id", "observe", "expr", "expected", "actual"})
    if (!w.contains(key)) throw ParseError("witness: missing field " + std::string(key));
  std::optional<Fault> fault;
  if (w.contains("fault") && w["fault"].is_string()) fault = parse_fault(w["fault"].get<std::string>());
  FaultScope scope(fault);
  Case c{w["id"].get<std::string>(), w["observe"].get<std::string>(), expr_from_json(w["expr"]), w["expected"],
         w.value("select", std::string())};
  json fresh = run_case(c)["actual"];
  return json{{"id", c.id},
              {"expected", c.expected},
              {"actual", fresh},
              {"recorded", w["actual"]},
              {"reproduced", fresh == w["actual"] && fresh != c.expected}};
}

}  // namespace dcoh::verify
