#include "dcoh/cohomology/cohomology.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "dcoh/errors.hpp"
#include "dcoh/linalg/errors.hpp"
#include "dcoh/linalg/solve.hpp"

namespace dcoh {

namespace {

using ComplexKey = std::tuple<std::uint64_t, std::size_t, std::size_t>;

ComplexKey complex_key(const SimplicialComplex& x) { return {x.content_hash(), x.vertex_count(), x.facets().size()}; }

struct GroupData {
  CohomologyGroup group;
  // Z and Q: Smith form of delta^{n-1} (shared) and of C = delta^n U^{-1} restricted
  // to the columns past rank(delta^{n-1}); free generator j is U^{-1}(0, V_C e_{rank C + j}).
  std::shared_ptr<const SmithForm> b_snf;
  std::shared_ptr<const SmithForm> c_snf;
  std::vector<std::size_t> torsion_rows;  // rows i of U b with d_i > 1, one per torsion generator
  std::size_t free_count = 0;
  // Q/Z: Smith form of delta^n
  std::shared_ptr<const SmithForm> a_snf;
  std::vector<std::size_t> qz_torsion_cols;  // columns i of V_A used by torsion generators
};

class Memo {
 public:
  template <class Map, class Key, class F>
  auto get(Map& map, const Key& key, F compute) -> typename Map::mapped_type {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = map.find(key);
      if (it != map.end()) return it->second;
    }
    auto value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return map.emplace(key, std::move(value)).first->second;  // first insertion wins
  }
  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    snf.clear();
    groups.clear();
    descriptors.clear();
  }

  std::map<std::tuple<ComplexKey, int, int>, std::shared_ptr<const SmithForm>> snf;
  std::map<std::tuple<ComplexKey, int, int>, std::shared_ptr<const GroupData>> groups;
  std::map<std::tuple<ComplexKey, int, int>, std::shared_ptr<const GroupDescriptor>> descriptors;

 private:
  std::mutex mutex_;
};

Memo& memo() {
  static Memo m;
  return m;
}

std::mutex& disk_mutex() {
  static std::mutex m;
  return m;
}

std::optional<std::filesystem::path>& disk_dir() {
  static std::optional<std::filesystem::path> dir;
  return dir;
}

void require_cocycle(const Cochain& u) {
  if (!is_cocycle(u)) throw ValidationError("not a cocycle");
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// ---- integral and rational data -------------------------------------------

std::shared_ptr<const GroupData> build_integral(const ComplexPtr& x, int n) {
  auto data = std::make_shared<GroupData>();
  const std::size_t k = x->count(n);
  data->b_snf = coboundary_snf(x, n - 1);
  const SmithForm& sb = *data->b_snf;
  const std::size_t rb = sb.rank();
  const SparseIntMatrix& a = x->coboundary(n);

  SparseIntMatrix c(a.rows(), k - rb);
  if (a.rows() > 0 && k > rb) {
    std::vector<std::size_t> tail;
    for (std::size_t j = rb; j < k; ++j) tail.push_back(j);
    c = a.multiply(sb.u_inverse().select_columns(tail));
  }
  data->c_snf = std::make_shared<const SmithForm>(smith_normal_form(c));
  const SmithForm& sc = *data->c_snf;

  CohomologyGroup& g = data->group;
  for (std::size_t j = sc.rank(); j < sc.cols(); ++j) {
    std::vector<Integer> xj = sc.v_column(j);
    std::vector<Integer> z(k, Integer(0));
    for (std::size_t i = 0; i < xj.size(); ++i) z[rb + i] = xj[i];
    sb.apply_u_inverse(z);
    g.generators.emplace_back(x, n, Ring::Z, to_rational(z));
    g.orders.emplace_back(0);
  }
  data->free_count = g.generators.size();
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < rb; ++i) {
    const Integer& d = sb.diagonal()[i];
    if (d == 1) continue;
    g.generators.emplace_back(x, n, Ring::Z, to_rational(sb.u_inverse_column(i)));
    g.orders.push_back(d);
    data->torsion_rows.push_back(i);
    torsion.push_back(d);
  }
  g.descriptor.free_rank = data->free_count;
  g.descriptor.invariant_factors = torsion;
  return data;
}

std::shared_ptr<const GroupData> build_rational(const ComplexPtr& x, int n, const GroupData& z) {
  auto data = std::make_shared<GroupData>();
  data->b_snf = z.b_snf;
  data->c_snf = z.c_snf;
  data->free_count = z.free_count;
  for (std::size_t j = 0; j < z.free_count; ++j) {
    data->group.generators.push_back(change_ring(z.group.generators[j], Ring::Q));
    data->group.orders.emplace_back(0);
  }
  data->group.descriptor.free_rank = z.free_count;
  (void)x;
  (void)n;
  return data;
}

// Free coordinates of a rational cocycle u with respect to the free generators.
template <class T>
std::vector<T> free_coordinates(const GroupData& d, std::vector<T> c) {
  const std::size_t rb = d.b_snf->rank();
  std::vector<T> tail(c.begin() + static_cast<std::ptrdiff_t>(rb), c.end());
  d.c_snf->apply_v_inverse(tail);
  std::vector<T> out;
  for (std::size_t j = d.c_snf->rank(); j < tail.size(); ++j) out.push_back(tail[j]);
  return out;
}

// ---- mod 2 ----------------------------------------------------------------

std::vector<Bit> to_bits(const Cochain& u) {
  std::vector<Bit> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = Bit(mpz_odd_p(u[i].get_num_mpz_t()) != 0);
  return out;
}

SparseIntMatrix reduce_mod2(const SparseIntMatrix& m) {
  std::vector<MatrixEntry> entries;
  for (auto& e : m.entries())
    if (mpz_odd_p(e.value.get_mpz_t())) entries.push_back({e.row, e.col, Integer(1)});
  return SparseIntMatrix::from_entries(m.rows(), m.cols(), std::move(entries));
}

// Same scheme as over Z with every step taken mod 2. The integral form of
// delta^{n-1} serves mod 2 as well: U B V = D stays diagonal mod 2 and its
// odd entries lead.
std::shared_ptr<const GroupData> build_mod2(const ComplexPtr& x, int n) {
  auto data = std::make_shared<GroupData>();
  const std::size_t k = x->count(n);
  data->b_snf = coboundary_snf(x, n - 1);
  const SmithForm& sb = *data->b_snf;
  const std::size_t rb = sb.rank_mod2();
  const SparseIntMatrix& a = x->coboundary(n);
  SparseIntMatrix c(a.rows(), k - rb);
  if (a.rows() > 0 && k > rb) {
    std::vector<std::size_t> tail;
    for (std::size_t j = rb; j < k; ++j) tail.push_back(j);
    c = reduce_mod2(a.multiply(sb.u_inverse_mod2().select_columns(tail)));
  }
  data->c_snf = std::make_shared<const SmithForm>(smith_normal_form_mod2(c));
  const SmithForm& sc = *data->c_snf;
  CohomologyGroup& g = data->group;
  for (std::size_t j = sc.rank(); j < sc.cols(); ++j) {
    std::vector<Bit> xj(sc.cols());
    xj[j] = Bit(true);
    sc.apply_v(xj);
    std::vector<Bit> z(k);
    for (std::size_t i = 0; i < xj.size(); ++i) z[rb + i] = xj[i];
    sb.apply_u_inverse(z);
    std::vector<Rational> values(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
      if (z[i].value) values[i] = 1;
    g.generators.emplace_back(x, n, Ring::Z2, std::move(values));
    g.orders.emplace_back(2);
  }
  data->free_count = g.generators.size();
  g.descriptor.invariant_factors.assign(g.generators.size(), Integer(2));
  return data;
}

// U_B u restricted past the rank of delta^{n-1}; zero iff u is a coboundary.
std::vector<Bit> mod2_tail(const GroupData& d, const Cochain& u) {
  std::vector<Bit> c = to_bits(u);
  d.b_snf->apply_u(c);
  return std::vector<Bit>(c.begin() + static_cast<std::ptrdiff_t>(d.b_snf->rank_mod2()), c.end());
}

// ---- Q/Z -------------------------------------------------------------------

std::shared_ptr<const GroupData> build_qz(const ComplexPtr& x, int n, const GroupData& z) {
  auto data = std::make_shared<GroupData>();
  data->b_snf = z.b_snf;
  data->c_snf = z.c_snf;
  data->free_count = z.free_count;
  data->a_snf = coboundary_snf(x, n);
  const SmithForm& sa = *data->a_snf;
  CohomologyGroup& g = data->group;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < sa.rank(); ++i) {
    const Integer& d = sa.diagonal()[i];
    if (d == 1) continue;
    auto col = sa.v_column(i);
    std::vector<Rational> values;
    for (auto& e : col) values.emplace_back(e, d);
    for (auto& v : values) v.canonicalize();
    g.generators.emplace_back(x, n, Ring::QZ, std::move(values));
    g.orders.push_back(d);
    data->qz_torsion_cols.push_back(i);
    torsion.push_back(d);
  }
  for (std::size_t j = 0; j < z.free_count; ++j) {
    g.generators.push_back(change_ring(z.group.generators[j], Ring::Q));
    g.orders.emplace_back(0);
  }
  g.descriptor.invariant_factors = torsion;
  g.descriptor.divisible_rank = z.free_count;
  return data;
}

std::shared_ptr<const GroupData> group_data(const ComplexPtr& x, int n, Ring ring) {
  auto key = std::make_tuple(complex_key(*x), n, static_cast<int>(ring));
  return memo().get(memo().groups, key, [&]() -> std::shared_ptr<const GroupData> {
    switch (ring) {
      case Ring::Z: return build_integral(x, n);
      case Ring::Q: return build_rational(x, n, *group_data(x, n, Ring::Z));
      case Ring::Z2: return build_mod2(x, n);
      case Ring::QZ: return build_qz(x, n, *group_data(x, n, Ring::Z));
    }
    throw std::logic_error("unknown ring");
  });
}

// ---- disk cache ------------------------------------------------------------

std::filesystem::path cache_file(const SimplicialComplex& x, int n, Ring ring) {
  return *disk_dir() / (x.hash_hex() + "-" + std::to_string(x.vertex_count()) + "-" + std::to_string(n) + "-" +
                        ring_name(ring) + ".json");
}

std::optional<GroupDescriptor> disk_load(const SimplicialComplex& x, int n, Ring ring) {
  std::lock_guard<std::mutex> lock(disk_mutex());
  if (!disk_dir()) return std::nullopt;
  std::ifstream in(cache_file(x, n, ring));
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("hash").get<std::string>() != x.hash_hex() || j.at("degree").get<int>() != n ||
        j.at("ring").get<std::string>() != ring_name(ring))
      return std::nullopt;
    GroupDescriptor g;
    g.free_rank = j.at("free_rank").get<std::size_t>();
    g.divisible_rank = j.at("divisible_rank").get<std::size_t>();
    for (const auto& d : j.at("invariant_factors")) g.invariant_factors.emplace_back(d.get<std::string>());
    return g;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void disk_store(const SimplicialComplex& x, int n, Ring ring, const GroupDescriptor& g) {
  std::lock_guard<std::mutex> lock(disk_mutex());
  if (!disk_dir()) return;
  std::error_code ec;
  std::filesystem::create_directories(*disk_dir(), ec);
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& d : g.invariant_factors) factors.push_back(d.get_str());
  nlohmann::json j{{"hash", x.hash_hex()},       {"degree", n},
                   {"ring", ring_name(ring)},    {"free_rank", g.free_rank},
                   {"invariant_factors", factors}, {"divisible_rank", g.divisible_rank}};
  auto path = cache_file(x, n, ring);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
}

GroupDescriptor compute_descriptor(const ComplexPtr& x, int n, Ring ring) {
  const std::size_t k = x->count(n);
  switch (ring) {
    case Ring::Z: {
      auto sb = coboundary_snf(x, n - 1);
      std::vector<Integer> torsion;
      for (const auto& d : sb->diagonal())
        if (d > 1) torsion.push_back(d);
      GroupDescriptor g;
      g.free_rank = k - sb->rank() - coboundary_rank(x, n);
      g.invariant_factors = torsion;
      return g;
    }
    case Ring::Q:
      return free_group(k - coboundary_rank(x, n - 1) - coboundary_rank(x, n));
    case Ring::QZ: {
      auto sa = coboundary_snf(x, n);
      std::vector<Integer> torsion;
      for (const auto& d : sa->diagonal())
        if (d > 1) torsion.push_back(d);
      GroupDescriptor g;
      g.invariant_factors = torsion;
      g.divisible_rank = k - sa->rank() - coboundary_rank(x, n - 1);
      return g;
    }
    case Ring::Z2: {
      std::size_t dim = k - coboundary_snf(x, n)->rank_mod2() - coboundary_snf(x, n - 1)->rank_mod2();
      GroupDescriptor g;
      g.invariant_factors.assign(dim, Integer(2));
      return g;
    }
  }
  throw std::logic_error("unknown ring");
}

}  // namespace

std::shared_ptr<const SmithForm> coboundary_snf(const ComplexPtr& x, int n) {
  return memo().get(memo().snf, std::make_tuple(complex_key(*x), n, 0), [&]() {
    return std::make_shared<const SmithForm>(smith_normal_form(x->coboundary(n)));
  });
}

std::size_t coboundary_rank(const ComplexPtr& x, int n) { return coboundary_snf(x, n)->rank(); }

GroupDescriptor cohomology_descriptor(const ComplexPtr& x, int n, Ring ring) {
  if (n < 0) throw DegreeError("negative cohomology degree");
  auto key = std::make_tuple(complex_key(*x), n, static_cast<int>(ring));
  auto g = memo().get(memo().descriptors, key, [&]() -> std::shared_ptr<const GroupDescriptor> {
    if (auto cached = disk_load(*x, n, ring)) return std::make_shared<const GroupDescriptor>(*cached);
    auto computed = compute_descriptor(x, n, ring);
    disk_store(*x, n, ring, computed);
    return std::make_shared<const GroupDescriptor>(computed);
  });
  return *g;
}

const CohomologyGroup& cohomology_group(const ComplexPtr& x, int n, Ring ring) {
  if (n < 0) throw DegreeError("negative cohomology degree");
  return group_data(x, n, ring)->group;
}

std::vector<Rational> class_coordinates(const Cochain& u) {
  require_cocycle(u);
  const ComplexPtr& x = u.complex();
  const int n = u.degree();
  auto data = group_data(x, n, u.ring());
  std::vector<Rational> out;
  switch (u.ring()) {
    case Ring::Z: {
      std::vector<Integer> c = u.integer_values();
      data->b_snf->apply_u(c);
      for (auto& f : free_coordinates(*data, c)) out.emplace_back(f);
      for (std::size_t t = 0; t < data->torsion_rows.size(); ++t) {
        std::size_t i = data->torsion_rows[t];
        out.emplace_back(mod_positive(c[i], data->b_snf->diagonal()[i]));
      }
      return out;
    }
    case Ring::Q: {
      std::vector<Rational> c = u.values();
      data->b_snf->apply_u(c);
      return free_coordinates(*data, c);
    }
    case Ring::Z2: {
      std::vector<Bit> tail = mod2_tail(*data, u);
      data->c_snf->apply_v_inverse(tail);
      for (std::size_t j = data->c_snf->rank(); j < tail.size(); ++j) out.emplace_back(tail[j].value ? 1 : 0);
      return out;
    }
    case Ring::QZ: {
      const SmithForm& sa = *data->a_snf;
      std::vector<Rational> y = u.values();  // lift in [0,1)
      sa.apply_v_inverse(y);
      for (std::size_t t = 0; t < data->qz_torsion_cols.size(); ++t) {
        std::size_t i = data->qz_torsion_cols[t];
        Rational a = y[i] * Rational(sa.diagonal()[i]);
        out.emplace_back(mod_positive(a.get_num(), sa.diagonal()[i]));
      }
      // drop the torsion directions; what is left is a rational cocycle
      for (std::size_t i = 0; i < sa.rank(); ++i) y[i] = 0;
      sa.apply_v(y);
      data->b_snf->apply_u(y);
      for (auto& f : free_coordinates(*data, y)) out.push_back(fractional_part(f));
      return out;
    }
  }
  return out;
}

Cochain class_from_coordinates(const ComplexPtr& x, int n, Ring ring, const std::vector<Rational>& coordinates) {
  const auto& g = cohomology_group(x, n, ring);
  if (coordinates.size() != g.generators.size())
    throw DimensionMismatch("expected " + std::to_string(g.generators.size()) + " coordinates");
  Cochain out(x, n, ring);
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    if (coordinates[i] == 0) continue;
    if (ring == Ring::QZ && g.orders[i] == 0) {
      out += Cochain(x, n, Ring::QZ, g.generators[i].scaled(coordinates[i]).values());
    } else {
      out += g.generators[i].scaled(coordinates[i]);
    }
  }
  return out;
}

bool is_coboundary(const Cochain& u) {
  require_cocycle(u);
  const ComplexPtr& x = u.complex();
  const int n = u.degree();
  switch (u.ring()) {
    case Ring::Z:
      return solve_integer(*coboundary_snf(x, n - 1), u.integer_values()).has_value();
    case Ring::Q:
      return solve_rational(*coboundary_snf(x, n - 1), u.values()).has_value();
    case Ring::Z2: {
      for (const Bit& b : mod2_tail(*group_data(x, n, Ring::Z2), u))
        if (b.value) return false;
      return true;
    }
    case Ring::QZ: {
      // lift to Q; trivial iff the lift lies in Z^k + delta(Q)
      LatticeMembership lm(SparseIntMatrix::identity(u.size()), coboundary_snf(x, n - 1));
      return lm.contains(u.values());
    }
  }
  return false;
}

bool is_cohomologous(const Cochain& u, const Cochain& v) {
  require_cocycle(u);
  require_cocycle(v);
  return is_coboundary(u - v);
}

std::optional<Cochain> coboundary_primitive(const Cochain& u) {
  const ComplexPtr& x = u.complex();
  const int n = u.degree();
  if (n == 0) {
    if (u.is_zero()) return Cochain(x, -1, u.ring());
    return std::nullopt;
  }
  switch (u.ring()) {
    case Ring::Z: {
      auto s = solve_integer(*coboundary_snf(x, n - 1), u.integer_values());
      if (!s) return std::nullopt;
      return Cochain(x, n - 1, Ring::Z, to_rational(*s));
    }
    case Ring::Q: {
      auto s = solve_rational(*coboundary_snf(x, n - 1), u.values());
      if (!s) return std::nullopt;
      return Cochain(x, n - 1, Ring::Q, *s);
    }
    default:
      throw RingMismatch("primitives are computed over Z or Q only");
  }
}

std::vector<Cochain> integral_cocycle_basis(const ComplexPtr& x, int n) {
  std::vector<Cochain> out;
  for (auto& v : integer_kernel_basis(*coboundary_snf(x, n))) out.emplace_back(x, n, Ring::Z, to_rational(v));
  return out;
}

void set_disk_cache(std::optional<std::filesystem::path> directory) {
  std::lock_guard<std::mutex> lock(disk_mutex());
  disk_dir() = std::move(directory);
}

std::optional<std::filesystem::path> disk_cache() {
  std::lock_guard<std::mutex> lock(disk_mutex());
  return disk_dir();
}

std::filesystem::path default_cache_directory() {
  if (const char* env = std::getenv("DIFFCOH_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "dcoh";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "dcoh";
  return std::filesystem::temp_directory_path() / "dcoh-cache";
}

void clear_memory_cache() { memo().clear(); }

CohomologyClass::CohomologyClass(Cochain representative) : rep_(std::move(representative)) { require_cocycle(rep_); }

}  // namespace dcoh
