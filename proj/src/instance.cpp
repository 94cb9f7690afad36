#include "pickopt/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pickopt/bin_packing.hpp"
#include "pickopt/errors.hpp"

namespace pickopt {

using json = nlohmann::ordered_json;

VertexId Instance::location_of(const Pick& pick) const {
  const int n_art = layout.n_aisles * layout.cross_aisle_count();
  const int sub = pick.block * layout.n_aisles + pick.aisle;
  return n_art + sub * layout.locs_per_subaisle + pick.slot;
}

std::vector<VertexId> Instance::locations(int o) const {
  std::vector<VertexId> out;
  for (const Pick& p : orders[static_cast<std::size_t>(o)].picks) out.push_back(location_of(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> Instance::locations(const std::vector<int>& batch) const {
  std::vector<VertexId> out;
  for (int o : batch) {
    const auto lo = locations(o);
    out.insert(out.end(), lo.begin(), lo.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Instance::batch_size(const std::vector<int>& batch) const {
  int total = 0;
  for (int o : batch) total += orders[static_cast<std::size_t>(o)].size;
  return total;
}

void Instance::validate() const {
  layout.validate();
  if (capacity < 1) throw ValidationError("capacity: must be >= 1");
  if (pickers < 1) throw ValidationError("pickers: must be >= 1");
  if (orders.empty()) throw ValidationError("orders: at least one order is required");
  std::set<std::int64_t> ids;
  long long total = 0;
  for (std::size_t o = 0; o < orders.size(); ++o) {
    const Order& order = orders[o];
    const std::string path = "orders[" + std::to_string(o) + "]";
    if (!ids.insert(order.id).second) throw ValidationError(path + ".id: duplicate order id");
    if (order.size < 1) throw ValidationError(path + ".size: must be >= 1");
    if (order.size > capacity) throw ValidationError(path + ".size: order exceeds capacity");
    if (order.picks.empty()) throw ValidationError(path + ".picks: order has no picks");
    total += order.size;
    for (std::size_t k = 0; k < order.picks.size(); ++k) {
      const Pick& p = order.picks[k];
      const std::string pp = path + ".picks[" + std::to_string(k) + "]";
      if (p.aisle < 0 || p.aisle >= layout.n_aisles)
        throw ValidationError(pp + ".aisle: coordinate out of range");
      if (p.block < 0 || p.block >= layout.n_blocks)
        throw ValidationError(pp + ".block: coordinate out of range");
      if (p.slot < 0 || p.slot >= layout.locs_per_subaisle)
        throw ValidationError(pp + ".slot: coordinate out of range");
      if (p.side != 0 && p.side != 1) throw ValidationError(pp + ".side: must be 0 or 1");
    }
  }
  if (static_cast<long long>(pickers) * capacity < total) {
    throw ValidationError("pickers: total order size exceeds pickers * capacity");
  }
}

namespace {

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(path + "." + key + ": missing field");
  return *it;
}

template <typename T>
T integer(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number_integer()) throw ValidationError(path + "." + key + ": expected an integer");
  const auto raw = v.get<std::int64_t>();
  if (raw < std::numeric_limits<T>::min() || raw > std::numeric_limits<T>::max()) {
    throw ValidationError(path + "." + key + ": integer out of range");
  }
  return static_cast<T>(raw);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("instance: malformed JSON: ") + e.what());
  }
  const std::string root = "instance";
  const json& format = field(doc, "format", root);
  if (!format.is_string() || format.get<std::string>() != kInstanceFormat) {
    throw ValidationError("instance.format: expected \"" + std::string(kInstanceFormat) + "\"");
  }
  Instance inst;
  const json& lay = field(doc, "layout", root);
  const std::string lp = root + ".layout";
  inst.layout.n_aisles = integer<int>(lay, "aisles", lp);
  inst.layout.n_blocks = integer<int>(lay, "blocks", lp);
  inst.layout.locs_per_subaisle = integer<int>(lay, "locs_per_subaisle", lp);
  if (lay.contains("loc_spacing")) inst.layout.loc_spacing = integer<Length>(lay, "loc_spacing", lp);
  if (lay.contains("aisle_spacing"))
    inst.layout.aisle_spacing = integer<Length>(lay, "aisle_spacing", lp);
  inst.layout.validate();
  inst.capacity = integer<int>(doc, "capacity", root);
  const json& orders = field(doc, "orders", root);
  if (!orders.is_array()) throw ValidationError("instance.orders: expected an array");
  for (std::size_t o = 0; o < orders.size(); ++o) {
    const std::string op = root + ".orders[" + std::to_string(o) + "]";
    Order order;
    order.id = integer<std::int64_t>(orders[o], "id", op);
    order.size = integer<int>(orders[o], "size", op);
    const json& picks = field(orders[o], "picks", op);
    if (!picks.is_array()) throw ValidationError(op + ".picks: expected an array");
    for (std::size_t k = 0; k < picks.size(); ++k) {
      const std::string pp = op + ".picks[" + std::to_string(k) + "]";
      Pick p;
      p.aisle = integer<int>(picks[k], "aisle", pp);
      p.block = integer<int>(picks[k], "block", pp);
      p.slot = integer<int>(picks[k], "slot", pp);
      p.side = picks[k].contains("side") ? integer<int>(picks[k], "side", pp) : 0;
      order.picks.push_back(p);
    }
    inst.orders.push_back(std::move(order));
  }
  if (doc.contains("pickers") && !doc["pickers"].is_null()) {
    inst.pickers = integer<int>(doc, "pickers", root);
  } else {
    // validate sizes before bin packing so size errors carry their field path
    inst.pickers = std::numeric_limits<int>::max() / std::max(1, inst.capacity);
    inst.validate();
    std::vector<int> sizes;
    for (const Order& ord : inst.orders) sizes.push_back(ord.size);
    inst.pickers = bin_pack_exact(sizes, inst.capacity);
  }
  inst.validate();
  return inst;
}

std::string dump_instance(const Instance& inst) {
  json doc;
  doc["format"] = kInstanceFormat;
  doc["layout"] = {{"aisles", inst.layout.n_aisles},
                   {"blocks", inst.layout.n_blocks},
                   {"locs_per_subaisle", inst.layout.locs_per_subaisle},
                   {"loc_spacing", inst.layout.loc_spacing},
                   {"aisle_spacing", inst.layout.aisle_spacing}};
  doc["capacity"] = inst.capacity;
  doc["pickers"] = inst.pickers;
  json orders = json::array();
  for (const Order& o : inst.orders) {
    json picks = json::array();
    for (const Pick& p : o.picks) {
      picks.push_back({{"aisle", p.aisle}, {"block", p.block}, {"slot", p.slot}, {"side", p.side}});
    }
    orders.push_back({{"id", o.id}, {"size", o.size}, {"picks", std::move(picks)}});
  }
  doc["orders"] = std::move(orders);
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump_instance(instance);
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [0, n) by rejection.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

int poisson(std::mt19937_64& rng, double mean) {
  if (mean <= 0) return 0;
  const double threshold = std::exp(-mean);
  int k = 0;
  double p = unit(rng);
  while (p > threshold) {
    ++k;
    p *= unit(rng);
  }
  return k;
}

}  // namespace

Instance generate_instance(const WarehouseLayout& layout, int n_orders, int delta,
                           std::uint64_t seed, const GenerateOptions& options) {
  layout.validate();
  if (n_orders < 1) throw ValidationError("n_orders must be >= 1");
  if (delta < 1) throw ValidationError("delta must be >= 1");
  if (options.capacity < 1) throw ValidationError("capacity must be >= 1");
  if (options.pickers < 0) throw ValidationError("pickers must be >= 0");

  std::mt19937_64 rng(seed);
  const double mean = std::max(0.0, 0.4 * delta - 1.0);
  const int slots = layout.subaisle_count() * layout.locs_per_subaisle;

  Instance inst;
  inst.layout = layout;
  inst.capacity = options.capacity;
  std::vector<int> sizes;
  for (int o = 0; o < n_orders; ++o) {
    const int n_picks = std::min(slots, 1 + poisson(rng, mean));
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < n_picks) {
      const int c = static_cast<int>(below(rng, static_cast<std::uint64_t>(slots)));
      if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);
    }
    std::sort(chosen.begin(), chosen.end());
    Order order;
    order.id = o + 1;
    for (int c : chosen) {
      const int sub = c / layout.locs_per_subaisle;
      Pick p;
      p.block = sub / layout.n_aisles;
      p.aisle = sub % layout.n_aisles;
      p.slot = c % layout.locs_per_subaisle;
      p.side = static_cast<int>(below(rng, 2));
      order.picks.push_back(p);
    }
    order.size = std::clamp((n_picks + 2) / 3, 1, options.capacity);
    sizes.push_back(order.size);
    inst.orders.push_back(std::move(order));
  }
  inst.pickers = options.pickers > 0 ? options.pickers : bin_pack_exact(sizes, options.capacity);
  inst.validate();
  return inst;
}

}  // namespace pickopt
