#include "pickopt/walk.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "pickopt/errors.hpp"

namespace pickopt {

using json = nlohmann::ordered_json;

Length Walk::length(const PickingGraph& graph) const {
  Length total = 0;
  for (std::size_t e = 0; e < multiplicity.size(); ++e) {
    total += multiplicity[e] * graph.edge(static_cast<EdgeId>(e)).length;
  }
  return total;
}

std::vector<VertexId> Walk::visited(const PickingGraph& graph) const {
  std::vector<bool> seen(static_cast<std::size_t>(graph.vertex_count()), false);
  for (std::size_t e = 0; e < multiplicity.size(); ++e) {
    if (multiplicity[e] == 0) continue;
    const Edge& ed = graph.edge(static_cast<EdgeId>(e));
    seen[static_cast<std::size_t>(ed.u)] = true;
    seen[static_cast<std::size_t>(ed.v)] = true;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

bool Walk::empty() const {
  return std::all_of(multiplicity.begin(), multiplicity.end(), [](int m) { return m == 0; });
}

Walk minimal_departure(const PickingGraph& graph) {
  Walk w(graph);
  EdgeId best = -1;
  for (EdgeId e : graph.incident_edges(graph.origin())) {
    if (best < 0 || graph.edge(e).length < graph.edge(best).length ||
        (graph.edge(e).length == graph.edge(best).length && e > best)) {
      best = e;
    }
  }
  w.multiplicity[static_cast<std::size_t>(best)] = 2;
  return w;
}

std::string walk_defect(const PickingGraph& graph, const Walk& walk,
                        const std::vector<VertexId>& required, bool require_connected) {
  if (walk.multiplicity.size() != graph.edges().size()) return "edge vector has wrong size";
  std::vector<int> degree(static_cast<std::size_t>(graph.vertex_count()), 0);
  std::vector<int> parent(static_cast<std::size_t>(graph.vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (std::size_t e = 0; e < walk.multiplicity.size(); ++e) {
    const int m = walk.multiplicity[e];
    if (m < 0 || m > 2) return "multiplicity outside {0,1,2}";
    if (m == 0) continue;
    const Edge& ed = graph.edge(static_cast<EdgeId>(e));
    degree[static_cast<std::size_t>(ed.u)] += m;
    degree[static_cast<std::size_t>(ed.v)] += m;
    parent[static_cast<std::size_t>(find(ed.u))] = find(ed.v);
  }
  if (degree[0] == 0) return "walk does not leave the origin";
  const int root = find(graph.origin());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (degree[static_cast<std::size_t>(v)] % 2 != 0) {
      return "odd degree at vertex " + std::to_string(v);
    }
    if (require_connected && degree[static_cast<std::size_t>(v)] > 0 && find(v) != root) {
      return "vertex " + std::to_string(v) + " is not connected to the origin";
    }
  }
  for (VertexId v : required) {
    if (degree[static_cast<std::size_t>(v)] == 0) {
      return "required vertex " + std::to_string(v) + " is not visited";
    }
  }
  return "";
}

std::vector<bool> orient_walk(const PickingGraph& graph, const Walk& walk) {
  std::vector<bool> used(graph.arcs().size(), false);
  std::vector<bool> pending(graph.edges().size(), false);
  for (std::size_t e = 0; e < walk.multiplicity.size(); ++e) {
    if (walk.multiplicity[e] == 2) {
      used[2 * e] = true;
      used[2 * e + 1] = true;
    } else if (walk.multiplicity[e] == 1) {
      pending[e] = true;
    } else if (walk.multiplicity[e] != 0) {
      throw EncodingError("multiplicity outside {0,1,2}");
    }
  }
  for (std::size_t start = 0; start < pending.size(); ++start) {
    if (!pending[start]) continue;
    const VertexId origin = graph.edge(static_cast<EdgeId>(start)).u;
    VertexId cur = origin;
    while (true) {
      EdgeId next = -1;
      for (EdgeId e : graph.incident_edges(cur)) {
        if (pending[static_cast<std::size_t>(e)] && (next < 0 || e < next)) next = e;
      }
      if (next < 0) {
        if (cur != origin) throw EncodingError("walk has odd degree at vertex " + std::to_string(cur));
        break;
      }
      pending[static_cast<std::size_t>(next)] = false;
      const Edge& ed = graph.edge(next);
      const bool forward = ed.u == cur;
      used[static_cast<std::size_t>(2 * next + (forward ? 0 : 1))] = true;
      cur = forward ? ed.v : ed.u;
    }
  }
  return used;
}

std::vector<int> Solution::picker_of_order(int n_orders) const {
  std::vector<int> out(static_cast<std::size_t>(n_orders), 0);
  for (const Batch& b : batches) {
    for (int o : b.orders) out[static_cast<std::size_t>(o)] = b.picker;
  }
  return out;
}

void validate_solution(const Instance& instance, const PickingGraph& graph, const Solution& solution) {
  std::vector<int> count(static_cast<std::size_t>(instance.order_count()), 0);
  Length total = 0;
  for (const Batch& b : solution.batches) {
    for (int o : b.orders) {
      if (o < 0 || o >= instance.order_count()) throw ValidationError("solution: bad order index");
      ++count[static_cast<std::size_t>(o)];
    }
    if (instance.batch_size(b.orders) > instance.capacity) {
      throw ValidationError("solution: batch of picker " + std::to_string(b.picker) +
                            " exceeds capacity");
    }
    const std::string defect = walk_defect(graph, b.walk, instance.locations(b.orders));
    if (!defect.empty()) {
      throw ValidationError("solution: walk of picker " + std::to_string(b.picker) + ": " + defect);
    }
    if (b.walk.length(graph) != b.length) {
      throw ValidationError("solution: walk length mismatch for picker " + std::to_string(b.picker));
    }
    total += b.length;
  }
  for (std::size_t o = 0; o < count.size(); ++o) {
    if (count[o] != 1) {
      throw ValidationError("solution: order " + std::to_string(instance.orders[o].id) +
                            " is assigned " + std::to_string(count[o]) + " times");
    }
  }
  if (total != solution.total) throw ValidationError("solution: total does not match batch lengths");
}

std::string dump_solution(const Instance& instance, const PickingGraph& graph,
                          const Solution& solution) {
  json j;
  j["format"] = kSolutionFormat;
  j["total"] = solution.total;
  json batches = json::array();
  for (const Batch& b : solution.batches) {
    json jb;
    jb["picker"] = b.picker;
    json ids = json::array();
    for (int o : b.orders) ids.push_back(instance.orders[static_cast<std::size_t>(o)].id);
    jb["orders"] = ids;
    json walk = json::array();
    for (std::size_t e = 0; e < b.walk.multiplicity.size(); ++e) {
      if (b.walk.multiplicity[e] == 0) continue;
      const Edge& ed = graph.edge(static_cast<EdgeId>(e));
      walk.push_back({{"u", ed.u}, {"v", ed.v}, {"count", b.walk.multiplicity[e]}});
    }
    jb["walk"] = walk;
    jb["length"] = b.length;
    batches.push_back(jb);
  }
  j["batches"] = batches;
  return j.dump(2) + "\n";
}

Solution parse_solution(const Instance& instance, const PickingGraph& graph, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("solution: invalid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kSolutionFormat) {
      throw ValidationError("format: expected \"" + std::string(kSolutionFormat) + "\"");
    }
    std::map<std::int64_t, int> position;
    for (int o = 0; o < instance.order_count(); ++o) {
      position[instance.orders[static_cast<std::size_t>(o)].id] = o;
    }
    Solution s;
    s.total = j.at("total").get<Length>();
    for (const auto& jb : j.at("batches")) {
      Batch b;
      b.picker = jb.at("picker").get<int>();
      for (const auto& id : jb.at("orders")) {
        auto it = position.find(id.get<std::int64_t>());
        if (it == position.end()) throw ValidationError("batches.orders: unknown order id");
        b.orders.push_back(it->second);
      }
      std::sort(b.orders.begin(), b.orders.end());
      b.walk = Walk(graph);
      for (const auto& je : jb.at("walk")) {
        const auto arc = graph.find_arc(je.at("u").get<VertexId>(), je.at("v").get<VertexId>());
        if (!arc) throw ValidationError("batches.walk: not an edge of the graph");
        b.walk.multiplicity[static_cast<std::size_t>(graph.arc(*arc).edge)] = je.at("count").get<int>();
      }
      b.length = jb.at("length").get<Length>();
      s.batches.push_back(std::move(b));
    }
    return s;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("solution: ") + e.what());
  }
}

}  // namespace pickopt
