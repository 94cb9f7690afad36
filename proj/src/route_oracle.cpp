#include "pickopt/route_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "pickopt/errors.hpp"

namespace pickopt {

namespace {

bool all_equal(const std::vector<int>& m, const Subaisle& sub, int value) {
  return std::all_of(sub.edges.begin(), sub.edges.end(),
                     [&](EdgeId e) { return m[static_cast<std::size_t>(e)] == value; });
}

// Chain patterns over L+1 edges: all-1, all-2, and a top run of 2s followed by
// a bottom run of 2s with at least one 0 between them.
std::vector<std::vector<int>> chain_patterns(int n_edges, bool no_reversal) {
  std::vector<std::vector<int>> out;
  out.emplace_back(n_edges, 1);
  out.emplace_back(n_edges, 2);
  if (no_reversal) {
    out.emplace_back(n_edges, 0);
  } else {
    for (int p = 0; p < n_edges; ++p) {
      for (int q = 0; p + q < n_edges; ++q) {
        std::vector<int> m(static_cast<std::size_t>(n_edges), 0);
        for (int k = 0; k < p; ++k) m[static_cast<std::size_t>(k)] = 2;
        for (int k = 0; k < q; ++k) m[static_cast<std::size_t>(n_edges - 1 - k)] = 2;
        out.push_back(std::move(m));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Unit {
  bool chain = false;
  int subaisle = -1;
  EdgeId first_edge = 0;
  int n_edges = 1;
  std::vector<std::vector<int>> options;  // multiplicity vectors, lex order
  std::vector<Length> option_cost;
  Length min_cost = 0;                    // cheapest option
  std::vector<VertexId> check_parity;     // vertices whose last incident edge is in this unit
};

class Enumerator {
 public:
  Enumerator(const PickingGraph& g, const std::vector<VertexId>& required, const RouteRestriction& r)
      : g_(g), restriction_(r), required_(required) {
    const int n_edges = static_cast<int>(g.edges().size());
    is_required_.assign(static_cast<std::size_t>(g.vertex_count()), false);
    for (VertexId v : required) is_required_[static_cast<std::size_t>(v)] = true;
    std::vector<int> unit_of_edge(static_cast<std::size_t>(n_edges), -1);
    EdgeId e = 0;
    while (e < n_edges) {
      Unit u;
      const Edge& ed = g.edge(e);
      if (ed.kind == Edge::Kind::vertical) {
        const Subaisle& sub = g.subaisle(ed.subaisle);
        u.chain = true;
        u.subaisle = sub.index;
        u.first_edge = e;
        u.n_edges = static_cast<int>(sub.edges.size());
        const bool forbid_all2 =
            (r.single_traversal || (r.single_traversal_picked && has_required(sub))) &&
            !(g.layout().n_blocks == 2 && sub.index == 0);
        for (auto& m : chain_patterns(u.n_edges, r.no_reversal)) {
          if (forbid_all2 && m.front() == 2 && m.back() == 2 &&
              std::all_of(m.begin(), m.end(), [](int x) { return x == 2; })) {
            continue;
          }
          if (!covers(sub, m)) continue;
          u.options.push_back(std::move(m));
        }
      } else {
        u.first_edge = e;
        u.n_edges = 1;
        u.options = {{0}, {1}, {2}};
      }
      for (const auto& m : u.options) {
        Length c = 0;
        for (int k = 0; k < u.n_edges; ++k) c += m[static_cast<std::size_t>(k)] * g.edge(e + k).length;
        u.option_cost.push_back(c);
      }
      u.min_cost = *std::min_element(u.option_cost.begin(), u.option_cost.end());
      for (int k = 0; k < u.n_edges; ++k) unit_of_edge[static_cast<std::size_t>(e + k)] = static_cast<int>(units_.size());
      e += u.n_edges;
      units_.push_back(std::move(u));
    }
    for (VertexId v = 0; v < g.artificial_count(); ++v) {
      int last = -1;
      for (EdgeId ie : g.incident_edges(v)) last = std::max(last, unit_of_edge[static_cast<std::size_t>(ie)]);
      if (last >= 0) units_[static_cast<std::size_t>(last)].check_parity.push_back(v);
    }
    suffix_min_.assign(units_.size() + 1, 0);
    for (std::size_t k = units_.size(); k-- > 0;) suffix_min_[k] = suffix_min_[k + 1] + units_[k].min_cost;
    m_.assign(static_cast<std::size_t>(n_edges), 0);
    degree_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  }

  Walk run(Length upper_bound) {
    best_cost_ = upper_bound + 1;
    search(0, 0);
    if (best_.empty()) throw std::logic_error("route oracle found no walk");
    Walk w;
    w.multiplicity = best_;
    return w;
  }

 private:
  bool has_required(const Subaisle& sub) const {
    return std::any_of(sub.locations.begin(), sub.locations.end(),
                       [&](VertexId v) { return is_required_[static_cast<std::size_t>(v)]; });
  }

  bool covers(const Subaisle& sub, const std::vector<int>& m) const {
    for (std::size_t k = 0; k < sub.locations.size(); ++k) {
      if (is_required_[static_cast<std::size_t>(sub.locations[k])] && m[k] == 0 && m[k + 1] == 0) {
        return false;
      }
    }
    return true;
  }

  void apply(const Unit& u, const std::vector<int>& m, int sign) {
    for (int k = 0; k < u.n_edges; ++k) {
      const EdgeId e = u.first_edge + k;
      const int val = m[static_cast<std::size_t>(k)];
      m_[static_cast<std::size_t>(e)] = sign > 0 ? val : 0;
      const Edge& ed = g_.edge(e);
      degree_[static_cast<std::size_t>(ed.u)] += sign * val;
      degree_[static_cast<std::size_t>(ed.v)] += sign * val;
    }
  }

  void search(std::size_t k, Length cost) {
    if (cost + suffix_min_[k] >= best_cost_) return;
    if (k == units_.size()) {
      if (leaf_ok()) {
        best_cost_ = cost;
        best_ = m_;
      }
      return;
    }
    const Unit& u = units_[k];
    for (std::size_t opt = 0; opt < u.options.size(); ++opt) {
      const Length c = cost + u.option_cost[opt];
      if (c + suffix_min_[k + 1] >= best_cost_) continue;
      apply(u, u.options[opt], +1);
      bool parity = true;
      for (VertexId v : u.check_parity) {
        if (degree_[static_cast<std::size_t>(v)] % 2 != 0) {
          parity = false;
          break;
        }
      }
      if (parity) search(k + 1, c);
      apply(u, u.options[opt], -1);
    }
  }

  bool leaf_ok() const {
    if (degree_[0] == 0) return false;
    const int n = g_.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (std::size_t e = 0; e < m_.size(); ++e) {
      if (m_[e] == 0) continue;
      const Edge& ed = g_.edge(static_cast<EdgeId>(e));
      parent[static_cast<std::size_t>(find(ed.u))] = find(ed.v);
    }
    const int root = find(0);
    for (VertexId v = 0; v < n; ++v) {
      if (degree_[static_cast<std::size_t>(v)] > 0 && find(v) != root) return false;
    }
    if (restriction_.artificial_vertex_reversal) {
      Walk w;
      w.multiplicity = m_;
      RouteRestriction only_avr;
      only_avr.artificial_vertex_reversal = true;
      if (!satisfies_restriction(g_, w, required_, only_avr)) return false;
    }
    return true;
  }

  const PickingGraph& g_;
  RouteRestriction restriction_;
  std::vector<VertexId> required_;
  std::vector<bool> is_required_;
  std::vector<Unit> units_;
  std::vector<Length> suffix_min_;
  std::vector<int> m_;
  std::vector<int> degree_;
  Length best_cost_ = 0;
  std::vector<int> best_;
};

// Length of a feasible walk: every edge on the shortest-path tree branches to
// the required vertices, doubled (or the cheapest out-and-back when empty).
Length tree_upper_bound(const PickingGraph& g, const std::vector<VertexId>& required) {
  if (required.empty()) {
    Length best = std::numeric_limits<Length>::max();
    for (EdgeId e : g.incident_edges(g.origin())) best = std::min(best, 2 * g.edge(e).length);
    return best;
  }
  const auto dist = dijkstra(g, g.origin());
  std::vector<bool> in_tree(g.edges().size(), false);
  for (VertexId v : required) {
    VertexId cur = v;
    while (cur != g.origin()) {
      for (ArcId a : g.in_arcs(cur)) {
        const Arc& arc = g.arc(a);
        if (dist[static_cast<std::size_t>(arc.tail)] + arc.length == dist[static_cast<std::size_t>(cur)]) {
          in_tree[static_cast<std::size_t>(arc.edge)] = true;
          cur = arc.tail;
          break;
        }
      }
    }
  }
  Length total = 0;
  for (std::size_t e = 0; e < in_tree.size(); ++e) {
    if (in_tree[e]) total += 2 * g.edge(static_cast<EdgeId>(e)).length;
  }
  return total;
}

}  // namespace

bool satisfies_restriction(const PickingGraph& g, const Walk& walk,
                           const std::vector<VertexId>& required, const RouteRestriction& r) {
  const auto& m = walk.multiplicity;
  std::vector<bool> is_required(static_cast<std::size_t>(g.vertex_count()), false);
  for (VertexId v : required) is_required[static_cast<std::size_t>(v)] = true;
  for (const Subaisle& sub : g.subaisles()) {
    const bool exempt = g.layout().n_blocks == 2 && sub.index == 0;
    const bool all2 = all_equal(m, sub, 2);
    if (r.single_traversal && all2 && !exempt) return false;
    if (r.single_traversal_picked && all2 && !exempt &&
        std::any_of(sub.locations.begin(), sub.locations.end(),
                    [&](VertexId v) { return is_required[static_cast<std::size_t>(v)]; })) {
      return false;
    }
    if (r.no_reversal && !all_equal(m, sub, 0) && !all_equal(m, sub, 1) && !all2) return false;
    if (r.artificial_vertex_reversal) {
      auto turns_back = [&](VertexId end, EdgeId chain_edge) {
        if (m[static_cast<std::size_t>(chain_edge)] != 2) return false;
        for (EdgeId e : g.incident_edges(end)) {
          if (e != chain_edge && m[static_cast<std::size_t>(e)] > 0) return false;
        }
        return true;
      };
      if (turns_back(sub.bottom, sub.edges.back())) return false;
      if (sub.block >= 1 && turns_back(sub.top, sub.edges.front())) return false;
    }
  }
  return true;
}

Walk route_oracle(const PickingGraph& graph, const std::vector<VertexId>& required,
                  const RouteRestriction& restriction) {
  const int n_edges = static_cast<int>(graph.edges().size());
  if (n_edges > kOracleMaxEdges) {
    throw ResourceLimitError("route oracle is limited to " + std::to_string(kOracleMaxEdges) +
                             " edges, graph has " + std::to_string(n_edges));
  }
  const bool restricted = restriction.no_reversal || restriction.single_traversal ||
                          restriction.single_traversal_picked ||
                          restriction.artificial_vertex_reversal;
  if (!restricted) {
    return Enumerator(graph, required, restriction).run(tree_upper_bound(graph, required));
  }
  // The unrestricted lex-smallest optimum is also the restricted one when it
  // happens to respect the restriction.
  Walk free_walk = route_oracle(graph, required);
  if (satisfies_restriction(graph, free_walk, required, restriction)) return free_walk;
  return Enumerator(graph, required, restriction).run(std::numeric_limits<Length>::max() / 4);
}

}  // namespace pickopt
