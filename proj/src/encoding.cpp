#include "pickopt/encoding.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "pickopt/errors.hpp"

namespace pickopt {

namespace {

struct PickerArcs {
  std::vector<bool> arc;      // over G arcs
  std::vector<bool> gamma;    // over reduced arcs
  std::vector<bool> visited;  // over V
};

PickerArcs picker_arcs(const PickingGraph& g, const Walk& walk) {
  PickerArcs p;
  p.arc = orient_walk(g, walk);
  p.visited.assign(static_cast<std::size_t>(g.vertex_count()), false);
  for (VertexId v : walk.visited(g)) p.visited[static_cast<std::size_t>(v)] = true;
  p.gamma.assign(g.reduced_arcs().size(), false);
  for (std::size_t a = 0; a < g.reduced_arcs().size(); ++a) {
    const Arc& ra = g.reduced_arc(static_cast<ArcId>(a));
    const auto direct = g.find_arc(ra.tail, ra.head);
    if (direct && g.edge(g.arc(*direct).edge).kind == Edge::Kind::horizontal) {
      p.gamma[a] = p.arc[static_cast<std::size_t>(*direct)];
      continue;
    }
    const Subaisle& sub = g.subaisle(g.reduced_edges()[static_cast<std::size_t>(ra.edge)].subaisle);
    auto chain = sub.chain();
    if (ra.tail != chain.front()) std::reverse(chain.begin(), chain.end());
    bool all = true;
    for (std::size_t k = 1; k < chain.size() && all; ++k) {
      all = p.arc[static_cast<std::size_t>(g.arc_between(chain[k - 1], chain[k]))];
    }
    p.gamma[a] = all;
  }
  return p;
}

void put_common(VariableAssignment& a, const Instance& inst, const PickingGraph& g,
                const Solution& sol, const std::vector<PickerArcs>& arcs) {
  for (const Batch& b : sol.batches) {
    const int t = b.picker;
    const PickerArcs& p = arcs[static_cast<std::size_t>(t - 1)];
    for (std::size_t k = 0; k < p.arc.size(); ++k) {
      if (!p.arc[k]) continue;
      const Arc& arc = g.arc(static_cast<ArcId>(k));
      a.set(names::x(t, arc.tail, arc.head), 1);
    }
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
      if (p.visited[static_cast<std::size_t>(v)]) a.set(names::y(t, v), 1);
    }
    for (int o : b.orders) a.set(names::z(o + 1, t), 1);
  }
  (void)inst;
}

void put_subaisle(VariableAssignment& a, const PickingGraph& g, const Solution& sol,
                  const std::vector<PickerArcs>& arcs) {
  for (const Batch& b : sol.batches) {
    const int t = b.picker;
    const PickerArcs& p = arcs[static_cast<std::size_t>(t - 1)];
    auto used = [&](VertexId u, VertexId v) {
      return p.arc[static_cast<std::size_t>(g.arc_between(u, v))];
    };
    for (const Subaisle& sub : g.subaisles()) {
      const auto chain = sub.chain();
      bool run = true;
      for (std::size_t k = 1; k + 1 < chain.size(); ++k) {
        run = run && used(chain[k - 1], chain[k]);
        if (run) a.set(names::alpha(t, chain[k]), 1);
      }
      run = true;
      for (std::size_t k = chain.size() - 2; k >= 1; --k) {
        run = run && used(chain[k + 1], chain[k]);
        if (run) a.set(names::beta(t, chain[k]), 1);
      }
    }
  }
}

void put_gamma(VariableAssignment& a, const PickingGraph& g, const Solution& sol,
               const std::vector<PickerArcs>& arcs) {
  for (const Batch& b : sol.batches) {
    const int t = b.picker;
    const PickerArcs& p = arcs[static_cast<std::size_t>(t - 1)];
    for (std::size_t k = 0; k < p.gamma.size(); ++k) {
      if (!p.gamma[k]) continue;
      const Arc& arc = g.reduced_arc(static_cast<ArcId>(k));
      a.set(names::gamma(t, arc.tail, arc.head), 1);
    }
  }
}

std::vector<PickerArcs> all_picker_arcs(const Instance& inst, const PickingGraph& g,
                                        const Solution& sol) {
  if (static_cast<int>(sol.batches.size()) != inst.pickers) {
    throw EncodingError("solution needs exactly one batch per picker");
  }
  std::vector<PickerArcs> out(sol.batches.size());
  for (const Batch& b : sol.batches) {
    if (b.picker < 1 || b.picker > inst.pickers) throw EncodingError("picker index out of range");
    // Closed but disconnected walks are accepted so that separation can be
    // exercised on relaxed candidates.
    const std::string defect = walk_defect(g, b.walk, inst.locations(b.orders), false);
    if (!defect.empty()) throw EncodingError("picker " + std::to_string(b.picker) + ": " + defect);
    out[static_cast<std::size_t>(b.picker - 1)] = picker_arcs(g, b.walk);
  }
  return out;
}

bool covers_all(const std::vector<int>& edges_used, const std::vector<int>& required_edges) {
  return std::includes(edges_used.begin(), edges_used.end(), required_edges.begin(),
                       required_edges.end());
}

struct TourSearch {
  struct TEdge {
    int u, v;
    Length length;
    int aux_id;  // -1: parallel edge
  };
  const AuxiliaryGraph& aux;
  std::vector<TEdge> edges;
  std::vector<std::vector<int>> incident;
  std::vector<int> required;  // aux edge ids, sorted
  std::vector<bool> in_south;
  bool bound = false;
  bool collect_all = false;
  std::vector<TspTour> found;
  std::set<std::pair<std::vector<int>, bool>> seen;
  Length best = std::numeric_limits<Length>::max();

  std::vector<bool> used_edge, used_vertex;
  std::vector<int> path;

  TourSearch(const AuxiliaryGraph& a, const std::vector<int>& subaisles, bool with_bound, bool all)
      : aux(a), bound(with_bound), collect_all(all) {
    for (std::size_t e = 0; e < a.edges().size(); ++e) {
      const AuxEdge& ed = a.edge(static_cast<int>(e));
      edges.push_back({ed.u, ed.v, ed.length, static_cast<int>(e)});
    }
    if (a.has_parallel_edge()) {
      edges.push_back({a.origin(), a.edge(a.subaisle_edge(0)).v, a.parallel_edge_length(), -1});
    }
    incident.assign(static_cast<std::size_t>(a.vertex_count()), {});
    for (std::size_t e = 0; e < edges.size(); ++e) {
      incident[static_cast<std::size_t>(edges[e].u)].push_back(static_cast<int>(e));
      incident[static_cast<std::size_t>(edges[e].v)].push_back(static_cast<int>(e));
    }
    for (int i : subaisles) required.push_back(a.subaisle_edge(i));
    std::sort(required.begin(), required.end());
    required.erase(std::unique(required.begin(), required.end()), required.end());
    in_south.assign(static_cast<std::size_t>(a.vertex_count()), false);
    if (a.variant() == AuxVariant::two_block) {
      for (int v : a.south_set()) in_south[static_cast<std::size_t>(v)] = true;
    }
    used_edge.assign(edges.size(), false);
    used_vertex.assign(static_cast<std::size_t>(a.vertex_count()), false);
  }

  bool departs(const std::vector<int>& tour_edges) const {
    if (aux.variant() == AuxVariant::single_block) {
      const int a = aux.subaisle_edge(0);
      const int b = aux.vertex_count() > 2 ? aux.star_edge(1) : -1;
      for (int e : tour_edges) {
        if (e == a || (b >= 0 && e == b)) return true;
      }
      return false;
    }
    for (int e : tour_edges) {
      const AuxEdge& ed = aux.edge(e);
      if ((ed.u == aux.origin() || ed.v == aux.origin()) && ed.set != AuxEdge::Set::e3) return true;
    }
    return false;
  }

  void close(Length length) {
    TspTour t;
    for (int e : path) {
      if (edges[static_cast<std::size_t>(e)].aux_id < 0) {
        t.parallel = true;
      } else {
        t.edges.push_back(edges[static_cast<std::size_t>(e)].aux_id);
      }
    }
    std::sort(t.edges.begin(), t.edges.end());
    if (!covers_all(t.edges, required) || !departs(t.edges)) return;
    t.length = length;
    for (int e : t.edges) {
      const AuxEdge& ed = aux.edge(e);
      if (in_south[static_cast<std::size_t>(ed.u)] != in_south[static_cast<std::size_t>(ed.v)]) {
        ++t.cross_aisle_crossings;
      }
    }
    if (bound && t.cross_aisle_crossings > 2) return;
    if (!seen.insert({t.edges, t.parallel}).second) return;
    best = std::min(best, length);
    found.push_back(std::move(t));
  }

  void dfs(int cur, Length length) {
    if (!collect_all && length > best) return;
    for (int e : incident[static_cast<std::size_t>(cur)]) {
      if (used_edge[static_cast<std::size_t>(e)]) continue;
      const TEdge& te = edges[static_cast<std::size_t>(e)];
      const int w = te.u == cur ? te.v : te.u;
      const Length next = length + te.length;
      if (w == aux.origin()) {
        if (path.empty()) continue;
        if (!collect_all && next > best) continue;
        path.push_back(e);
        close(next);
        path.pop_back();
        continue;
      }
      if (used_vertex[static_cast<std::size_t>(w)]) continue;
      used_edge[static_cast<std::size_t>(e)] = true;
      used_vertex[static_cast<std::size_t>(w)] = true;
      path.push_back(e);
      dfs(w, next);
      path.pop_back();
      used_vertex[static_cast<std::size_t>(w)] = false;
      used_edge[static_cast<std::size_t>(e)] = false;
    }
  }

  std::vector<TspTour> run() {
    if (aux.vertex_count() > 20) {
      throw ResourceLimitError("tour enumeration is limited to 20 auxiliary vertices");
    }
    used_vertex[static_cast<std::size_t>(aux.origin())] = true;
    dfs(aux.origin(), 0);
    std::sort(found.begin(), found.end(), [](const TspTour& a, const TspTour& b) {
      if (a.length != b.length) return a.length < b.length;
      if (a.cross_aisle_crossings != b.cross_aisle_crossings) {
        return a.cross_aisle_crossings < b.cross_aisle_crossings;
      }
      if (a.edges != b.edges) return a.edges < b.edges;
      return a.parallel < b.parallel;
    });
    return found;
  }
};

}  // namespace

std::vector<int> pick_subaisles(const Instance& instance, const PickingGraph& graph,
                                const std::vector<int>& batch) {
  std::vector<int> out;
  for (VertexId v : instance.locations(batch)) out.push_back(graph.subaisle_of(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VariableAssignment encode_walk_basic(const Instance& instance, const PickingGraph& graph,
                                     const Solution& solution, bool with_subaisle_variables) {
  const auto arcs = all_picker_arcs(instance, graph, solution);
  VariableAssignment a;
  put_common(a, instance, graph, solution, arcs);
  if (with_subaisle_variables) put_subaisle(a, graph, solution, arcs);
  return a;
}

VariableAssignment encode_walk_PG(const Instance& instance, const PickingGraph& graph,
                                  const Solution& solution) {
  const auto arcs = all_picker_arcs(instance, graph, solution);
  VariableAssignment a;
  put_common(a, instance, graph, solution, arcs);
  put_subaisle(a, graph, solution, arcs);
  put_gamma(a, graph, solution, arcs);
  return a;
}

VariableAssignment encode_walk_PF(const Instance& instance, const PickingGraph& graph,
                                  const Solution& solution) {
  const auto arcs = all_picker_arcs(instance, graph, solution);
  VariableAssignment a;
  put_common(a, instance, graph, solution, arcs);
  put_subaisle(a, graph, solution, arcs);
  put_gamma(a, graph, solution, arcs);
  const int n_art = graph.artificial_count();
  for (const Batch& b : solution.batches) {
    const int t = b.picker;
    const PickerArcs& p = arcs[static_cast<std::size_t>(t - 1)];
    for (VertexId v0 = 1; v0 < n_art; ++v0) {
      if (!p.visited[static_cast<std::size_t>(v0)]) continue;
      // breadth-first search towards the origin over gamma arcs
      std::vector<ArcId> via(static_cast<std::size_t>(n_art), -1);
      std::vector<bool> seen(static_cast<std::size_t>(n_art), false);
      std::deque<VertexId> queue{v0};
      seen[static_cast<std::size_t>(v0)] = true;
      while (!queue.empty() && !seen[0]) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (ArcId ra : graph.reduced_out_arcs(u)) {
          if (!p.gamma[static_cast<std::size_t>(ra)]) continue;
          const VertexId w = graph.reduced_arc(ra).head;
          if (seen[static_cast<std::size_t>(w)]) continue;
          seen[static_cast<std::size_t>(w)] = true;
          via[static_cast<std::size_t>(w)] = ra;
          queue.push_back(w);
        }
      }
      if (!seen[0]) {
        throw EncodingError("no gamma path from vertex " + std::to_string(v0) + " to the origin");
      }
      for (VertexId cur = 0; cur != v0;) {
        const Arc& arc = graph.reduced_arc(via[static_cast<std::size_t>(cur)]);
        a.set(names::sigma(t, v0, arc.tail, arc.head), 1);
        cur = arc.tail;
      }
    }
  }
  return a;
}

VariableAssignment encode_walk_PU(const Instance& instance, const PickingGraph& graph,
                                  const Solution& solution) {
  VariableAssignment a = encode_walk_PG(instance, graph, solution);
  for (const Batch& b : solution.batches) {
    const int t = b.picker;
    for (const Subaisle& sub : graph.subaisles()) {
      const auto chain = sub.chain();
      a.set(names::down(t, sub.index), a.get(names::x(t, chain[0], chain[1])));
      a.set(names::up(t, sub.index), a.get(names::x(t, chain[1], chain[0])));
    }
  }
  return a;
}

TspTour best_tsp_tour(const AuxiliaryGraph& aux, const std::vector<int>& subaisles,
                      bool with_cross_aisle_bound) {
  auto tours = TourSearch(aux, subaisles, with_cross_aisle_bound, false).run();
  if (tours.empty()) throw EncodingError("no tour covers the requested subaisles");
  return tours.front();
}

std::vector<TspTour> all_tsp_tours(const AuxiliaryGraph& aux, const std::vector<int>& subaisles,
                                   bool with_cross_aisle_bound) {
  return TourSearch(aux, subaisles, with_cross_aisle_bound, true).run();
}

TspTour s_shape_tour(const AuxiliaryGraph& aux, const SShapeRoute& route) {
  if (aux.variant() != AuxVariant::two_block) throw EncodingError("S-shape tours need the two_block graph");
  std::vector<int> subs = route.sequence;
  std::sort(subs.begin(), subs.end());
  for (const TspTour& tour : all_tsp_tours(aux, subs)) {
    if (tour.length == route.total_length) return tour;
  }
  throw EncodingError("no auxiliary tour matches the " + to_string(route.kind) + " route length " +
                      std::to_string(route.total_length));
}

VariableAssignment encode_tours(const Instance& instance, const AuxiliaryGraph& aux,
                                const std::vector<std::vector<int>>& batches,
                                const std::vector<TspTour>& tours) {
  VariableAssignment a;
  for (std::size_t k = 0; k < tours.size(); ++k) {
    const int t = static_cast<int>(k) + 1;
    const TspTour& tour = tours[k];
    std::vector<bool> on(static_cast<std::size_t>(aux.vertex_count()), false);
    for (int e : tour.edges) {
      const AuxEdge& ed = aux.edge(e);
      const bool star = aux.variant() == AuxVariant::two_block && ed.set == AuxEdge::Set::e3;
      a.set(star ? names::star(t, ed.u, ed.v) : names::x(t, ed.u, ed.v), 1);
      on[static_cast<std::size_t>(ed.u)] = true;
      on[static_cast<std::size_t>(ed.v)] = true;
    }
    if (tour.parallel) {
      a.set(names::parallel(t), 1);
      on[static_cast<std::size_t>(aux.edge(aux.subaisle_edge(0)).v)] = true;
    }
    for (int v = 1; v < aux.vertex_count(); ++v) {
      if (on[static_cast<std::size_t>(v)]) a.set(names::y(t, v), 1);
    }
    if (k < batches.size()) {
      for (int o : batches[k]) a.set(names::z(o + 1, t), 1);
    }
  }
  (void)instance;
  return a;
}

VariableAssignment encode_solution(const Instance& instance, const PickingGraph& graph,
                                   FormulationKind kind, const FormulationOptions& options,
                                   const Solution& solution) {
  switch (kind) {
    case FormulationKind::P_basic:
      return encode_walk_basic(instance, graph, solution, options.subaisle_cuts);
    case FormulationKind::P_A:
      return encode_walk_basic(instance, graph, solution, true);
    case FormulationKind::P_G:
      return encode_walk_PG(instance, graph, solution);
    case FormulationKind::P_F:
      return encode_walk_PF(instance, graph, solution);
    case FormulationKind::P_U:
      return encode_walk_PU(instance, graph, solution);
    case FormulationKind::P_U1:
    case FormulationKind::P_U2: {
      const AuxiliaryGraph aux(graph, kind == FormulationKind::P_U1 ? AuxVariant::single_block
                                                                    : AuxVariant::two_block);
      std::vector<std::vector<int>> batches(static_cast<std::size_t>(instance.pickers));
      for (const Batch& b : solution.batches) batches[static_cast<std::size_t>(b.picker - 1)] = b.orders;
      std::vector<TspTour> tours;
      for (const auto& batch : batches) {
        tours.push_back(best_tsp_tour(aux, pick_subaisles(instance, graph, batch),
                                      options.cross_aisle_bound));
      }
      return encode_tours(instance, aux, batches, tours);
    }
  }
  throw EncodingError("unknown formulation kind");
}

}  // namespace pickopt
