#include "pickopt/picking_graph.hpp"

#include <limits>
#include <queue>
#include <string>

#include "pickopt/errors.hpp"

namespace pickopt {

std::vector<VertexId> Subaisle::chain() const {
  std::vector<VertexId> out;
  out.reserve(locations.size() + 2);
  out.push_back(top);
  out.insert(out.end(), locations.begin(), locations.end());
  out.push_back(bottom);
  return out;
}

PickingGraph::PickingGraph(const WarehouseLayout& layout) : layout_(layout) {
  layout_.validate();
  const int n_art = artificial_count();
  const int n_sub = layout_.subaisle_count();
  const int L = layout_.locs_per_subaisle;
  const int n_vertices = n_art + n_sub * L;

  is_artificial_.assign(static_cast<std::size_t>(n_vertices), false);
  for (int v = 0; v < n_art; ++v) is_artificial_[static_cast<std::size_t>(v)] = true;

  subaisles_.resize(static_cast<std::size_t>(n_sub));
  for (int b = 0; b < layout_.n_blocks; ++b) {
    for (int a = 0; a < layout_.n_aisles; ++a) {
      Subaisle& sub = subaisles_[static_cast<std::size_t>(subaisle_index(b, a))];
      sub.index = subaisle_index(b, a);
      sub.aisle = a;
      sub.block = b;
      sub.top = artificial(b, a);
      sub.bottom = artificial(b + 1, a);
      for (int k = 0; k < L; ++k) sub.locations.push_back(picking(sub.index, k));
    }
  }

  auto add_edge = [this](VertexId u, VertexId v, Length len, Edge::Kind kind, int sub, int row) {
    Edge e;
    e.u = u;
    e.v = v;
    e.length = len;
    e.kind = kind;
    e.subaisle = sub;
    e.cross_aisle = row;
    edges_.push_back(e);
    return static_cast<EdgeId>(edges_.size() - 1);
  };
  auto add_reduced = [this](VertexId u, VertexId v, Length len, Edge::Kind kind, int sub, int row) {
    Edge e;
    e.u = u;
    e.v = v;
    e.length = len;
    e.kind = kind;
    e.subaisle = sub;
    e.cross_aisle = row;
    reduced_edges_.push_back(e);
    return static_cast<EdgeId>(reduced_edges_.size() - 1);
  };

  for (int a = 0; a < layout_.n_aisles; ++a) {
    for (int b = 0; b < layout_.n_blocks; ++b) {
      Subaisle& sub = subaisles_[static_cast<std::size_t>(subaisle_index(b, a))];
      const std::vector<VertexId> chain = sub.chain();
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        sub.edges.push_back(add_edge(chain[k], chain[k + 1], layout_.loc_spacing,
                                     Edge::Kind::vertical, sub.index, -1));
      }
      sub.reduced_edge = add_reduced(sub.top, sub.bottom, layout_.subaisle_length(),
                                     Edge::Kind::vertical, sub.index, -1);
    }
    if (a + 1 < layout_.n_aisles) {
      for (int c = 0; c < layout_.cross_aisle_count(); ++c) {
        add_edge(artificial(c, a), artificial(c, a + 1), layout_.aisle_spacing,
                 Edge::Kind::horizontal, -1, c);
        add_reduced(artificial(c, a), artificial(c, a + 1), layout_.aisle_spacing,
                    Edge::Kind::horizontal, -1, c);
      }
    }
  }

  auto make_arcs = [](const std::vector<Edge>& es, std::vector<Arc>& arcs) {
    arcs.reserve(es.size() * 2);
    for (std::size_t e = 0; e < es.size(); ++e) {
      const auto id = static_cast<EdgeId>(e);
      arcs.push_back({es[e].u, es[e].v, es[e].length, id});
      arcs.push_back({es[e].v, es[e].u, es[e].length, id});
    }
  };
  make_arcs(edges_, arcs_);
  make_arcs(reduced_edges_, reduced_arcs_);

  const auto nv = static_cast<std::size_t>(n_vertices);
  incident_.resize(nv);
  out_.resize(nv);
  in_.resize(nv);
  reduced_out_.resize(nv);
  reduced_in_.resize(nv);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    incident_[static_cast<std::size_t>(edges_[e].u)].push_back(static_cast<EdgeId>(e));
    incident_[static_cast<std::size_t>(edges_[e].v)].push_back(static_cast<EdgeId>(e));
  }
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    out_[static_cast<std::size_t>(arcs_[a].tail)].push_back(static_cast<ArcId>(a));
    in_[static_cast<std::size_t>(arcs_[a].head)].push_back(static_cast<ArcId>(a));
  }
  for (std::size_t a = 0; a < reduced_arcs_.size(); ++a) {
    reduced_out_[static_cast<std::size_t>(reduced_arcs_[a].tail)].push_back(static_cast<ArcId>(a));
    reduced_in_[static_cast<std::size_t>(reduced_arcs_[a].head)].push_back(static_cast<ArcId>(a));
  }
}

VertexId PickingGraph::artificial(int cross_aisle, int aisle) const {
  if (cross_aisle < 0 || cross_aisle >= layout_.cross_aisle_count() || aisle < 0 ||
      aisle >= layout_.n_aisles) {
    throw ValidationError("artificial location out of range");
  }
  return cross_aisle * layout_.n_aisles + aisle;
}

VertexId PickingGraph::picking(int subaisle, int slot) const {
  if (subaisle < 0 || subaisle >= layout_.subaisle_count() || slot < 0 ||
      slot >= layout_.locs_per_subaisle) {
    throw ValidationError("picking location out of range");
  }
  return artificial_count() + subaisle * layout_.locs_per_subaisle + slot;
}

int PickingGraph::cross_aisle_of(VertexId v) const { return v / layout_.n_aisles; }
int PickingGraph::aisle_of(VertexId v) const {
  if (is_artificial(v)) return v % layout_.n_aisles;
  return subaisle(subaisle_of(v)).aisle;
}
int PickingGraph::subaisle_of(VertexId v) const {
  return (v - artificial_count()) / layout_.locs_per_subaisle;
}
int PickingGraph::slot_of(VertexId v) const {
  return (v - artificial_count()) % layout_.locs_per_subaisle;
}

std::span<const EdgeId> PickingGraph::incident_edges(VertexId v) const {
  return incident_[static_cast<std::size_t>(v)];
}
std::span<const ArcId> PickingGraph::out_arcs(VertexId v) const {
  return out_[static_cast<std::size_t>(v)];
}
std::span<const ArcId> PickingGraph::in_arcs(VertexId v) const {
  return in_[static_cast<std::size_t>(v)];
}
std::span<const ArcId> PickingGraph::reduced_out_arcs(VertexId v) const {
  return reduced_out_[static_cast<std::size_t>(v)];
}
std::span<const ArcId> PickingGraph::reduced_in_arcs(VertexId v) const {
  return reduced_in_[static_cast<std::size_t>(v)];
}

std::optional<ArcId> PickingGraph::find_arc(VertexId tail, VertexId head) const {
  for (ArcId a : out_arcs(tail)) {
    if (arc(a).head == head) return a;
  }
  return std::nullopt;
}

std::optional<ArcId> PickingGraph::find_reduced_arc(VertexId tail, VertexId head) const {
  for (ArcId a : reduced_out_arcs(tail)) {
    if (reduced_arc(a).head == head) return a;
  }
  return std::nullopt;
}

ArcId PickingGraph::arc_between(VertexId tail, VertexId head) const {
  if (auto a = find_arc(tail, head)) return *a;
  throw std::logic_error("no arc " + std::to_string(tail) + "->" + std::to_string(head));
}

ArcId PickingGraph::reduced_arc_between(VertexId tail, VertexId head) const {
  if (auto a = find_reduced_arc(tail, head)) return *a;
  throw std::logic_error("no reduced arc " + std::to_string(tail) + "->" + std::to_string(head));
}

VertexId PickingGraph::north(VertexId v) const {
  const int slot = slot_of(v);
  const Subaisle& sub = subaisle(subaisle_of(v));
  return slot == 0 ? sub.top : sub.locations[static_cast<std::size_t>(slot - 1)];
}

VertexId PickingGraph::south(VertexId v) const {
  const int slot = slot_of(v);
  const Subaisle& sub = subaisle(subaisle_of(v));
  return slot + 1 == layout_.locs_per_subaisle ? sub.bottom
                                               : sub.locations[static_cast<std::size_t>(slot + 1)];
}

std::optional<VertexId> PickingGraph::q_north(VertexId v) const {
  const int c = cross_aisle_of(v);
  if (c == 0) return std::nullopt;
  return artificial(c - 1, aisle_of(v));
}
std::optional<VertexId> PickingGraph::q_south(VertexId v) const {
  const int c = cross_aisle_of(v);
  if (c == layout_.n_blocks) return std::nullopt;
  return artificial(c + 1, aisle_of(v));
}
std::optional<VertexId> PickingGraph::q_east(VertexId v) const {
  const int a = aisle_of(v);
  if (a + 1 == layout_.n_aisles) return std::nullopt;
  return v + 1;
}
std::optional<VertexId> PickingGraph::q_west(VertexId v) const {
  if (aisle_of(v) == 0) return std::nullopt;
  return v - 1;
}

namespace {
std::vector<ArcId> boundary(const std::vector<Arc>& arcs, const std::vector<bool>& in_set,
                            bool outgoing) {
  std::vector<ArcId> out;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const bool tail_in = in_set[static_cast<std::size_t>(arcs[a].tail)];
    const bool head_in = in_set[static_cast<std::size_t>(arcs[a].head)];
    if (outgoing ? (tail_in && !head_in) : (!tail_in && head_in)) {
      out.push_back(static_cast<ArcId>(a));
    }
  }
  return out;
}
}  // namespace

std::vector<ArcId> PickingGraph::delta_out(const std::vector<bool>& in_set) const {
  return boundary(arcs_, in_set, true);
}
std::vector<ArcId> PickingGraph::delta_in(const std::vector<bool>& in_set) const {
  return boundary(arcs_, in_set, false);
}
std::vector<ArcId> PickingGraph::eta_out(const std::vector<bool>& in_set) const {
  return boundary(reduced_arcs_, in_set, true);
}
std::vector<ArcId> PickingGraph::eta_in(const std::vector<bool>& in_set) const {
  return boundary(reduced_arcs_, in_set, false);
}

PickingGraph build_graph(const WarehouseLayout& layout) { return PickingGraph(layout); }

std::vector<Length> dijkstra(const PickingGraph& graph, VertexId source) {
  constexpr Length kInf = std::numeric_limits<Length>::max();
  std::vector<Length> dist(static_cast<std::size_t>(graph.vertex_count()), kInf);
  using Item = std::pair<Length, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(source)] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(u)]) continue;
    for (ArcId a : graph.out_arcs(u)) {
      const Arc& arc = graph.arc(a);
      const Length nd = d + arc.length;
      if (nd < dist[static_cast<std::size_t>(arc.head)]) {
        dist[static_cast<std::size_t>(arc.head)] = nd;
        heap.push({nd, arc.head});
      }
    }
  }
  return dist;
}

Length shortest_distance(const PickingGraph& graph, VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= graph.vertex_count() || v >= graph.vertex_count()) {
    throw ValidationError("vertex out of range");
  }
  return dijkstra(graph, u)[static_cast<std::size_t>(v)];
}

DistanceTable::DistanceTable(const PickingGraph& graph)
    : n_(static_cast<std::size_t>(graph.vertex_count())) {
  dist_.resize(n_ * n_);
  for (std::size_t u = 0; u < n_; ++u) {
    const auto row = dijkstra(graph, static_cast<VertexId>(u));
    std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(u * n_));
  }
}

}  // namespace pickopt
