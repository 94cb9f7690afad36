#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pickopt/layout.hpp"

namespace pickopt {

struct Edge {
  enum class Kind { vertical, horizontal };
  VertexId u = kNoVertex;  // north end for vertical edges, west end for horizontal ones
  VertexId v = kNoVertex;
  Length length = 0;
  Kind kind = Kind::vertical;
  int subaisle = -1;     // vertical edges only
  int cross_aisle = -1;  // horizontal edges only
};

// A directed arc. Arc 2e runs edge e from u to v, arc 2e+1 from v to u.
struct Arc {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  Length length = 0;
  EdgeId edge = -1;
};

// One subaisle i: the chain f(i), V_sub(i) (north to south), l(i).
struct Subaisle {
  int index = 0;
  int aisle = 0;
  int block = 0;
  VertexId top = kNoVertex;     // f(i)
  VertexId bottom = kNoVertex;  // l(i)
  std::vector<VertexId> locations;
  std::vector<EdgeId> edges;    // chain edges, north to south; size = locations.size() + 1
  EdgeId reduced_edge = -1;     // e(i) in the reduced graph

  std::vector<VertexId> chain() const;
};

// Sparse picking graph G = (V, E), its directed version and the reduced graph
// over artificial locations. Vertex ids: artificial (cross-aisle c, aisle a) is
// c * n_aisles + a, so the origin s is vertex 0; picking locations follow,
// subaisle-major. Edges are ordered aisle by aisle (the subaisle chains of the
// aisle, then the cross-aisle edges leaving it eastwards).
class PickingGraph {
 public:
  explicit PickingGraph(const WarehouseLayout& layout);

  const WarehouseLayout& layout() const { return layout_; }

  int vertex_count() const { return static_cast<int>(is_artificial_.size()); }
  int artificial_count() const { return layout_.n_aisles * layout_.cross_aisle_count(); }
  int picking_count() const { return vertex_count() - artificial_count(); }
  VertexId origin() const { return 0; }
  bool is_artificial(VertexId v) const { return is_artificial_[static_cast<std::size_t>(v)]; }

  VertexId artificial(int cross_aisle, int aisle) const;
  VertexId picking(int subaisle, int slot) const;
  // Cross-aisle row / aisle column of an artificial vertex.
  int cross_aisle_of(VertexId v) const;
  int aisle_of(VertexId v) const;
  // Subaisle / chain position of a picking vertex.
  int subaisle_of(VertexId v) const;
  int slot_of(VertexId v) const;
  int subaisle_index(int block, int aisle) const { return block * layout_.n_aisles + aisle; }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Arc> arcs() const { return arcs_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }

  // Reduced graph over V_I: one edge e(i) per subaisle plus all cross-aisle edges.
  std::span<const Edge> reduced_edges() const { return reduced_edges_; }
  std::span<const Arc> reduced_arcs() const { return reduced_arcs_; }
  const Arc& reduced_arc(ArcId a) const { return reduced_arcs_[static_cast<std::size_t>(a)]; }

  std::span<const Subaisle> subaisles() const { return subaisles_; }
  const Subaisle& subaisle(int i) const { return subaisles_[static_cast<std::size_t>(i)]; }

  std::span<const EdgeId> incident_edges(VertexId v) const;
  std::span<const ArcId> out_arcs(VertexId v) const;
  std::span<const ArcId> in_arcs(VertexId v) const;
  std::span<const ArcId> reduced_out_arcs(VertexId v) const;
  std::span<const ArcId> reduced_in_arcs(VertexId v) const;

  std::optional<ArcId> find_arc(VertexId tail, VertexId head) const;
  std::optional<ArcId> find_reduced_arc(VertexId tail, VertexId head) const;
  ArcId arc_between(VertexId tail, VertexId head) const;          // throws if absent
  ArcId reduced_arc_between(VertexId tail, VertexId head) const;  // throws if absent

  // n(v) / s(v) for a picking location.
  VertexId north(VertexId v) const;
  VertexId south(VertexId v) const;
  // Q_N, Q_S, Q_E, Q_W for an artificial location.
  std::optional<VertexId> q_north(VertexId v) const;
  std::optional<VertexId> q_south(VertexId v) const;
  std::optional<VertexId> q_east(VertexId v) const;
  std::optional<VertexId> q_west(VertexId v) const;

  // Boundary arc sets for a vertex set given as a membership mask over V.
  std::vector<ArcId> delta_out(const std::vector<bool>& in_set) const;
  std::vector<ArcId> delta_in(const std::vector<bool>& in_set) const;
  // Same over the reduced graph (mask over V, only V_I entries matter).
  std::vector<ArcId> eta_out(const std::vector<bool>& in_set) const;
  std::vector<ArcId> eta_in(const std::vector<bool>& in_set) const;

 private:
  WarehouseLayout layout_;
  std::vector<bool> is_artificial_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<Edge> reduced_edges_;
  std::vector<Arc> reduced_arcs_;
  std::vector<Subaisle> subaisles_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::vector<ArcId>> out_, in_, reduced_out_, reduced_in_;
};

PickingGraph build_graph(const WarehouseLayout& layout);

// Exact shortest-path length in G (Dijkstra).
Length shortest_distance(const PickingGraph& graph, VertexId u, VertexId v);

// All-pairs shortest distances over G, one Dijkstra per source.
class DistanceTable {
 public:
  explicit DistanceTable(const PickingGraph& graph);
  Length operator()(VertexId u, VertexId v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  }

 private:
  std::size_t n_;
  std::vector<Length> dist_;
};

// Single-source distances over G.
std::vector<Length> dijkstra(const PickingGraph& graph, VertexId source);

}  // namespace pickopt
